#include <complex>
#include <random>

#include "doctest.h"
#include "icotrace/cyclotomic.hpp"

using namespace icotrace;

TEST_CASE("bigint arithmetic against 64-bit oracle") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = (long long)(rng() % 2000001) - 1000000;
        long long b = (long long)(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_longlong() == a + b);
        CHECK((A - B).to_longlong() == a - b);
        CHECK((A * B).to_longlong() == a * b);
        if (b != 0) {
            CHECK((A / B).to_longlong() == a / b);
            CHECK((A % B).to_longlong() == a % b);
        }
    }
}

TEST_CASE("bigint multi-limb divmod identity") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + (int)(rng() % 5), lb = 1 + (int)(rng() % 3);
        for (int i = 0; i < la; ++i) a = a * BigInt((long long)(rng() % 1000000000) + 1);
        for (int i = 0; i < lb; ++i) b = b * BigInt((long long)(rng() % 1000000000) + 1);
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint decimal round trip") {
    BigInt a("123456789012345678901234567890");
    CHECK(a.to_string() == "123456789012345678901234567890");
    BigInt b("-987654321098765432109876543210");
    CHECK((a * b).to_string() ==
          "-121932631137021795226185032733622923332237463801111263526900");
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)).to_longlong() == 21);
}

TEST_CASE("rational normalization") {
    Rational r(6, -4);
    CHECK(r.num().to_longlong() == -3);
    CHECK(r.den().to_longlong() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(3, 7).inv() == Rational(7, 3));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("root of unity identities") {
    auto z5 = Cyclotomic::root_of_unity(5, 1);
    CHECK((z5 * Cyclotomic::root_of_unity(5, 4)).is_one());
    CHECK(z5.pow(5).is_one());
    auto u = Cyclotomic::golden_u(5), v = Cyclotomic::golden_v(5);
    CHECK((u + v) == Cyclotomic(Rational(1), 5));
    CHECK((u * v) == Cyclotomic(Rational(-1), 5));
    // u is the positive root of x^2 - x - 1
    CHECK(std::abs(u.embed().real() - 1.6180339887498949) < 1e-12);
    CHECK(std::abs(u.embed().imag()) < 1e-12);
    CHECK(std::abs((u - Cyclotomic(Rational(1), 5)).embed().real() - 0.6180339887498949) < 1e-12);
}

TEST_CASE("galois maps") {
    CHECK(Cyclotomic(Rational(7), 5).galois_map(2) == Cyclotomic(Rational(7), 5));
    auto u = Cyclotomic::golden_u(5), v = Cyclotomic::golden_v(5);
    CHECK(u.galois_map(2) == v);
    auto z5 = Cyclotomic::root_of_unity(5, 1);
    CHECK(z5.galois_map(1) == z5);
    CHECK_THROWS(z5.galois_map(5));
    // composition law: map(k) then map(k') = map(k k' mod N)
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        unsigned N = 60;
        std::vector<long long> units{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53, 59};
        long long k1 = units[rng() % units.size()], k2 = units[rng() % units.size()];
        Cyclotomic a = Cyclotomic::root_of_unity(N, (long long)(rng() % N)) +
                       Cyclotomic(Rational((long long)(rng() % 7) - 3, 1 + (long long)(rng() % 4)), N);
        CHECK(a.galois_map(k1).galois_map(k2) == a.galois_map((k1 * k2) % N));
    }
    // conj = galois_map(N-1)
    auto z12 = Cyclotomic::root_of_unity(12, 1);
    CHECK(z12.conj() == z12.galois_map(11));
}

TEST_CASE("field axioms on random samples (exact)") {
    std::mt19937_64 rng(2024);
    auto rand_elt = [&](unsigned N) {
        Cyclotomic acc = Cyclotomic::zero(N);
        for (int t = 0; t < 3; ++t) {
            Rational c((long long)(rng() % 11) - 5, 1 + (long long)(rng() % 3));
            acc += Cyclotomic(c, N) * Cyclotomic::root_of_unity(N, (long long)(rng() % N));
        }
        return acc;
    };
    for (int iter = 0; iter < 60; ++iter) {
        unsigned N = (iter % 2) ? 12 : 60;
        Cyclotomic a = rand_elt(N), b = rand_elt(N), c = rand_elt(N);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
    CHECK_THROWS(Cyclotomic::zero(5).inv());
}

TEST_CASE("complex embedding is a homomorphism within eps") {
    std::mt19937_64 rng(31337);
    auto rand_elt = [&](unsigned N) {
        Cyclotomic acc = Cyclotomic::zero(N);
        for (int t = 0; t < 3; ++t)
            acc += Cyclotomic(Rational((long long)(rng() % 9) - 4), N) *
                   Cyclotomic::root_of_unity(N, (long long)(rng() % N));
        return acc;
    };
    for (int iter = 0; iter < 40; ++iter) {
        Cyclotomic a = rand_elt(60), b = rand_elt(60);
        auto ea = a.embed(), eb = b.embed();
        CHECK(std::abs((a * b).embed() - ea * eb) < 1e-8);
        CHECK(std::abs((a + b).embed() - (ea + eb)) < 1e-9);
    }
    CHECK(std::abs(Cyclotomic::one().embed() - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(Cyclotomic::root_of_unity(4, 1).embed() - std::complex<double>(0, 1)) < 1e-12);
    CHECK_THROWS(Cyclotomic::one().embed(32));
}

TEST_CASE("promotion and cross-modulus equality") {
    auto z5_at5 = Cyclotomic::root_of_unity(5, 1);
    auto z5_at60 = Cyclotomic::root_of_unity(60, 12);
    CHECK(z5_at5 == z5_at60);
    CHECK(Cyclotomic::golden_u(5) == Cyclotomic::golden_u(60));
    CHECK((z5_at5 + Cyclotomic::root_of_unity(12, 1)).modulus() == 60);
    // promotion beyond the configured bound must throw
    unsigned old_bound = Cyclotomic::modulus_bound();
    Cyclotomic::set_modulus_bound(59);
    CHECK_THROWS(z5_at5.promoted(60));
    Cyclotomic::set_modulus_bound(old_bound);
}
