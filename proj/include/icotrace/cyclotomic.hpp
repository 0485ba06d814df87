#pragma once

#include <complex>
#include <string>
#include <vector>

#include "icotrace/rational.hpp"

namespace icotrace {

// Exact element of the cyclotomic field Q(zeta_N), stored on the power basis
// 1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial.
// Equality of reduced coefficient vectors is equality of field elements.
class Cyclotomic {
public:
    Cyclotomic() : modulus_(1), coeffs_(1) {}
    Cyclotomic(const Rational& r, unsigned modulus = 1);
    Cyclotomic(long long v) : Cyclotomic(Rational(v)) {}

    static Cyclotomic zero(unsigned modulus = 1) { return Cyclotomic(Rational(0), modulus); }
    static Cyclotomic one(unsigned modulus = 1) { return Cyclotomic(Rational(1), modulus); }
    // zeta_N^k
    static Cyclotomic root_of_unity(unsigned N, long long k);
    // exact primitive-root sums used throughout the icosahedral tables:
    // u = -z5^2 - z5^3 (the positive root of x^2-x-1), v = 1 - u.
    static Cyclotomic golden_u(unsigned modulus = 60);
    static Cyclotomic golden_v(unsigned modulus = 60);

    // vector-space data
    unsigned modulus() const { return modulus_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws unless is_rational()

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inv() const;

    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // total order for use as map keys (compares promoted coefficient vectors)
    bool operator<(const Cyclotomic& o) const;

    // Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
    Cyclotomic galois_map(long long k) const;
    Cyclotomic conj() const;
    Cyclotomic pow(long long e) const;

    // embeds into C along zeta_N -> exp(2*pi*i/N); precision must be >= 53
    // (IEEE double carries 53 mantissa bits; that is the working precision).
    std::complex<double> embed(unsigned precision_bits = 53) const;

    // rewrite in Q(zeta_M); M must be divisible by N and within the bound
    Cyclotomic promoted(unsigned M) const;

    std::string to_string() const;

    // promotion guard: lcm targets above this throw
    static unsigned modulus_bound();
    static void set_modulus_bound(unsigned b);

    // Phi_N as integer coefficients c[0..deg], monic; cached.
    static const std::vector<BigInt>& cyclotomic_polynomial(unsigned N);
    static unsigned totient(unsigned N);

private:
    unsigned modulus_;
    std::vector<Rational> coeffs_;

    static void align(Cyclotomic& a, Cyclotomic& b);
    static std::vector<Rational> reduce(std::vector<Rational> poly, unsigned N);
    explicit Cyclotomic(unsigned modulus, std::vector<Rational> reduced)
        : modulus_(modulus), coeffs_(std::move(reduced)) {}
};

}  // namespace icotrace
