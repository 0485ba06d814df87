#include "icotrace/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icotrace {

namespace {

unsigned g_modulus_bound = 5040;

std::map<unsigned, std::vector<BigInt>>& phi_cache() {
    static std::map<unsigned, std::vector<BigInt>> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

// exact division of integer polynomials, a = q * b with b monic-ish (here the
// divisor always divides exactly)
std::vector<BigInt> poly_div_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    if (b.empty() || b.back().is_zero()) throw std::domain_error("poly_div_exact: bad divisor");
    std::vector<BigInt> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
    for (size_t i = q.size(); i-- > 0;) {
        BigInt c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        if (!c.is_zero())
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (!c.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }

}  // namespace

unsigned Cyclotomic::totient(unsigned N) {
    unsigned result = N, n = N;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(unsigned N) {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto it = phi_cache().find(N);
    if (it != phi_cache().end()) return it->second;
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed bottom-up.
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= N; ++d)
        if (N % d == 0) divisors.push_back(d);
    for (unsigned d : divisors) {
        if (phi_cache().count(d)) continue;
        std::vector<BigInt> num(d + 1, BigInt(0));
        num[0] = BigInt(-1);
        num[d] = BigInt(1);
        for (unsigned e : divisors) {
            if (e >= d || d % e != 0) continue;
            num = poly_div_exact(std::move(num), phi_cache().at(e));
        }
        phi_cache().emplace(d, std::move(num));
    }
    return phi_cache().at(N);
}

unsigned Cyclotomic::modulus_bound() { return g_modulus_bound; }
void Cyclotomic::set_modulus_bound(unsigned b) { g_modulus_bound = b; }

Cyclotomic::Cyclotomic(const Rational& r, unsigned modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("Cyclotomic: modulus 0");
    coeffs_.assign(std::max(1u, totient(modulus)), Rational(0));
    coeffs_[0] = r;
}

std::vector<Rational> Cyclotomic::reduce(std::vector<Rational> poly, unsigned N) {
    const auto& phi = cyclotomic_polynomial(N);
    size_t deg = phi.size() - 1;  // = totient(N)
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c.is_zero()) continue;
        poly[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(std::max<size_t>(deg, 1), Rational(0));
    return poly;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned N, long long k) {
    if (N == 0) throw std::invalid_argument("root_of_unity: N = 0");
    long long kk = ((k % (long long)N) + N) % N;
    std::vector<Rational> poly(kk + 1, Rational(0));
    poly[kk] = Rational(1);
    return Cyclotomic(N, reduce(std::move(poly), N));
}

Cyclotomic Cyclotomic::golden_u(unsigned modulus) {
    if (modulus % 5 != 0) throw std::invalid_argument("golden_u: modulus not divisible by 5");
    unsigned s = modulus / 5;
    return -(root_of_unity(modulus, 2 * s) + root_of_unity(modulus, 3 * s));
}

Cyclotomic Cyclotomic::golden_v(unsigned modulus) {
    return Cyclotomic(Rational(1), modulus) - golden_u(modulus);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0].is_one(); }

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: not rational: " + to_string());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned M) const {
    if (M == modulus_) return *this;
    if (M % modulus_ != 0) throw std::invalid_argument("Cyclotomic: bad promotion target");
    if (M > g_modulus_bound)
        throw std::overflow_error("Cyclotomic: modulus promotion beyond configured bound");
    unsigned step = M / modulus_;
    std::vector<Rational> poly((size_t)(coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return Cyclotomic(M, reduce(std::move(poly), M));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.modulus_ == b.modulus_) return;
    unsigned l = a.modulus_ / gcd_u(a.modulus_, b.modulus_) * b.modulus_;
    a = a.promoted(l);
    b = b.promoted(l);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(a.modulus_, reduce(std::move(prod), a.modulus_));
}

// Extended Euclid in Q[x] against Phi_N.
Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    if (is_rational()) return Cyclotomic(coeffs_[0].inv(), modulus_);
    const auto& phi_i = cyclotomic_polynomial(modulus_);
    std::vector<Rational> r0(phi_i.size());
    for (size_t i = 0; i < phi_i.size(); ++i) r0[i] = Rational(phi_i[i]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of *this in combo
    auto deg = [](const std::vector<Rational>& p) { return (long)p.size() - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> q(deg(r0) >= deg(r1) ? deg(r0) - deg(r1) + 1 : 0, Rational(0));
        std::vector<Rational> rem = r0;
        for (long i = (long)q.size() - 1; i >= 0; --i) {
            Rational c = rem[i + deg(r1)] / r1.back();
            q[i] = c;
            if (c.is_zero()) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        // s_new = s0 - q * s1
        std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
        if (r1.empty()) throw std::logic_error("Cyclotomic: gcd vanished (not coprime?)");
    }
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    Rational c = r1[0].inv();
    for (auto& x : s1) x *= c;
    return Cyclotomic(modulus_, reduce(std::move(s1), modulus_));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inv(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (modulus_ == o.modulus_) return coeffs_ == o.coeffs_;
    Cyclotomic a = *this, b = o;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

Cyclotomic Cyclotomic::galois_map(long long k) const {
    long long kk = ((k % (long long)modulus_) + modulus_) % modulus_;
    if (std::gcd((unsigned long long)kk, (unsigned long long)modulus_) != 1)
        throw std::invalid_argument("galois_map: k not coprime to modulus");
    std::vector<Rational> poly(modulus_, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        poly[(size_t)((j * (unsigned long long)kk) % modulus_)] += coeffs_[j];
    }
    return Cyclotomic(modulus_, reduce(std::move(poly), modulus_));
}

Cyclotomic Cyclotomic::conj() const {
    if (modulus_ <= 2) return *this;
    return galois_map((long long)modulus_ - 1);
}

Cyclotomic Cyclotomic::pow(long long e) const {
    Cyclotomic base = *this;
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    Cyclotomic r = Cyclotomic::one(modulus_);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::complex<double> Cyclotomic::embed(unsigned precision_bits) const {
    if (precision_bits < 53)
        throw std::invalid_argument("Cyclotomic::embed: precision below 53 bits");
    std::complex<double> acc(0.0, 0.0);
    const double theta = 2.0 * M_PI / (double)modulus_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        acc += coeffs_[j].to_double() *
               std::complex<double>(std::cos(theta * (double)j), std::sin(theta * (double)j));
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return coeffs_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        Rational c = coeffs_[j];
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.sign() < 0 ? -c : c;
        if (j == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << "z" << modulus_;
            if (j > 1) os << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace icotrace
