#include "icotrace/euler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icotrace/charops.hpp"
#include "icotrace/hecke.hpp"

namespace icotrace {

namespace {
using Cplx = std::complex<double>;
}

std::complex<double> EulerData::log_value(double s) const {
    Cplx acc(0.0, 0.0);
    for (const auto& f : factors) {
        double x = std::exp(-s * f.log_norm);
        Cplx poly(0.0, 0.0);
        double xp = 1.0;
        for (const auto& c : f.inv_poly) {
            poly += c * xp;
            xp *= x;
        }
        acc -= std::log(poly) * (double)f.count;
    }
    return acc;
}

double EulerData::value(double s) const {
    Cplx lv = log_value(s);
    return std::exp(lv.real()) * std::cos(lv.imag());
}

EulerData rankin_selberg_data(const ClassFunction& chi1, const ClassFunction& chi2,
                              const PlaceStructure& places, long long truncation_bound) {
    EulerData out;
    out.truncation_bound = truncation_bound;
    // pole order: multiplicity of the trivial character in chi1 * conj(chi2)
    {
        Cyclotomic ip = inner_product(chi1, chi2);
        if (!ip.is_rational() || !ip.rational_part().is_integer())
            throw std::logic_error("rankin_selberg_data: non-integral pairing");
        out.pole_order = (int)ip.rational_part().num().to_longlong();
    }
    // cache per (class, degree): the local inverse polynomial
    std::map<std::pair<int, int>, std::vector<Cplx>> cache;
    for (const auto& pl : places.places) {
        auto key = std::make_pair(pl.level_class, pl.degree);
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto a1 = character_eigenvalues(chi1, pl.level_class);
            auto a2 = character_eigenvalues(chi2, pl.level_class);
            // dual spectrum: conjugates (roots of unity: inverses)
            std::vector<Cyclotomic> spec;
            for (const auto& x : a1)
                for (const auto& y : a2) spec.push_back(x * y.conj());
            // det(1 - M x) = prod (1 - alpha x), expanded
            std::vector<Cplx> poly{1.0};
            for (const auto& alpha : spec) {
                Cplx a = alpha.embed();
                std::vector<Cplx> next(poly.size() + 1, Cplx(0, 0));
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i];
                    next[i + 1] -= poly[i] * a;
                }
                poly = std::move(next);
            }
            it = cache.emplace(key, std::move(poly)).first;
        }
        EulerFactor f;
        f.log_norm = pl.log_norm();
        f.norm = f.log_norm < 42.0 ? pl.norm() : 0;  // huge norms only matter via log
        f.inv_poly = it->second;
        f.count = pl.count;
        out.factors.push_back(std::move(f));
    }
    return out;
}

EulerData zeta_power_data(const PlaceStructure& places, int power, long long truncation_bound) {
    EulerData out;
    out.truncation_bound = truncation_bound;
    out.pole_order = power;
    for (const auto& pl : places.places) {
        EulerFactor f;
        f.log_norm = pl.log_norm();
        f.norm = f.log_norm < 42.0 ? pl.norm() : 0;  // huge norms only matter via log
        // (1 - x)^power as the inverse polynomial, before count
        std::vector<Cplx> poly{1.0};
        for (int t = 0; t < power; ++t) {
            std::vector<Cplx> next(poly.size() + 1, Cplx(0, 0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] -= poly[i];
            }
            poly = std::move(next);
        }
        f.inv_poly = std::move(poly);
        f.count = pl.count;
        out.factors.push_back(std::move(f));
    }
    return out;
}

namespace {

// exponential integral E1(x) for x > 0
double expint_e1(double x) {
    if (x <= 0) throw std::invalid_argument("expint_e1: x must be positive");
    if (x <= 1.0) {
        // series: E1 = -gamma - log x + sum (-1)^{n+1} x^n / (n n!)
        const double gamma = 0.57721566490153286;
        double sum = 0.0, term = 1.0;
        for (int n = 1; n <= 40; ++n) {
            term *= -x / n;
            sum -= term / n;
        }
        return -gamma - std::log(x) + sum;
    }
    // Lentz continued fraction: E1 = e^{-x} / (x + 1/(1 + 1/(x + 2/(1 + ...))))
    double b = x + 1.0, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i <= 200; ++i) {
        double a = -(double)i * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x);
}

}  // namespace

PoleProfile laurent_at_1(const EulerData& data, int k) {
    PoleProfile prof;
    prof.order = k;
    if (k == 0) return prof;
    if (data.pole_order != k)
        throw std::invalid_argument("laurent_at_1: k disagrees with the constituent multiplicity");
    double logB = std::log((double)std::max<long long>(data.truncation_bound, 2));
    if (logB < 6.0)
        throw std::runtime_error(
            "laurent_at_1: truncation bound too small for a stable window (non-stabilization)");
    // The truncated product misses the prime tail q > B. Along the k polar
    // directions the missing log-tail is sum_{q>B} q^{-s} per direction,
    // completed here by the logarithmic-integral model E1((s-1) log B); the
    // nonpolar directions' tails converge and average out. After completion
    // H(s) = (s-1)^k L(s) exp(k E1((s-1) log B)) is polynomial-stable near
    // s = 1 and is sampled on the 10^-3-spaced stencil.
    const double h = 1e-3;
    int nodes = k + 1;
    std::vector<double> xs(nodes), ys(nodes);
    for (int i = 0; i < nodes; ++i) {
        double delta = (i + 1) * h;
        double s = 1.0 + delta;
        double logH = k * std::log(delta) + data.log_value(s).real() +
                      k * expint_e1(delta * logB);
        if (logH > 700.0)
            throw std::runtime_error("laurent_at_1: completed product overflows (non-stabilization)");
        xs[i] = delta;
        ys[i] = std::exp(logH);
    }
    // divided-difference (Newton) interpolation, then expand around 0
    std::vector<double> dd = ys;
    for (int lev = 1; lev < nodes; ++lev)
        for (int i = nodes - 1; i >= lev; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lev]);
    // newton form -> monomial coefficients in (s-1)
    std::vector<double> mono(nodes, 0.0);
    std::vector<double> basis{1.0};  // prod (x - xs[j])
    for (int i = 0; i < nodes; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) mono[j] += dd[i] * basis[j];
        // basis *= (x - xs[i])
        std::vector<double> nb(basis.size() + 1, 0.0);
        for (size_t j = 0; j < basis.size(); ++j) {
            nb[j + 1] += basis[j];
            nb[j] -= basis[j] * xs[i];
        }
        basis = std::move(nb);
    }
    // H(s) ~ c_{-k} + c_{-k+1}(s-1) + ... + c_{-1}(s-1)^{k-1} + O((s-1)^k)
    prof.coeffs.assign(k, 0.0);
    for (int i = 0; i < k; ++i) prof.coeffs[i] = mono[i];  // coeffs[i] = c_{-k+i}
    if (!(std::abs(prof.c_leading()) > 0))
        throw std::runtime_error("laurent_at_1: vanishing leading coefficient (non-stabilization)");
    return prof;
}

std::vector<double> dirichlet_coefficients_numeric(const EulerData& data, long long M) {
    std::vector<double> lam(M + 1, 0.0);
    lam[1] = 1.0;
    for (const auto& f : data.factors) {
        if (f.norm <= 0 || f.norm > M) continue;
        // local series coefficients of 1/inv_poly up to q^j <= M
        int jmax = 0;
        long long qq = 1;
        while (qq <= M / f.norm) {
            qq *= f.norm;
            ++jmax;
        }
        std::vector<double> c(jmax + 1, 0.0);
        c[0] = 1.0;
        for (int j = 1; j <= jmax; ++j) {
            double acc = 0.0;
            for (size_t t = 1; t < f.inv_poly.size() && (int)t <= j; ++t)
                acc -= f.inv_poly[t].real() * c[j - t];
            c[j] = acc;
        }
        // raise to count by repeated convolution (series in q^{-s})
        std::vector<double> pow_c = c;
        for (int rep = 1; rep < f.count; ++rep) {
            std::vector<double> nxt(jmax + 1, 0.0);
            for (int i = 0; i <= jmax; ++i)
                for (int j = 0; i + j <= jmax; ++j) nxt[i + j] += pow_c[i] * c[j];
            pow_c = std::move(nxt);
        }
        // dense multiply into lambda (snapshot keeps the factor linear)
        std::vector<double> base = lam;
        for (int j = jmax; j >= 1; --j) {
            if (pow_c[j] == 0.0) continue;
            long long qj = 1;
            for (int t = 0; t < j; ++t) qj *= f.norm;
            for (long long m = M / qj; m >= 1; --m)
                if (base[m] != 0.0) lam[m * qj] += base[m] * pow_c[j];
        }
    }
    return lam;
}

double smoothed_sum(const std::vector<double>& lambda, const BumpKernel& phi, double X) {
    long long hi = (long long)std::ceil(X * phi.support_hi());
    if ((long long)lambda.size() - 1 < hi)
        throw std::invalid_argument("smoothed_sum: coefficients truncated below the kernel window");
    double acc = 0.0;
    long long lo = std::max<long long>(1, (long long)std::floor(X * phi.support_lo()));
    for (long long m = lo; m <= hi; ++m) {
        if (m >= (long long)lambda.size()) break;
        if (lambda[m] != 0.0) acc += lambda[m] * phi((double)m / X);
    }
    return acc;
}

int hom_I_dim(const std::vector<ClassFunction>& a, const std::vector<ClassFunction>& b) {
    int count = 0;
    for (const auto& x : a)
        for (const auto& y : b) {
            // dual of y: conjugate character
            bool match = x.values.size() == y.values.size();
            for (size_t c = 0; match && c < x.values.size(); ++c)
                match = x.values[c] == y.values[c].conj();
            if (match) ++count;
        }
    return count;
}

double analytic_conductor(long long N, const std::vector<ConductorPlace>& inf_places,
                          std::complex<double> s) {
    if (N <= 0) throw std::invalid_argument("analytic_conductor: N must be positive");
    double acc = (double)N;
    const double two_pi = 2.0 * M_PI;
    for (const auto& w : inf_places)
        for (const auto& mu : w.mu) {
            double a = std::abs((1.0 + mu + s) / two_pi);
            acc *= w.complex_place ? a * a : a;
        }
    return acc;
}

double ramanujan_bound(int n) {
    if (n < 1) throw std::invalid_argument("ramanujan_bound: n >= 1");
    return 0.5 - 1.0 / ((double)n * n + 1.0);
}

}  // namespace icotrace
