#include "icotrace/kernel.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace icotrace {

BumpKernel::BumpKernel(double c, double r) : center(c), radius(r) {
    if (!(r > 0) || !(r < c)) throw std::invalid_argument("BumpKernel: need 0 < r < c");
}

double BumpKernel::operator()(double x) const {
    double u = (x - center) / radius;
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

namespace {

using Cplx = std::complex<double>;

// adaptive Simpson on [a, b]
Cplx adaptive_simpson(const std::function<Cplx(double)>& f, double a, double b, double tol) {
    struct Rec {
        const std::function<Cplx(double)>& f;
        double tol;
        int max_depth = 48;
        Cplx run(double a, double b, Cplx fa, Cplx fm, Cplx fb, Cplx whole, int depth) {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            Cplx flm = f(lm), frm = f(rm);
            Cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            Cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth >= max_depth) return left + right;
            Cplx delta = left + right - whole;
            if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return run(a, m, fa, flm, fm, left, depth + 1) +
                   run(m, b, fm, frm, fb, right, depth + 1);
        }
    };
    Cplx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Rec rec{f, tol};
    return rec.run(a, b, fa, fm, fb, whole, 0);
}

Cplx mellin_integrand(const BumpKernel& phi, Cplx s, int logpow, double x) {
    if (x <= 0) return {0.0, 0.0};
    double p = phi(x);
    if (p == 0.0) return {0.0, 0.0};
    Cplx val = p * std::exp((s - 1.0) * std::log(x));
    double lx = std::log(x);
    for (int t = 0; t < logpow; ++t) val *= lx;
    return val;
}

Cplx mellin_impl(const BumpKernel& phi, Cplx s, int logpow, double rel_tol) {
    double a = phi.support_lo(), b = phi.support_hi();
    // two passes: coarse magnitude estimate, then absolute tolerance
    Cplx coarse = adaptive_simpson([&](double x) { return mellin_integrand(phi, s, logpow, x); },
                                   a, b, 1e-8);
    double scale = std::max(std::abs(coarse), 1e-8);
    Cplx fine = adaptive_simpson([&](double x) { return mellin_integrand(phi, s, logpow, x); }, a,
                                 b, rel_tol * scale);
    if (!(std::abs(fine) < 1e300)) throw std::runtime_error("mellin: quadrature diverged");
    return fine;
}

}  // namespace

std::complex<double> mellin(const BumpKernel& phi, std::complex<double> s, double rel_tol) {
    return mellin_impl(phi, s, 0, rel_tol);
}

std::complex<double> mellin_derivative(const BumpKernel& phi, std::complex<double> s, int j,
                                       double rel_tol) {
    if (j < 0) throw std::invalid_argument("mellin_derivative: j < 0");
    return mellin_impl(phi, s, j, rel_tol);
}

double phi_xs_derivative(const BumpKernel& phi, double X, int m) {
    // d^m/ds^m (phi~(s) X^s) = X^s sum_j C(m,j) phi~^{(j)}(s) (log X)^{m-j} at s=1
    double logx = std::log(X);
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        double term = binom * mellin_derivative(phi, 1.0, j).real() * std::pow(logx, m - j);
        acc += term;
        binom = binom * (m - j) / (j + 1.0);
    }
    return acc * X;
}

double residue_term(const BumpKernel& phi, double X, const PoleProfile& p) {
    double acc = 0.0;
    double fact = 1.0;
    for (int i = 0; i < p.order; ++i) {
        if (i > 0) fact *= i;
        double c = p.coeffs[p.order - 1 - i];  // c_{-(i+1)}
        acc += c * phi_xs_derivative(phi, X, i) / fact;
    }
    return acc;
}

}  // namespace icotrace
