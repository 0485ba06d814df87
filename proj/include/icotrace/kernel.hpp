#pragma once

#include <complex>
#include <vector>

namespace icotrace {

// Smooth compactly supported weight: phi(x) = exp(-1/(1-u^2)) for
// u = (x-c)/r on (c-r, c+r), 0 elsewhere. Requires 0 < r < c so the support
// stays inside (0, infinity).
struct BumpKernel {
    double center = 1.0;
    double radius = 0.5;

    BumpKernel() = default;
    BumpKernel(double c, double r);
    double operator()(double x) const;
    double support_lo() const { return center - radius; }
    double support_hi() const { return center + radius; }
};

// Mellin transform phi~(s) = int_0^inf phi(x) x^{s-1} dx by adaptive
// quadrature to the stated relative tolerance.
std::complex<double> mellin(const BumpKernel& phi, std::complex<double> s,
                            double rel_tol = 1e-10);
// d^j/ds^j phi~(s) = int phi(x) x^{s-1} log(x)^j dx
std::complex<double> mellin_derivative(const BumpKernel& phi, std::complex<double> s, int j,
                                       double rel_tol = 1e-10);

// Laurent data of an L-function at s = 1: pole order k and coefficients
// c_{-k}, ..., c_{-1} (c[i] = c_{-k+i}), as extracted numerically.
struct PoleProfile {
    int order = 0;
    std::vector<double> coeffs;  // size = order; coeffs[i] = c_{-(order-i)}
    double c_leading() const { return order ? coeffs[0] : 0.0; }
};

// Res_{s=1}(phi~(s) X^s L(s)) for L with the given pole profile:
// sum_{i=0}^{k-1} c_{-(i+1)} (d^i/ds^i)(phi~(s) X^s)|_{s=1} / i!
double residue_term(const BumpKernel& phi, double X, const PoleProfile& p);

// (d^m/ds^m)(phi~(s) X^s)|_{s=1}, the normalizer appearing in the theorem
// statements with m = n^2 - 1
double phi_xs_derivative(const BumpKernel& phi, double X, int m);

}  // namespace icotrace
