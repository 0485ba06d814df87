#pragma once

#include <complex>
#include <map>
#include <vector>

#include "icotrace/chartable.hpp"
#include "icotrace/kernel.hpp"
#include "icotrace/places.hpp"

namespace icotrace {

// Truncated Euler product with Frobenius-class provenance. Each factor is
// the INVERSE local polynomial det(1 - A1 (x) A2 x) in x = q^{-s}, stored
// numerically, with a multiplicity for collapsed identical places.
struct EulerFactor {
    long long norm = 0;  // q^f
    double log_norm = 0;
    std::vector<std::complex<double>> inv_poly;  // constant term 1
    int count = 1;
};

struct EulerData {
    std::vector<EulerFactor> factors;  // strictly by construction order
    long long truncation_bound = 0;    // bound of the underlying prime stream
    int pole_order = 0;                // multiplicity of the trivial constituent

    // log L(s) for real s > 1 (complex log summed; imaginary part should
    // vanish for conjugation-stable data)
    std::complex<double> log_value(double s) const;
    double value(double s) const;
};

// Rankin-Selberg Euler data for a pair of Galois-type parameters at the same
// level over a place structure: local factor det(1 - A1 (x) A2bar q^{-s})^{-1}
// at each place, A_i = eigenvalues of chi_i at the place's Frobenius class,
// A2bar the dual (conjugate) spectrum. The pole order is the Chebotarev
// density multiplicity <chi1 * conj(chi2), 1>.
EulerData rankin_selberg_data(const ClassFunction& chi1, const ClassFunction& chi2,
                              const PlaceStructure& places, long long truncation_bound);

// zeta-type data of a place structure raised to a power: local factors
// (1 - q_w^{-s})^{-power}; pole order = power (each level contributes its
// density-one split places)
EulerData zeta_power_data(const PlaceStructure& places, int power, long long truncation_bound);

// Laurent coefficients at s = 1 by polynomial extrapolation of
// H(s) = (s-1)^k L(s) from nodes in the stable window 1 + O(1/log B); the
// pole order k is supplied by representation data (hom_I), not fitted.
// Throws when the truncation bound is too small for a stable window.
PoleProfile laurent_at_1(const EulerData& data, int k);

// Dirichlet coefficients lambda(m), m <= M, of the truncated product
// (numeric); multiplicities honored by raising local series to count
std::vector<double> dirichlet_coefficients_numeric(const EulerData& data, long long M);

// sum_m lambda(m) phi(m/X); lambda must extend through X*(c+r), else throws
double smoothed_sum(const std::vector<double>& lambda, const BumpKernel& phi, double X);

// count of matching constituent pairs (i, j) with a[i] = dual of b[j];
// Galois-type duals are conjugate characters
int hom_I_dim(const std::vector<ClassFunction>& a, const std::vector<ClassFunction>& b);

// analytic conductor: N * prod_w prod_{i,j} |(1 + mu_{ij} + s)/(2 pi)|_w,
// complex places contributing the square of the usual absolute value
struct ConductorPlace {
    bool complex_place = true;
    std::vector<std::complex<double>> mu;  // the n1*n2 archimedean parameters
};
double analytic_conductor(long long N, const std::vector<ConductorPlace>& inf_places,
                          std::complex<double> s);

// the bound 1/2 - 1/(n^2+1) toward Ramanujan-Petersson, used only in
// truncation-error heuristics and report annotations
double ramanujan_bound(int n);

}  // namespace icotrace
