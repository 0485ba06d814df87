#pragma once

#include <functional>
#include <map>

#include "icotrace/charops.hpp"
#include "icotrace/sympoly.hpp"

namespace icotrace {

// Langlands class data: for each place id, the multiset of n nonzero
// eigenvalues at that place
struct SatakePoint {
    std::map<int, std::vector<Cyclotomic>> values;
};

// Satake transform of the Sym^j test operator at a prime power ideal: the
// complete homogeneous symmetric polynomial h_j of the n^2 ratios
// t_{i,w} / t_{k,w_tau}; j = 0 gives the unit. w == w_tau is allowed (the
// tau-fixed case) and folds the ratios into a single block.
SymPoly sym_test_poly(int n, int j, int place_w, int place_wtau);

// a modulus: abstract multiset of (place id, exponent), with aggregation
struct ModulusIdeal {
    std::map<int, int> exponent_by_place;

    static ModulusIdeal unit() { return {}; }
    static ModulusIdeal prime_power(int place, int j);
    ModulusIdeal operator*(const ModulusIdeal& o) const;
};

// multiplicative extension: the product over prime-power parts of the
// Sym^j polynomials (prime powers are NOT products of smaller powers)
SymPoly test_function(int n, const ModulusIdeal& m,
                      const std::function<int(int)>& tau_partner);

// the base-change substitution t_{i,w} -> t_{i,v'}^f; subst maps each
// source place to (target place, inertia degree f). Blocks over a common
// target merge. Composes along towers.
struct PlaceSubst {
    int target_place;
    int degree;
};
SymPoly base_change_subst(const SymPoly& p, const std::map<int, PlaceSubst>& subst);

// evaluation at a Satake point: a ring homomorphism; models the trace of
// the Hecke operator on the unramified representation
Cyclotomic eval_at(const SymPoly& p, const SatakePoint& x);

// eigenvalues of rho(Frob) for the Galois-type parameter with character chi
// at the given class; exact roots of unity (see character_eigenvalues)
std::vector<Cyclotomic> satake_from_galois(const ClassFunction& chi, int class_index);

// coefficients h_0..h_jmax of det(1 - A1 (x) A2 T)^{-1} = sum_j h_j T^j,
// computed from the elementary symmetric functions of the tensor spectrum
std::vector<Cyclotomic> rs_local_coefficients(const std::vector<Cyclotomic>& a1,
                                              const std::vector<Cyclotomic>& a2, int jmax);

// Euler-product expansion: Dirichlet coefficients lambda(m), m <= M, of
// prod_places sum_j c_j(place) (q_place^-s)^j where the per-place series
// coefficients are supplied by `local`; multiplicities (place.count) are
// honored. Exact arithmetic.
struct DirichletSeries {
    std::map<long long, Cyclotomic> coeff;  // only nonzero entries, lambda(1) = 1
};
DirichletSeries euler_expand(
    const std::vector<std::pair<long long, std::vector<Cyclotomic>>>& local_factors, long long M);

// exact Dirichlet coefficients of the Rankin-Selberg pairing of two
// Galois-type parameters over a place structure: local factors
// det(1 - A1 (x) A2bar q_w^{-s})^{-1} with A_i the Satake spectra at the
// place's Frobenius class and A2bar the dual spectrum
DirichletSeries rankin_selberg_dirichlet(const ClassFunction& chi1, const ClassFunction& chi2,
                                         const struct PlaceStructure& places, long long M);

}  // namespace icotrace
