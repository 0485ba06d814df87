#pragma once

#include <map>

#include "icotrace/chartable.hpp"

namespace icotrace {

// (1/|G|) sum_g a(g) conj(b(g)), computed classwise; exact.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

// restriction along class fusion; result lives on H.group
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& H);

// Frobenius induction from H.group up to the parent of H
ClassFunction induce_from(const ClassFunction& psi, const Subgroup& H);

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// chi_{Sym^k}(g) = (1/k) sum_{i=1..k} chi(g^i) chi_{Sym^{k-i}}(g)
ClassFunction sym_power(const ClassFunction& chi, int k);
// dual Newton recursion with alternating signs
ClassFunction ext_power(const ClassFunction& chi, int k);
// top exterior power
ClassFunction det_char(const ClassFunction& chi);

// entrywise Galois twist zeta -> zeta^k; permutes the irreducibles
ClassFunction galois_twist_char(const ClassFunction& chi, long long k);
// the twist realizing Gal(Q(sqrt5)/Q) on the icosahedral value field Q(zeta_60)
inline constexpr long long kXiTwist = 37;

struct Multiplicities {
    std::map<int, long long> by_irrep;  // irrep index -> multiplicity
    bool is_character = true;           // all entries nonnegative integers
};

// exact decomposition against the table; throws if f is not a virtual
// character (non-integral multiplicity); is_character reports negativity
Multiplicities decompose(const ClassFunction& f, const CharacterTable& table);

// eigenvalue multiset of rho(g) for any representation rho with character
// chi, recovered from the power-map values: the multiplicity of zeta_d^j
// (d = order of g) is (1/d) sum_l chi(g^l) zeta_d^{-jl}. Exact; sorted.
// Throws if the recovered multiplicities are not nonnegative integers.
std::vector<Cyclotomic> character_eigenvalues(const ClassFunction& chi, int class_index);

}  // namespace icotrace
