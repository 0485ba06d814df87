#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icotrace/charops.hpp"

namespace icotrace {

// Galois-type L-parameter: an n-dimensional character of a tower subgroup
// Gal(E/K), modeling a parameter of W_K' trivial on W_E'.
struct GaloisParameter {
    const FiniteGroup* parent = nullptr;  // Gal(E/F)
    Subgroup level;                       // Gal(E/K) <= parent (full group = level F)
    ClassFunction character;              // on level.group
    std::string label;

    long long dim() const { return character.degree().num().to_longlong(); }
    bool is_irreducible() const;
};

Subgroup full_subgroup(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);

GaloisParameter make_parameter(const FiniteGroup& parent, const Subgroup& level,
                               ClassFunction chi, std::string label);

// view of inner (a subgroup of outer, given by parent-element containment)
// as a subgroup of outer.group
Subgroup subgroup_within(const Subgroup& outer, const Subgroup& inner, std::string name = "");

// restriction of the character along class fusion; target must satisfy
// target.elements subset of p.level.elements. Transitive along towers.
GaloisParameter base_change(const GaloisParameter& p, const Subgroup& target);

struct PrimitivityCertificate {
    bool primitive = false;
    // when non-primitive: the inducing subgroup (of the level group, owned
    // here) and the inducing character on it
    std::optional<Subgroup> witness_subgroup;
    std::optional<ClassFunction> witness_char;
    std::string note;
};

// exhaustive over proper subgroups of the level group up to conjugacy and
// their irreducibles; witness verifies by exact induction
PrimitivityCertificate is_primitive(const GaloisParameter& p);

struct FiberReport {
    GaloisParameter base;
    std::vector<GaloisParameter> members;  // at the upper level, restricting to base
    int count() const { return (int)members.size(); }
};

// all irreducible characters of upper.group whose restriction to p's level
// equals p.character; upper must contain p.level elementwise
FiberReport descent_fibers(const GaloisParameter& p, const Subgroup& upper);

// irreducible characters of K.group of degree n restricting to (n/deg chi0)
// copies of chi0 on the normal subgroup H <= K; chi0 must be K-invariant
FiberReport invariant_extension(const ClassFunction& chi0, const Subgroup& H, const Subgroup& K,
                                long long n);

struct CliffordSplit {
    bool induced = false;  // induced branch taken
    std::optional<Subgroup> witness_subgroup;
    std::optional<ClassFunction> witness_char;
    std::optional<ClassFunction> rho;   // tensor branch: p = rho (x) phi1
    std::optional<ClassFunction> phi1;  // phi1 restricts irreducibly to H
    bool ok = false;
};

// dichotomy of the restriction lemma at finite level: p irreducible on the
// level group, H normal in it; returns an induction witness or an exact
// tensor factorization p = rho (x) phi1 with rho trivial on H
CliffordSplit clifford_split(const GaloisParameter& p, const Subgroup& H_in_level);

// multiset division: recover the spectrum of A from those of A (x) B and B
std::vector<Cyclotomic> recover_from_tensor(const std::vector<Cyclotomic>& ab,
                                            const std::vector<Cyclotomic>& b);

struct DescentCaseReport {
    bool pass = false;
    long long cases_checked = 0;
    long long matches = 0;  // (class, f, zeta) with equal Sym^4 spectra
    bool nu_exclusion_ok = false;      // f = 5: zeta = nu^{-1} never survives
    bool order6_exclusion_ok = false;  // f = 3, a primitive 6th root: exactly {1, e^{-2pi i/3}}
    std::vector<std::string> failures;
};

// the root-of-unity case analysis behind the local matching lemma: over all
// 9 classes of the icosahedral group, f in {1,2,3,5} and all f-th roots of
// unity zeta, whenever the two degree-5 symmetric-power spectra agree as
// multisets, the degree-2 class {a zeta, a^-1 zeta^-1} matches {a, a^-1} or
// its xi-twist. Exact arithmetic in Q(zeta_60).
DescentCaseReport verify_icosahedral_descent_cases();

}  // namespace icotrace
