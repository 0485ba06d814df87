#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icotrace/group.hpp"

namespace icotrace {

// A Galois tower E >= F' >= F at finite level: G = Gal(E/F), H = Gal(E/F'),
// tau a designated element with <tau, H> = G when marked generating.
struct Tower {
    std::shared_ptr<FiniteGroup> G;
    Subgroup H;
    int tau = -1;
    std::optional<Subgroup> Q;        // quaternion subgroup (icosahedral towers)
    std::optional<Subgroup> A4t;      // binary tetrahedral subgroup
    bool generating = false;          // <tau, H> = G verified
    bool solvable_H = false;          // H solvable, verified
    // descending chain H = C_0 > C_1 > ... > 1 with each link normal of
    // prime index in the previous (subgroups of H.group)
    std::vector<Subgroup> solvable_chain;
    std::string description;

    const FiniteGroup& group() const { return *G; }
};

// H is solvable iff its derived series reaches the trivial subgroup.
bool is_solvable(const FiniteGroup& G);

// a chain G = C_0 > C_1 > ... > {1} with every C_{i+1} normal of prime
// index in C_i; throws if G is not solvable
std::vector<Subgroup> solvable_chain(const FiniteGroup& G);

// Schur multipliers H^2(G, C^x) for the bundled groups, keyed by group name.
// Returns the order of the multiplier; throws for unknown names (general
// computation is out of scope).
int bundled_schur_multiplier_order(const std::string& group_name);

// Binary icosahedral tower: G = SL2(Z/5); A4t found as the first order-24
// subgroup containing the center (all choices conjugate), Q as the set of
// elements of A4t of order dividing 4 (its unique quaternion Sylow-2).
// level: "a4tilde" (F' = E^{A4t}) or "q8" (F' = E^Q). tau: smallest-index
// element of order tau_order (default 5), or an explicit element index.
Tower build_icosahedral_tower(const std::string& level = "a4tilde", int tau_order = 5,
                              int explicit_tau = -1);

// G = SL2(Z/7) with H the cyclic subgroup generated by the first order-7
// element. tau: smallest-index element with <tau, H> = G.
Tower build_sl2z7_tower();

}  // namespace icotrace
