#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icotrace/group.hpp"

namespace icotrace {

// All subgroups of G up to conjugacy, as sorted parent-index lists. Found by
// breadth-first closure: cyclic subgroups first, then repeated one-generator
// extensions, deduplicated by the lexicographically smallest conjugate.
std::vector<std::vector<int>> all_subgroups_up_to_conjugacy(const FiniteGroup& G);

// smallest index of a proper subgroup (order of G for the trivial group)
int smallest_proper_subgroup_index(const FiniteGroup& G);

// true iff no proper subgroup H has [G:H] dividing n
bool check_index_condition(const FiniteGroup& G, int n);

struct GenerationReport {
    std::string mode;  // "gk", "gm", or "tower"
    bool pass = false;
    int checked = 0;
    // for gk: pairs (x, g) with <x,g> = G; for gm: the two generators;
    // for tower: the tau indices that generate with H
    std::vector<std::pair<int, int>> witnesses;
    std::vector<int> failures;  // elements x with no partner (gk) / tau failing (tower)
};

// Guralnick-Kantor: every noncentral x admits g with <x,g> = G (G quasi-simple).
GenerationReport verify_generation_gk(const FiniteGroup& G);
// Guralnick-Malle: two elements of order prime to 6 generate G (G quasi-simple).
GenerationReport verify_generation_gm(const FiniteGroup& G);
// tower mode: <tau, H> = G for every tau of the given order
GenerationReport verify_generation_tower(const FiniteGroup& G, const Subgroup& H, int tau_order);

}  // namespace icotrace
