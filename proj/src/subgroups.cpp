#include "icotrace/subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace icotrace {

namespace {

// canonical form of a subgroup under conjugacy: the lexicographically
// smallest sorted element list among all conjugates
std::vector<int> conjugacy_canonical(const FiniteGroup& G, const std::vector<int>& H) {
    std::vector<int> best;
    std::vector<int> cur(H.size());
    for (int g = 0; g < G.order(); ++g) {
        for (size_t i = 0; i < H.size(); ++i) cur[i] = G.conjugate(g, H[i]);
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> all_subgroups_up_to_conjugacy(const FiniteGroup& G) {
    std::set<std::vector<int>> exact_seen;  // cheap dedup before canonicalizing
    std::set<std::vector<int>> canon_seen;
    std::vector<std::vector<int>> found;  // canonical representatives
    auto add = [&](const std::vector<int>& H) {
        if (!exact_seen.insert(H).second) return;
        auto c = conjugacy_canonical(G, H);
        if (canon_seen.insert(c).second) found.push_back(c);
    };
    add({G.identity()});
    // cyclic subgroups
    for (int x = 0; x < G.order(); ++x) add(G.subgroup_generated({x}));
    // extend each known subgroup by one generator until stable; <B, g> only
    // depends on the coset Bg, so one representative per coset suffices
    for (size_t head = 0; head < found.size(); ++head) {
        std::vector<int> base = found[head];
        if ((int)base.size() == G.order()) continue;
        std::vector<char> coset_used(G.order(), 0);
        for (int x : base) coset_used[x] = 1;
        for (int g = 0; g < G.order(); ++g) {
            if (coset_used[g]) continue;
            for (int h : base) coset_used[G.mul(h, g)] = 1;
            std::vector<int> gens = base;
            gens.push_back(g);
            add(G.subgroup_generated(gens));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

int smallest_proper_subgroup_index(const FiniteGroup& G) {
    auto subs = all_subgroups_up_to_conjugacy(G);
    int best = G.order();
    for (const auto& H : subs)
        if ((int)H.size() < G.order()) best = std::min(best, G.order() / (int)H.size());
    return best;
}

bool check_index_condition(const FiniteGroup& G, int n) {
    if (n <= 0) throw std::invalid_argument("check_index_condition: n must be positive");
    auto subs = all_subgroups_up_to_conjugacy(G);
    for (const auto& H : subs) {
        if ((int)H.size() == G.order()) continue;
        int index = G.order() / (int)H.size();
        if (n % index == 0) return false;
    }
    return true;
}

GenerationReport verify_generation_gk(const FiniteGroup& G) {
    if (!G.is_quasi_simple())
        throw std::invalid_argument("verify_generation_gk: group not quasi-simple");
    GenerationReport rep;
    rep.mode = "gk";
    auto Z = G.center();
    std::vector<char> in_z(G.order(), 0);
    for (int z : Z) in_z[z] = 1;
    for (int x = 0; x < G.order(); ++x) {
        if (in_z[x]) continue;
        ++rep.checked;
        int partner = -1;
        for (int g = 0; g < G.order(); ++g) {
            if ((int)G.subgroup_generated({x, g}).size() == G.order()) {
                partner = g;
                break;
            }
        }
        if (partner >= 0)
            rep.witnesses.emplace_back(x, partner);
        else
            rep.failures.push_back(x);
    }
    rep.pass = rep.failures.empty();
    return rep;
}

GenerationReport verify_generation_gm(const FiniteGroup& G) {
    if (!G.is_quasi_simple())
        throw std::invalid_argument("verify_generation_gm: group not quasi-simple");
    GenerationReport rep;
    rep.mode = "gm";
    for (int a = 0; a < G.order(); ++a) {
        if (G.element_order(a) % 2 == 0 || G.element_order(a) % 3 == 0) continue;
        for (int b = a; b < G.order(); ++b) {
            if (G.element_order(b) % 2 == 0 || G.element_order(b) % 3 == 0) continue;
            ++rep.checked;
            if ((int)G.subgroup_generated({a, b}).size() == G.order()) {
                rep.witnesses.emplace_back(a, b);
                rep.pass = true;
                return rep;
            }
        }
    }
    rep.pass = false;
    return rep;
}

GenerationReport verify_generation_tower(const FiniteGroup& G, const Subgroup& H, int tau_order) {
    GenerationReport rep;
    rep.mode = "tower";
    for (int tau = 0; tau < G.order(); ++tau) {
        if (G.element_order(tau) != tau_order) continue;
        ++rep.checked;
        std::vector<int> gens = H.elements;
        gens.push_back(tau);
        if ((int)G.subgroup_generated(gens).size() == G.order())
            rep.witnesses.emplace_back(tau, tau);
        else
            rep.failures.push_back(tau);
    }
    rep.pass = rep.failures.empty() && rep.checked > 0;
    return rep;
}

}  // namespace icotrace
