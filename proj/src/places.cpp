#include "icotrace/places.hpp"

#include <cmath>
#include <stdexcept>

namespace icotrace {

double LevelPlace::log_norm() const { return degree * std::log((double)q); }

long long LevelPlace::norm() const {
    long long n = 1;
    for (int i = 0; i < degree; ++i) {
        if (n > (long long)4e18 / q) throw std::overflow_error("LevelPlace::norm overflow");
        n *= q;
    }
    return n;
}

PlaceStructure split_places(const FiniteGroup& G, const Subgroup& H,
                            const std::vector<StreamPlace>& stream) {
    PlaceStructure out;
    out.level_group = H.group.get();
    const auto cosets = left_cosets(G, H);
    std::vector<int> coset_of(G.order(), -1);
    for (size_t i = 0; i < cosets.size(); ++i)
        for (int x : cosets[i]) coset_of[x] = (int)i;
    // orbit decomposition is a function of the class representative only
    std::map<int, std::vector<std::pair<std::pair<int, int>, int>>> cache;  // class -> ((f, Hclass), count)
    for (const auto& sp : stream) {
        auto it = cache.find(sp.class_idx);
        if (it == cache.end()) {
            int sigma = G.class_rep(sp.class_idx);
            std::vector<char> seen(cosets.size(), 0);
            std::map<std::pair<int, int>, int> grouped;
            for (size_t i = 0; i < cosets.size(); ++i) {
                if (seen[i]) continue;
                // orbit of coset i under left multiplication by sigma
                int f = 0;
                size_t j = i;
                while (!seen[j]) {
                    seen[j] = 1;
                    ++f;
                    j = (size_t)coset_of[G.mul(sigma, cosets[j][0])];
                }
                // Frobenius of this place: g^-1 sigma^f g in H, g = coset rep
                int g = cosets[i][0];
                int frob_parent = G.mul(G.mul(G.inverse(g), G.pow(sigma, f)), g);
                int frob_in_H = H.from_parent(frob_parent);
                if (frob_in_H < 0) throw std::logic_error("split_places: Frobenius not in H");
                grouped[{f, H.group->class_of(frob_in_H)}] += 1;
            }
            std::vector<std::pair<std::pair<int, int>, int>> flat(grouped.begin(), grouped.end());
            it = cache.emplace(sp.class_idx, std::move(flat)).first;
        }
        for (const auto& [key, count] : it->second)
            out.places.push_back({sp.q, key.first, key.second, count});
    }
    return out;
}

PlaceStructure base_places(const FiniteGroup& G, const std::vector<StreamPlace>& stream) {
    PlaceStructure out;
    out.level_group = &G;
    for (const auto& sp : stream) out.places.push_back({sp.q, 1, sp.class_idx, 1});
    return out;
}

PlaceStructure total_places(const FiniteGroup& G, const std::vector<StreamPlace>& stream) {
    PlaceStructure out;
    out.level_group = nullptr;  // trivial level group: all Frobenii trivial
    for (const auto& sp : stream) {
        int d = G.element_order(G.class_rep(sp.class_idx));
        out.places.push_back({sp.q, d, 0, G.order() / d});
    }
    return out;
}

}  // namespace icotrace
