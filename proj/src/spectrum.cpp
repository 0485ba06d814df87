#include "icotrace/spectrum.hpp"

#include <stdexcept>

namespace icotrace {

SpectrumModel build_spectrum(const Tower& tw, int n, const std::string& level,
                             bool primitive_only, bool exclude_rho_type) {
    SpectrumModel model;
    model.n = n;
    model.level = level;
    model.primitive_only = primitive_only;
    model.exclude_rho_type = exclude_rho_type;

    Subgroup lv = (level == "F") ? full_subgroup(tw.group())
                                 : (level == "Fprime" ? tw.H
                                                      : throw std::invalid_argument(
                                                            "build_spectrum: level must be F or "
                                                            "Fprime"));
    CharacterTable T(*lv.group);
    apply_standard_labeling(*lv.group, T);
    // twist orbits: group the degree-n rows under multiplication by the
    // abelian characters of the level group
    auto deg_n = T.of_degree(n);
    std::vector<int> orbit_of(T.size(), -1);
    int next_orbit = 0;
    auto deg1 = T.of_degree(1);
    for (int i : deg_n) {
        if (orbit_of[i] >= 0) continue;
        int orb = next_orbit++;
        for (int a : deg1) {
            auto twisted = tensor(T.irrep(i), T.irrep(a));
            int j = T.find(twisted);
            if (j >= 0 && orbit_of[j] < 0) orbit_of[j] = orb;
        }
        if (orbit_of[i] < 0) orbit_of[i] = orb;
    }
    for (int i : deg_n) {
        GaloisParameter p = make_parameter(tw.group(), lv, T.irrep(i), T.irrep(i).name);
        if (primitive_only && !is_primitive(p).primitive) continue;
        if (exclude_rho_type) {
            // of rho-type for rho trivial on W_E': the parameter equals
            // rho (x) chi with rho a character of the level group and chi an
            // abelian twist; with chi = 1 and rho = the parameter itself this
            // always holds for Galois-type entries
            continue;
        }
        SpectrumEntry e;
        e.param = std::move(p);
        e.label = T.irrep(i).name;
        e.twist_orbit = orbit_of[i];
        model.entries.push_back(std::move(e));
    }
    return model;
}

}  // namespace icotrace
