#pragma once

#include <string>
#include <vector>

#include "icotrace/params.hpp"
#include "icotrace/tower.hpp"

namespace icotrace {

// A finite list of Galois-type "automorphic" objects feeding the
// trace-identity harness: the irreducible n-dimensional characters at a
// tower level, with twist-orbit bookkeeping and optional filters.
struct SpectrumEntry {
    GaloisParameter param;
    std::string label;
    int twist_orbit = 0;  // orbit id under multiplication by abelian characters
};

struct SpectrumModel {
    int n = 0;
    std::string level;  // "F" or "Fprime"
    std::vector<SpectrumEntry> entries;
    bool primitive_only = false;
    bool exclude_rho_type = false;
};

// entries = irreducible n-dimensional characters at the level; filters:
// primitive-only keeps E-primitive entries; exclude-rho-type drops entries
// associated to rho (x) chi with rho trivial on W_E' - at Galois-type desk
// scale every entry is of that form, so the filter empties the spectrum
SpectrumModel build_spectrum(const Tower& tw, int n, const std::string& level,
                             bool primitive_only = false, bool exclude_rho_type = false);

}  // namespace icotrace
