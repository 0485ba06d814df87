#pragma once

#include <map>
#include <vector>

#include "icotrace/stream.hpp"
#include "icotrace/tower.hpp"

namespace icotrace {

// Places of a tower level above one stream prime, grouped by (inertia
// degree, Frobenius class in the level group); count collapses identical
// places so level-E Euler products over large streams stay tractable.
struct LevelPlace {
    long long q = 0;      // rational prime below
    int degree = 1;       // inertia degree f, so the norm is q^f
    int level_class = 0;  // class index of Frobenius in the level group
    int count = 1;        // number of places with identical data

    double log_norm() const;
    long long norm() const;  // q^f; throws on overflow
};

// place splitting data for one level of a tower over a synthetic stream
struct PlaceStructure {
    const FiniteGroup* level_group = nullptr;  // group of the level subgroup
    std::vector<LevelPlace> places;            // all stream primes, grouped
};

// Splitting of the stream places at the level cut out by H <= G: places
// correspond to <sigma>-orbits on G/H, the inertia degree is the orbit size
// and Frobenius is the class of g^-1 sigma^f g in H. Sum of f over places
// above a prime equals [G:H].
PlaceStructure split_places(const FiniteGroup& G, const Subgroup& H,
                            const std::vector<StreamPlace>& stream);

// level F: one place per prime, degree 1, Frobenius = the stream class
PlaceStructure base_places(const FiniteGroup& G, const std::vector<StreamPlace>& stream);

// level E: orbits of sigma on G itself; all Frobenii trivial, |G|/ord(sigma)
// places of degree ord(sigma) per prime
PlaceStructure total_places(const FiniteGroup& G, const std::vector<StreamPlace>& stream);

}  // namespace icotrace
