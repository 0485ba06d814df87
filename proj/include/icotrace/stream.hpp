#pragma once

#include <cstdint>
#include <vector>

#include "icotrace/group.hpp"

namespace icotrace {

// splitmix64: the fixed 64-bit generator used for all sampling; splittable
// by construction (state jumps are pure functions of the inputs)
uint64_t splitmix64(uint64_t& state);
// one draw keyed by (seed, key): independent of iteration order
uint64_t keyed_draw(uint64_t seed, uint64_t key);

std::vector<long long> primes_up_to(long long bound);

struct StreamPlace {
    long long q;    // rational prime
    int class_idx;  // Frobenius class index in the group
};

// Synthetic Chebotarev place stream: for each rational prime q <= bound, a
// Frobenius class sampled with probability |C|/|G|, deterministically from
// (seed, q). Stand-in for the places of a number field.
std::vector<StreamPlace> chebotarev_stream(const FiniteGroup& G, uint64_t seed, long long bound);

// Pearson chi-square statistic of the observed class frequencies against
// |C|/|G|, plus the significance-10^-3 threshold (Wilson-Hilferty).
struct ChiSquare {
    double statistic = 0;
    double threshold = 0;
    int dof = 0;
    bool pass = false;
};
ChiSquare stream_chi_square(const FiniteGroup& G, const std::vector<StreamPlace>& stream);

}  // namespace icotrace
