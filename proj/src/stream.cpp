#include "icotrace/stream.hpp"

#include <cmath>
#include <stdexcept>

namespace icotrace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t keyed_draw(uint64_t seed, uint64_t key) {
    uint64_t s = seed ^ (key * 0x9e3779b97f4a7c15ull);
    splitmix64(s);
    return splitmix64(s);
}

std::vector<long long> primes_up_to(long long bound) {
    std::vector<long long> out;
    if (bound < 2) return out;
    std::vector<char> composite(bound + 1, 0);
    for (long long p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (long long m = p * p; m <= bound; m += p) composite[m] = 1;
    }
    return out;
}

std::vector<StreamPlace> chebotarev_stream(const FiniteGroup& G, uint64_t seed, long long bound) {
    auto primes = primes_up_to(bound);
    // cumulative class sizes: u mod |G| lands in class c with probability
    // exactly |C_c|/|G| (bias 2^-64-level)
    std::vector<long long> cum;
    long long acc = 0;
    for (int c = 0; c < G.class_count(); ++c) {
        acc += G.class_size(c);
        cum.push_back(acc);
    }
    std::vector<StreamPlace> stream;
    stream.reserve(primes.size());
    for (long long q : primes) {
        uint64_t u = keyed_draw(seed, (uint64_t)q);
        long long t = (long long)(u % (uint64_t)G.order());
        int cls = 0;
        while (cum[cls] <= t) ++cls;
        stream.push_back({q, cls});
    }
    return stream;
}

ChiSquare stream_chi_square(const FiniteGroup& G, const std::vector<StreamPlace>& stream) {
    ChiSquare out;
    if (stream.empty()) throw std::invalid_argument("stream_chi_square: empty stream");
    std::vector<long long> obs(G.class_count(), 0);
    for (const auto& s : stream) obs[s.class_idx]++;
    double n = (double)stream.size();
    for (int c = 0; c < G.class_count(); ++c) {
        double expect = n * (double)G.class_size(c) / (double)G.order();
        double d = (double)obs[c] - expect;
        out.statistic += d * d / expect;
    }
    out.dof = G.class_count() - 1;
    if (out.dof == 0) {
        out.threshold = 0.0;
        out.pass = true;  // a single class cannot deviate
        return out;
    }
    // Wilson-Hilferty: chi2_q(k) ~ k (1 - 2/(9k) + z_q sqrt(2/(9k)))^3,
    // z_{0.999} = 3.090232
    double k = (double)out.dof, z = 3.090232;
    out.threshold = k * std::pow(1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k)), 3.0);
    out.pass = out.statistic < out.threshold;
    return out;
}

}  // namespace icotrace
