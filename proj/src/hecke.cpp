#include "icotrace/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "icotrace/places.hpp"

namespace icotrace {

SymPoly sym_test_poly(int n, int j, int place_w, int place_wtau) {
    if (j < 0) throw std::invalid_argument("sym_test_poly: j < 0");
    if (n < 1) throw std::invalid_argument("sym_test_poly: n < 1");
    std::vector<SymPoly::Block> blocks;
    bool folded = place_w == place_wtau;
    if (folded)
        blocks = {{place_w, n}};
    else if (place_w < place_wtau)
        blocks = {{place_w, n}, {place_wtau, n}};
    else
        blocks = {{place_wtau, n}, {place_w, n}};
    size_t width = folded ? (size_t)n : (size_t)(2 * n);
    size_t off_w, off_wtau;
    if (folded) {
        off_w = off_wtau = 0;
    } else if (place_w < place_wtau) {
        off_w = 0;
        off_wtau = (size_t)n;
    } else {
        off_w = (size_t)n;
        off_wtau = 0;
    }
    SymPoly out = SymPoly::monomial(blocks, SymPoly::Exponents(width, 0), Rational(0));
    // multisets of size j over the n^2 ratios (i, k), enumerated as
    // nondecreasing sequences of ratio indices
    std::vector<int> pick(j, 0);
    while (true) {
        SymPoly::Exponents e(width, 0);
        for (int t = 0; t < j; ++t) {
            int i = pick[t] / n, k = pick[t] % n;
            e[off_w + i] += 1;
            e[off_wtau + k] -= 1;
        }
        out.add_term(e, Rational(1));
        // next nondecreasing sequence
        int pos = j - 1;
        while (pos >= 0 && pick[pos] == n * n - 1) --pos;
        if (pos < 0) break;
        int v = pick[pos] + 1;
        for (int t = pos; t < j; ++t) pick[t] = v;
    }
    return out;
}

ModulusIdeal ModulusIdeal::prime_power(int place, int j) {
    if (j < 0) throw std::invalid_argument("ModulusIdeal: negative exponent");
    ModulusIdeal m;
    if (j > 0) m.exponent_by_place[place] = j;
    return m;
}

ModulusIdeal ModulusIdeal::operator*(const ModulusIdeal& o) const {
    ModulusIdeal m = *this;
    for (const auto& [p, j] : o.exponent_by_place) m.exponent_by_place[p] += j;
    return m;
}

SymPoly test_function(int n, const ModulusIdeal& m,
                      const std::function<int(int)>& tau_partner) {
    SymPoly out = SymPoly::constant(Rational(1));
    for (const auto& [place, j] : m.exponent_by_place)
        out = out * sym_test_poly(n, j, place, tau_partner(place));
    return out;
}

SymPoly base_change_subst(const SymPoly& p, const std::map<int, PlaceSubst>& subst) {
    // target layout: union of targets, slot counts preserved
    std::vector<SymPoly::Block> layout;
    for (const auto& b : p.blocks()) {
        auto it = subst.find(b.place);
        if (it == subst.end())
            throw std::invalid_argument("base_change_subst: missing splitting data for a place");
        SymPoly::Block nb{it->second.target_place, b.slots};
        bool present = false;
        for (auto& x : layout)
            if (x.place == nb.place) {
                if (x.slots != nb.slots)
                    throw std::invalid_argument("base_change_subst: slot mismatch at target");
                present = true;
            }
        if (!present) layout.push_back(nb);
    }
    std::sort(layout.begin(), layout.end(),
              [](const SymPoly::Block& a, const SymPoly::Block& b) { return a.place < b.place; });
    std::map<int, size_t> target_off;
    size_t total = 0;
    for (const auto& b : layout) {
        target_off[b.place] = total;
        total += (size_t)b.slots;
    }
    SymPoly out = SymPoly::monomial(layout, SymPoly::Exponents(total, 0), Rational(0));
    size_t src_off = 0;
    std::vector<std::pair<size_t, const SymPoly::Block*>> src_blocks;
    for (const auto& b : p.blocks()) {
        src_blocks.push_back({src_off, &b});
        src_off += (size_t)b.slots;
    }
    for (const auto& [e, c] : p.terms()) {
        SymPoly::Exponents ne(total, 0);
        for (const auto& [off, bptr] : src_blocks) {
            const auto& s = subst.at(bptr->place);
            size_t toff = target_off.at(s.target_place);
            for (int i = 0; i < bptr->slots; ++i) ne[toff + i] += e[off + i] * s.degree;
        }
        out.add_term(ne, c);
    }
    return out;
}

Cyclotomic eval_at(const SymPoly& p, const SatakePoint& x) {
    // precompute inverses per (place, slot)
    struct Vals {
        std::vector<Cyclotomic> v, vinv;
    };
    std::map<int, Vals> prepared;
    for (const auto& b : p.blocks()) {
        auto it = x.values.find(b.place);
        if (it == x.values.end())
            throw std::invalid_argument("eval_at: missing Satake values for a place");
        if ((int)it->second.size() != b.slots)
            throw std::invalid_argument("eval_at: slot count mismatch");
        Vals vals;
        vals.v = it->second;
        for (const auto& z : it->second) {
            if (z.is_zero()) throw std::invalid_argument("eval_at: zero Satake value");
            vals.vinv.push_back(z.inv());
        }
        prepared[b.place] = std::move(vals);
    }
    Cyclotomic acc = Cyclotomic::zero();
    for (const auto& [e, c] : p.terms()) {
        Cyclotomic term = Cyclotomic(c);
        size_t off = 0;
        for (const auto& b : p.blocks()) {
            const auto& vals = prepared[b.place];
            for (int s = 0; s < b.slots; ++s) {
                int ex = e[off + s];
                if (ex > 0)
                    term *= vals.v[s].pow(ex);
                else if (ex < 0)
                    term *= vals.vinv[s].pow(-ex);
            }
            off += (size_t)b.slots;
        }
        acc += term;
    }
    return acc;
}

std::vector<Cyclotomic> satake_from_galois(const ClassFunction& chi, int class_index) {
    return character_eigenvalues(chi, class_index);
}

std::vector<Cyclotomic> rs_local_coefficients(const std::vector<Cyclotomic>& a1,
                                              const std::vector<Cyclotomic>& a2, int jmax) {
    // tensor spectrum
    std::vector<Cyclotomic> spec;
    for (const auto& x : a1)
        for (const auto& y : a2) spec.push_back(x * y);
    // elementary symmetric e_0..e_N via prod (1 + alpha y)
    size_t N = spec.size();
    std::vector<Cyclotomic> e(N + 1, Cyclotomic::zero());
    e[0] = Cyclotomic::one();
    for (size_t i = 0; i < N; ++i)
        for (size_t k = std::min(i + 1, N); k >= 1; --k) e[k] += e[k - 1] * spec[i];
    // h_j by sum_{k=1..j} (-1)^{k-1} e_k h_{j-k}
    std::vector<Cyclotomic> h(jmax + 1, Cyclotomic::zero());
    h[0] = Cyclotomic::one();
    for (int j = 1; j <= jmax; ++j) {
        Cyclotomic acc = Cyclotomic::zero();
        Rational sign(1);
        for (int k = 1; k <= j && (size_t)k <= N; ++k) {
            acc += Cyclotomic(sign) * e[k] * h[j - k];
            sign = -sign;
        }
        h[j] = acc;
    }
    return h;
}

DirichletSeries euler_expand(
    const std::vector<std::pair<long long, std::vector<Cyclotomic>>>& local_factors, long long M) {
    DirichletSeries out;
    out.coeff[1] = Cyclotomic::one();
    for (const auto& [qnorm, cj] : local_factors) {
        if (qnorm > M) continue;
        if (cj.empty() || !cj[0].is_one())
            throw std::invalid_argument("euler_expand: local factor must have constant term 1");
        // multiply the current series by sum_j cj[j] (q^-s)^j
        std::vector<std::pair<long long, Cyclotomic>> base(out.coeff.begin(), out.coeff.end());
        for (size_t j = 1; j < cj.size(); ++j) {
            if (cj[j].is_zero()) continue;
            long long qj = 1;
            bool overflow = false;
            for (size_t t = 0; t < j; ++t) {
                if (qj > M / qnorm) {
                    overflow = true;
                    break;
                }
                qj *= qnorm;
            }
            if (overflow || qj > M) break;
            for (const auto& [m, c] : base) {
                if (m > M / qj) continue;
                auto it = out.coeff.find(m * qj);
                if (it == out.coeff.end())
                    out.coeff[m * qj] = c * cj[j];
                else {
                    it->second += c * cj[j];
                    if (it->second.is_zero()) out.coeff.erase(it);
                }
            }
        }
    }
    return out;
}

DirichletSeries rankin_selberg_dirichlet(const ClassFunction& chi1, const ClassFunction& chi2,
                                         const PlaceStructure& places, long long M) {
    // per (class, degree) local coefficients, expanded once and reused
    std::map<std::pair<int, int>, std::vector<Cyclotomic>> cache;
    std::vector<std::pair<long long, std::vector<Cyclotomic>>> locals;
    for (const auto& pl : places.places) {
        if (pl.log_norm() > std::log((double)M) + 1e-9) continue;
        long long norm = pl.norm();
        if (norm > M) continue;
        int jmax = 0;
        long long qq = 1;
        while (qq <= M / norm) {
            qq *= norm;
            ++jmax;
        }
        auto key = std::make_pair(pl.level_class, jmax);
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto a1 = character_eigenvalues(chi1, pl.level_class);
            auto a2 = character_eigenvalues(chi2, pl.level_class);
            std::vector<Cyclotomic> a2dual;
            for (const auto& z : a2) a2dual.push_back(z.conj());
            it = cache.emplace(key, rs_local_coefficients(a1, a2dual, jmax)).first;
        }
        for (int rep = 0; rep < pl.count; ++rep) locals.push_back({norm, it->second});
    }
    return euler_expand(locals, M);
}

}  // namespace icotrace
