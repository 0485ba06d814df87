#include "icotrace/params.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "icotrace/subgroups.hpp"

namespace icotrace {

bool GaloisParameter::is_irreducible() const {
    return inner_product(character, character).is_one();
}

Subgroup full_subgroup(const FiniteGroup& G) {
    std::vector<int> all(G.order());
    for (int i = 0; i < G.order(); ++i) all[i] = i;
    return make_subgroup(G, all, G.name());
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
    return make_subgroup(G, {G.identity()}, "trivial");
}

GaloisParameter make_parameter(const FiniteGroup& parent, const Subgroup& level,
                               ClassFunction chi, std::string label) {
    if (chi.G != level.group.get())
        throw std::invalid_argument("make_parameter: character not on the level group");
    Rational d = chi.degree();
    if (!d.is_integer() || d.sign() <= 0)
        throw std::invalid_argument("make_parameter: degree must be a positive integer");
    GaloisParameter p;
    p.parent = &parent;
    p.level = level;
    p.character = std::move(chi);
    p.label = std::move(label);
    return p;
}

Subgroup subgroup_within(const Subgroup& outer, const Subgroup& inner, std::string name) {
    std::vector<int> idx;
    for (int e : inner.elements) {
        int l = outer.from_parent(e);
        if (l < 0) throw std::invalid_argument("subgroup_within: inner not contained in outer");
        idx.push_back(l);
    }
    return make_subgroup(*outer.group, idx,
                         name.empty() ? inner.group->name() : std::move(name));
}

GaloisParameter base_change(const GaloisParameter& p, const Subgroup& target) {
    for (int e : target.elements)
        if (!p.level.contains(e))
            throw std::invalid_argument("base_change: target not contained in the level");
    Subgroup t_in_level = subgroup_within(p.level, target);
    GaloisParameter out;
    out.parent = p.parent;
    out.level = target;
    ClassFunction chi = restrict_to(p.character, t_in_level);
    chi.G = target.group.get();  // same reindexed group content
    out.character = std::move(chi);
    out.label = p.label + "|" + target.group->name();
    return out;
}

PrimitivityCertificate is_primitive(const GaloisParameter& p) {
    PrimitivityCertificate cert;
    if (!p.is_irreducible()) {
        cert.primitive = false;
        cert.note = "not irreducible";
        return cert;
    }
    const FiniteGroup& L = *p.level.group;
    if (p.dim() == 1) {
        cert.primitive = true;
        cert.note = "degree 1: cannot be properly induced";
        return cert;
    }
    auto subs = all_subgroups_up_to_conjugacy(L);
    for (const auto& Helems : subs) {
        if ((int)Helems.size() == L.order()) continue;
        long long index = L.order() / (long long)Helems.size();
        if (p.dim() % index != 0) continue;
        Subgroup H = make_subgroup(L, Helems, "H");
        CharacterTable TH(*H.group);
        for (int i = 0; i < TH.size(); ++i) {
            if (TH.irrep(i).degree() * Rational(index) != Rational(p.dim())) continue;
            if (induce_from(TH.irrep(i), H).values == p.character.values) {
                cert.primitive = false;
                cert.witness_char = TH.irrep(i);
                cert.witness_subgroup = std::move(H);
                cert.note = "induced from a subgroup of index " + std::to_string(index);
                return cert;
            }
        }
    }
    cert.primitive = true;
    cert.note = "no proper subgroup induces it";
    return cert;
}

FiberReport descent_fibers(const GaloisParameter& p, const Subgroup& upper) {
    for (int e : p.level.elements)
        if (!upper.contains(e)) throw std::invalid_argument("descent_fibers: level not in upper");
    FiberReport rep;
    rep.base = p;
    CharacterTable TU(*upper.group);
    apply_standard_labeling(*upper.group, TU);
    Subgroup level_in_upper = subgroup_within(upper, p.level);
    for (int i = 0; i < TU.size(); ++i) {
        if (restrict_to(TU.irrep(i), level_in_upper).values == p.character.values) {
            GaloisParameter q;
            q.parent = p.parent;
            q.level = upper;
            q.character = TU.irrep(i);
            q.label = TU.irrep(i).name;
            rep.members.push_back(std::move(q));
        }
    }
    return rep;
}

FiberReport invariant_extension(const ClassFunction& chi0, const Subgroup& H, const Subgroup& K,
                                long long n) {
    // H normal in K, chi0 on H.group, invariant under K-conjugation
    for (int e : H.elements)
        if (!K.contains(e)) throw std::invalid_argument("invariant_extension: H not in K");
    const FiniteGroup& P = *K.parent;
    for (int k : K.elements)
        for (int h : H.elements)
            if (!H.contains(P.conjugate(k, h)))
                throw std::invalid_argument("invariant_extension: H not normal in K");
    // invariance of chi0 under K-conjugation
    for (int k : K.elements)
        for (int h : H.elements) {
            int hc = P.conjugate(k, h);
            if (chi0.values[H.group->class_of(H.from_parent(h))] !=
                chi0.values[H.group->class_of(H.from_parent(hc))])
                throw std::invalid_argument("invariant_extension: chi0 not K-invariant");
        }
    long long d0 = chi0.degree().num().to_longlong();
    if (d0 <= 0 || n % d0 != 0)
        throw std::invalid_argument("invariant_extension: n not a multiple of deg(chi0)");
    long long mult = n / d0;
    FiberReport rep;
    rep.base.parent = K.parent;
    rep.base.level = H;
    rep.base.character = chi0;
    rep.base.label = chi0.name;
    CharacterTable TK(*K.group);
    apply_standard_labeling(*K.group, TK);
    Subgroup H_in_K = subgroup_within(K, H);
    for (int i = 0; i < TK.size(); ++i) {
        if (TK.irrep(i).degree() != Rational(n)) continue;
        auto r = restrict_to(TK.irrep(i), H_in_K);
        bool match = true;
        for (size_t c = 0; c < r.values.size(); ++c)
            if (r.values[c] != Cyclotomic(Rational(mult)) * chi0.values[c]) {
                match = false;
                break;
            }
        if (match) {
            GaloisParameter q;
            q.parent = K.parent;
            q.level = K;
            q.character = TK.irrep(i);
            q.label = TK.irrep(i).name;
            rep.members.push_back(std::move(q));
        }
    }
    return rep;
}

CliffordSplit clifford_split(const GaloisParameter& p, const Subgroup& H_in_level) {
    CliffordSplit out;
    const FiniteGroup& L = *p.level.group;
    if (H_in_level.parent != &L)
        throw std::invalid_argument("clifford_split: H must be a subgroup of the level group");
    for (int k = 0; k < L.order(); ++k)
        for (int h : H_in_level.elements)
            if (!H_in_level.contains(L.conjugate(k, h)))
                throw std::invalid_argument("clifford_split: H not normal");
    if (!p.is_irreducible()) throw std::invalid_argument("clifford_split: p not irreducible");

    // branch 1: induction witness from a proper subgroup
    auto cert = is_primitive(p);
    if (!cert.primitive && cert.witness_char) {
        out.induced = true;
        out.witness_subgroup = cert.witness_subgroup;
        out.witness_char = cert.witness_char;
        out.ok = true;
        return out;
    }
    // branch 2: exact tensor factorization p = rho (x) phi1 with rho trivial
    // on H and phi1 restricting irreducibly to H
    CharacterTable TL(L);
    auto trivial_on_H = [&](const ClassFunction& f) {
        for (int h : H_in_level.elements)
            if (f.values[L.class_of(h)] != f.values[L.class_of(L.identity())]) return false;
        return true;
    };
    for (int ri = 0; ri < TL.size(); ++ri) {
        const auto& rho = TL.irrep(ri);
        if (!trivial_on_H(rho)) continue;
        for (int fi = 0; fi < TL.size(); ++fi) {
            const auto& phi1 = TL.irrep(fi);
            auto r = restrict_to(phi1, H_in_level);
            if (!inner_product(r, r).is_one()) continue;
            if (tensor(rho, phi1).values == p.character.values) {
                out.rho = rho;
                out.phi1 = phi1;
                out.ok = true;
                return out;
            }
        }
    }
    out.ok = false;
    return out;
}

std::vector<Cyclotomic> recover_from_tensor(const std::vector<Cyclotomic>& ab,
                                            const std::vector<Cyclotomic>& b) {
    if (b.empty() || ab.size() % b.size() != 0)
        throw std::invalid_argument("recover_from_tensor: size mismatch");
    for (const auto& x : ab)
        if (x.is_zero()) throw std::invalid_argument("recover_from_tensor: zero value");
    for (const auto& x : b)
        if (x.is_zero()) throw std::invalid_argument("recover_from_tensor: zero value");
    size_t n = ab.size() / b.size();
    std::map<Cyclotomic, int> pool;
    for (const auto& x : ab) pool[x]++;
    std::vector<Cyclotomic> result;
    // deterministic backtracking over candidate quotients
    std::function<bool(size_t)> solve = [&](size_t remaining) -> bool {
        if (remaining == 0) return true;
        // smallest remaining product value
        auto it = pool.begin();
        while (it != pool.end() && it->second == 0) ++it;
        if (it == pool.end()) return false;
        Cyclotomic x = it->first;
        std::map<Cyclotomic, char> tried;
        for (const auto& bj : b) {
            Cyclotomic cand = x / bj;
            if (tried.count(cand)) continue;
            tried[cand] = 1;
            // try removing cand * b from the pool
            bool feasible = true;
            std::vector<Cyclotomic> removed;
            for (const auto& bk : b) {
                Cyclotomic need = cand * bk;
                auto pit = pool.find(need);
                if (pit == pool.end() || pit->second == 0) {
                    feasible = false;
                    break;
                }
                pit->second -= 1;
                removed.push_back(need);
            }
            if (feasible) {
                result.push_back(cand);
                if (solve(remaining - 1)) return true;
                result.pop_back();
            }
            for (const auto& r : removed) pool[r] += 1;
        }
        return false;
    };
    if (!solve(n)) throw std::domain_error("recover_from_tensor: inconsistent input (no solution)");
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace icotrace
