#include "icotrace/charops.hpp"

#include <stdexcept>

namespace icotrace {

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (!a.G->same_content(*b.G)) throw std::invalid_argument("inner_product: different groups");
    const FiniteGroup& G = *a.G;
    Cyclotomic acc = Cyclotomic::zero();
    for (int c = 0; c < G.class_count(); ++c)
        acc += Cyclotomic(Rational(G.class_size(c))) * a.values[c] * b.values[c].conj();
    return acc * Cyclotomic(Rational(BigInt(1), BigInt(G.order())));
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& H) {
    if (!chi.G->same_content(*H.parent)) throw std::invalid_argument("restrict_to: wrong parent group");
    const FiniteGroup& Hg = *H.group;
    ClassFunction out;
    out.G = &Hg;
    out.name = chi.name + "|" + Hg.name();
    out.values.resize(Hg.class_count());
    for (int c = 0; c < Hg.class_count(); ++c) {
        int parent_elt = H.to_parent[Hg.class_rep(c)];
        out.values[c] = chi.values[chi.G->class_of(parent_elt)];
    }
    return out;
}

ClassFunction induce_from(const ClassFunction& psi, const Subgroup& H) {
    if (!psi.G->same_content(*H.group)) throw std::invalid_argument("induce_from: psi not on subgroup");
    const FiniteGroup& G = *H.parent;
    const FiniteGroup& Hg = *H.group;
    ClassFunction out;
    out.G = &G;
    out.name = "Ind(" + psi.name + ")";
    out.values.resize(G.class_count());
    Rational inv_h(BigInt(1), BigInt(Hg.order()));
    for (int c = 0; c < G.class_count(); ++c) {
        int g = G.class_rep(c);
        Cyclotomic acc = Cyclotomic::zero();
        for (int x = 0; x < G.order(); ++x) {
            int y = G.conjugate(G.inverse(x), g);  // x^-1 g x
            int hy = H.from_parent(y);
            if (hy >= 0) acc += psi.values[Hg.class_of(hy)];
        }
        out.values[c] = acc * Cyclotomic(inv_h);
    }
    return out;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    if (!a.G->same_content(*b.G)) throw std::invalid_argument("tensor: different groups");
    ClassFunction out;
    out.G = a.G;
    out.name = a.name + "*" + b.name;
    out.values.resize(a.values.size());
    for (size_t c = 0; c < a.values.size(); ++c) out.values[c] = a.values[c] * b.values[c];
    return out;
}

ClassFunction sym_power(const ClassFunction& chi, int k) {
    if (k < 0) throw std::invalid_argument("sym_power: k < 0");
    const FiniteGroup& G = *chi.G;
    std::vector<ClassFunction> s(k + 1);
    s[0] = trivial_character(G);
    for (int m = 1; m <= k; ++m) {
        s[m].G = &G;
        s[m].values.resize(G.class_count());
        for (int c = 0; c < G.class_count(); ++c) {
            Cyclotomic acc = Cyclotomic::zero();
            for (int i = 1; i <= m; ++i)
                acc += chi.values[G.power_class(c, i)] * s[m - i].values[c];
            s[m].values[c] = acc * Cyclotomic(Rational(1, m));
        }
    }
    s[k].name = "Sym^" + std::to_string(k) + "(" + chi.name + ")";
    return s[k];
}

ClassFunction ext_power(const ClassFunction& chi, int k) {
    if (k < 0) throw std::invalid_argument("ext_power: k < 0");
    const FiniteGroup& G = *chi.G;
    std::vector<ClassFunction> lam(k + 1);
    lam[0] = trivial_character(G);
    for (int m = 1; m <= k; ++m) {
        lam[m].G = &G;
        lam[m].values.resize(G.class_count());
        for (int c = 0; c < G.class_count(); ++c) {
            Cyclotomic acc = Cyclotomic::zero();
            Rational sign(1);
            for (int i = 1; i <= m; ++i) {
                acc += Cyclotomic(sign) * chi.values[G.power_class(c, i)] * lam[m - i].values[c];
                sign = -sign;
            }
            lam[m].values[c] = acc * Cyclotomic(Rational(1, m));
        }
    }
    lam[k].name = "Ext^" + std::to_string(k) + "(" + chi.name + ")";
    return lam[k];
}

ClassFunction det_char(const ClassFunction& chi) {
    Rational d = chi.degree();
    if (!d.is_integer() || d.sign() < 0) throw std::invalid_argument("det_char: bad degree");
    return ext_power(chi, (int)d.num().to_longlong());
}

ClassFunction galois_twist_char(const ClassFunction& chi, long long k) {
    ClassFunction out;
    out.G = chi.G;
    out.name = "twist" + std::to_string(k) + "(" + chi.name + ")";
    out.values.resize(chi.values.size());
    for (size_t c = 0; c < chi.values.size(); ++c) out.values[c] = chi.values[c].galois_map(k);
    return out;
}

Multiplicities decompose(const ClassFunction& f, const CharacterTable& table) {
    Multiplicities m;
    ClassFunction recon;
    recon.G = f.G;
    recon.values.assign(f.values.size(), Cyclotomic::zero());
    for (int i = 0; i < table.size(); ++i) {
        Cyclotomic ip = inner_product(f, table.irrep(i));
        if (ip.is_zero()) continue;
        if (!ip.is_rational() || !ip.rational_part().is_integer())
            throw std::domain_error("decompose: non-integral multiplicity (not a virtual character)");
        long long c = ip.rational_part().num().to_longlong();
        m.by_irrep[i] = c;
        if (c < 0) m.is_character = false;
        for (size_t cl = 0; cl < recon.values.size(); ++cl)
            recon.values[cl] += Cyclotomic(Rational(c)) * table.irrep(i).values[cl];
    }
    if (recon.values != f.values)
        throw std::domain_error("decompose: reconstruction mismatch (not a virtual character)");
    return m;
}

std::vector<Cyclotomic> character_eigenvalues(const ClassFunction& chi, int class_index) {
    const FiniteGroup& G = *chi.G;
    int d = G.class_order(class_index);
    Rational inv_d(BigInt(1), BigInt(d));
    std::vector<Cyclotomic> eig;
    long long total = 0;
    for (int j = 0; j < d; ++j) {
        Cyclotomic m = Cyclotomic::zero();
        for (int l = 0; l < d; ++l)
            m += chi.values[G.power_class(class_index, l)] *
                 Cyclotomic::root_of_unity(d, -(long long)j * l);
        m *= Cyclotomic(inv_d);
        if (!m.is_rational() || !m.rational_part().is_integer() ||
            m.rational_part().sign() < 0)
            throw std::domain_error("character_eigenvalues: inconsistent multiplicities");
        long long cnt = m.rational_part().num().to_longlong();
        total += cnt;
        for (long long t = 0; t < cnt; ++t) eig.push_back(Cyclotomic::root_of_unity(d, j));
    }
    if (Rational(total) != chi.degree())
        throw std::domain_error("character_eigenvalues: multiplicities do not sum to the degree");
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace icotrace
