#include "icotrace/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icotrace {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime_u(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t primitive_root(uint64_t p) {
    uint64_t phi = p - 1;
    std::vector<uint64_t> fac;
    uint64_t m = phi;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t f : fac)
            if (powmod(g, phi / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

// reduced column echelon basis of the span; returns pivot row per column
void column_reduce(std::vector<std::vector<uint64_t>>& cols, std::vector<int>& pivots, uint64_t p) {
    pivots.clear();
    size_t k = cols.empty() ? 0 : cols[0].size();
    size_t done = 0;
    for (size_t row = 0; row < k && done < cols.size(); ++row) {
        size_t sel = done;
        while (sel < cols.size() && cols[sel][row] == 0) ++sel;
        if (sel == cols.size()) continue;
        std::swap(cols[done], cols[sel]);
        uint64_t inv = invmod(cols[done][row], p);
        for (size_t r = 0; r < k; ++r) cols[done][r] = mulmod(cols[done][r], inv, p);
        for (size_t c = 0; c < cols.size(); ++c) {
            if (c == done || cols[c][row] == 0) continue;
            uint64_t f = cols[c][row];
            for (size_t r = 0; r < k; ++r)
                cols[c][r] = (cols[c][r] + p - mulmod(f, cols[done][r], p)) % p;
        }
        pivots.push_back((int)row);
        ++done;
    }
    cols.resize(done);
}

// nullspace basis of a square matrix over F_p
std::vector<std::vector<uint64_t>> nullspace(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    size_t n = m.size();
    std::vector<int> where(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t sel = row;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[row]);
        uint64_t inv = invmod(m[row][col], p);
        for (size_t c = 0; c < n; ++c) m[row][c] = mulmod(m[row][c], inv, p);
        for (size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            uint64_t f = m[r][col];
            for (size_t c = 0; c < n; ++c)
                m[r][c] = (m[r][c] + p - mulmod(f, m[row][c], p)) % p;
        }
        where[col] = (int)row;
        ++row;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (size_t col = 0; col < n; ++col) {
        if (where[col] >= 0) continue;
        std::vector<uint64_t> v(n, 0);
        v[col] = 1;
        for (size_t c = 0; c < n; ++c)
            if (where[c] >= 0) v[c] = (p - m[where[c]][col]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Rational ClassFunction::degree() const {
    return values[G->class_of(G->identity())].rational_part();
}

ClassFunction trivial_character(const FiniteGroup& G) {
    ClassFunction f;
    f.G = &G;
    f.values.assign(G.class_count(), Cyclotomic::one());
    f.name = "1";
    return f;
}

CharacterTable::CharacterTable(const FiniteGroup& G) : G_(&G) {
    compute();
    verify_orthogonality();
}

void CharacterTable::compute() {
    const FiniteGroup& G = *G_;
    int k = G.class_count();
    unsigned e = G.exponent();

    // cyclic groups: direct construction, no modular work needed
    int gen = -1;
    for (int x = 0; x < G.order(); ++x)
        if (G.element_order(x) == G.order()) {
            gen = x;
            break;
        }
    if (gen >= 0) {
        int n = G.order();
        std::vector<int> log_of(n, -1);
        int x = G.identity();
        for (int l = 0; l < n; ++l) {
            log_of[x] = l;
            x = G.mul(x, gen);
        }
        for (int j = 0; j < n; ++j) {
            ClassFunction f;
            f.G = &G;
            f.name = "chi" + std::to_string(j);
            f.values.resize(k);
            for (int c = 0; c < k; ++c)
                f.values[c] = Cyclotomic::root_of_unity(n, (long long)j * log_of[G.class_rep(c)]);
            irreps_.push_back(std::move(f));
        }
        std::sort(irreps_.begin() + 1, irreps_.end(),
                  [](const ClassFunction& a, const ClassFunction& b) {
                      for (size_t c = 0; c < a.values.size(); ++c)
                          if (a.values[c] != b.values[c]) return a.values[c] < b.values[c];
                      return false;
                  });
        for (int i = 0; i < (int)irreps_.size(); ++i) irreps_[i].name = "chi" + std::to_string(i);
        return;
    }

    // class multiplication constants a[i][j][m]: #{(x,y) in Ci x Cj : xy = z_m}
    std::vector<std::vector<std::vector<uint64_t>>> a(
        k, std::vector<std::vector<uint64_t>>(k, std::vector<uint64_t>(k, 0)));
    for (int m = 0; m < k; ++m) {
        int z = G.class_rep(m);
        for (int i = 0; i < k; ++i)
            for (int x : G.classes()[i]) a[i][G.class_of(G.mul(G.inverse(x), z))][m] += 1;
    }
    // note: a[i][j][m] as filled counts pairs with x in Ci, y = x^-1 z; the
    // matrix acting on central-character vectors is M_i[j][m] = a(i, j -> m):
    // omega_i * omega_j = sum_m a_{ijm} omega_m, so (M_i v)_j = sum_m a[i][j][m] v_m.

    // choose prime p = 1 mod e, p > 2 sqrt(|G|), p not dividing |G|
    double bound = 2.0 * std::sqrt((double)G.order());
    uint64_t p = e + 1;
    auto admissible = [&](uint64_t q) {
        return q % e == 1 && (double)q > bound && (uint64_t)G.order() % q != 0 && is_prime_u(q);
    };
    while (!admissible(p)) p += e;

    for (int attempt = 0; attempt < 8; ++attempt, p += e) {
        while (!admissible(p)) p += e;
        prime_ = (unsigned)p;
        // split F_p^k into common eigenspaces of the class matrices
        std::vector<std::vector<std::vector<uint64_t>>> spaces;
        {
            std::vector<std::vector<uint64_t>> full;
            for (int c = 0; c < k; ++c) {
                std::vector<uint64_t> v(k, 0);
                v[c] = 1;
                full.push_back(std::move(v));
            }
            spaces.push_back(std::move(full));
        }
        for (int i = 0; i < k; ++i) {
            bool all_one = true;
            for (const auto& s : spaces) all_one = all_one && s.size() == 1;
            if (all_one) break;
            std::vector<std::vector<std::vector<uint64_t>>> next;
            for (auto& basis : spaces) {
                if (basis.size() == 1) {
                    next.push_back(std::move(basis));
                    continue;
                }
                std::vector<int> pivots;
                column_reduce(basis, pivots, p);
                size_t d = basis.size();
                // image columns M_i * b and the restriction S via pivot rows
                std::vector<std::vector<uint64_t>> S(d, std::vector<uint64_t>(d, 0));
                for (size_t c = 0; c < d; ++c) {
                    std::vector<uint64_t> img(k, 0);
                    for (int j = 0; j < k; ++j) {
                        uint64_t acc = 0;
                        for (int m2 = 0; m2 < k; ++m2)
                            acc = (acc + mulmod(a[i][j][m2] % p, basis[c][m2], p)) % p;
                        img[j] = acc;
                    }
                    for (size_t r = 0; r < d; ++r) S[r][c] = img[pivots[r]];
                }
                // split by eigenvalues of S
                size_t found = 0;
                for (uint64_t lam = 0; lam < p && found < d; ++lam) {
                    auto M = S;
                    for (size_t r = 0; r < d; ++r) M[r][r] = (M[r][r] + p - lam) % p;
                    auto ns = nullspace(M, p);
                    if (ns.empty()) continue;
                    found += ns.size();
                    std::vector<std::vector<uint64_t>> sub;
                    for (const auto& nv : ns) {
                        std::vector<uint64_t> v(k, 0);
                        for (size_t c = 0; c < d; ++c)
                            for (int r = 0; r < k; ++r)
                                v[r] = (v[r] + mulmod(nv[c], basis[c][r], p)) % p;
                        sub.push_back(std::move(v));
                    }
                    next.push_back(std::move(sub));
                }
                if (found != d) throw std::logic_error("dixon: eigenspaces do not fill subspace");
            }
            spaces = std::move(next);
        }
        bool split_ok = true;
        for (const auto& s : spaces) split_ok = split_ok && s.size() == 1;
        if (!split_ok) continue;  // retry with next prime

        // normalize eigenvectors: omega at the identity class equals 1
        int idc = G.class_of(G.identity());
        std::vector<std::vector<uint64_t>> omegas;
        bool ok = true;
        for (auto& s : spaces) {
            auto v = s[0];
            if (v[idc] == 0) {
                ok = false;
                break;
            }
            uint64_t f = invmod(v[idc], p);
            for (auto& x : v) x = mulmod(x, f, p);
            omegas.push_back(std::move(v));
        }
        if (!ok) continue;

        // degrees and mod-p character values
        irreps_.clear();
        unsigned sq_bound = (unsigned)std::sqrt((double)G.order()) + 1;
        std::vector<std::vector<uint64_t>> modvals;
        std::vector<uint64_t> degrees;
        for (const auto& w : omegas) {
            uint64_t t = 0;
            for (int i = 0; i < k; ++i) {
                uint64_t term = mulmod(w[i], w[G.inverse_class(i)], p);
                t = (t + mulmod(term, invmod((uint64_t)G.class_size(i) % p, p), p)) % p;
            }
            if (t == 0) {
                ok = false;
                break;
            }
            uint64_t d2 = mulmod((uint64_t)G.order() % p, invmod(t, p), p);
            uint64_t deg = 0;
            for (uint64_t d = 1; d <= sq_bound; ++d)
                if (mulmod(d, d, p) == d2) {
                    deg = d;
                    break;
                }
            if (deg == 0) {
                ok = false;
                break;
            }
            degrees.push_back(deg);
            std::vector<uint64_t> vals(k);
            for (int i = 0; i < k; ++i)
                vals[i] = mulmod(mulmod(deg, w[i], p),
                                 invmod((uint64_t)G.class_size(i) % p, p), p);
            modvals.push_back(std::move(vals));
        }
        if (!ok) continue;
        {
            uint64_t sum = 0;
            for (uint64_t d : degrees) sum += d * d;
            if (sum != (uint64_t)G.order()) continue;  // wrong degree recovery; next prime
        }

        // lift by Fourier inversion over power maps: multiplicity of zeta_e^j
        // among the eigenvalues of rho(g_i) is (1/e) sum_l chi(g_i^l) z^{-jl}
        uint64_t z = powmod(primitive_root(p), (p - 1) / e, p);
        uint64_t zinv = invmod(z, p);
        uint64_t einv = invmod(e % p, p);
        bool lifted = true;
        for (size_t r = 0; r < omegas.size() && lifted; ++r) {
            ClassFunction f;
            f.G = &G;
            f.name = "chi";
            f.values.resize(k);
            for (int i = 0; i < k && lifted; ++i) {
                std::vector<long long> mult(e, 0);
                uint64_t total = 0;
                for (unsigned j = 0; j < e; ++j) {
                    uint64_t acc = 0, zj = powmod(zinv, j, p), zl = 1;
                    for (unsigned l = 0; l < e; ++l) {
                        acc = (acc + mulmod(modvals[r][G.power_class(i, l)], zl, p)) % p;
                        zl = mulmod(zl, zj, p);
                    }
                    uint64_t m = mulmod(acc, einv, p);
                    if (m > degrees[r]) {
                        lifted = false;
                        break;
                    }
                    mult[j] = (long long)m;
                    total += m;
                }
                if (!lifted || total != degrees[r]) {
                    lifted = false;
                    break;
                }
                Cyclotomic val = Cyclotomic::zero(e);
                for (unsigned j = 0; j < e; ++j)
                    if (mult[j])
                        val += Cyclotomic(Rational(mult[j]), e) * Cyclotomic::root_of_unity(e, j);
                f.values[i] = val;
            }
            if (lifted) irreps_.push_back(std::move(f));
        }
        if (!lifted || irreps_.size() != (size_t)k) {
            irreps_.clear();
            continue;
        }
        // canonical deterministic row order: degree, then value order
        std::sort(irreps_.begin(), irreps_.end(), [](const ClassFunction& x, const ClassFunction& y) {
            Rational dx = x.degree(), dy = y.degree();
            if (dx != dy) return dx < dy;
            for (size_t c = 0; c < x.values.size(); ++c)
                if (x.values[c] != y.values[c]) return x.values[c] < y.values[c];
            return false;
        });
        for (int i = 0; i < (int)irreps_.size(); ++i) irreps_[i].name = "chi" + std::to_string(i);
        return;
    }
    throw std::runtime_error("dixon: modular lift failed for all attempted primes");
}

void CharacterTable::verify_orthogonality() const {
    const FiniteGroup& G = *G_;
    int k = (int)irreps_.size();
    if (k != G.class_count()) throw std::logic_error("character table: wrong row count");
    Rational order(G.order());
    BigInt degsum(0);
    for (int i = 0; i < k; ++i) {
        BigInt d = irreps_[i].degree().num();
        degsum += d * d;
    }
    if (degsum != BigInt(G.order())) throw std::logic_error("character table: sum of deg^2 != |G|");
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Cyclotomic acc = Cyclotomic::zero();
            for (int c = 0; c < k; ++c)
                acc += Cyclotomic(Rational(G.class_size(c))) * irreps_[i].values[c] *
                       irreps_[j].values[c].conj();
            Cyclotomic expect = (i == j) ? Cyclotomic(order) : Cyclotomic::zero();
            if (acc != expect) throw std::logic_error("character table: orthogonality failed");
        }
}

int CharacterTable::find(const ClassFunction& f) const {
    for (int i = 0; i < (int)irreps_.size(); ++i)
        if (irreps_[i].values == f.values) return i;
    return -1;
}

std::vector<int> CharacterTable::of_degree(long long d) const {
    std::vector<int> out;
    for (int i = 0; i < (int)irreps_.size(); ++i)
        if (irreps_[i].degree() == Rational(d)) out.push_back(i);
    return out;
}

void CharacterTable::apply_row_order(const std::vector<int>& order,
                                     const std::vector<std::string>& names) {
    if (order.size() != irreps_.size() || names.size() != irreps_.size())
        throw std::invalid_argument("apply_row_order: bad sizes");
    std::vector<ClassFunction> next;
    for (size_t i = 0; i < order.size(); ++i) {
        next.push_back(irreps_[order[i]]);
        next.back().name = names[i];
    }
    irreps_ = std::move(next);
}

namespace {

int class_with_order(const FiniteGroup& G, int order, int skip = -1) {
    for (int c = 0; c < G.class_count(); ++c)
        if (G.class_order(c) == order && c != skip) return c;
    throw std::logic_error("class_with_order: not found");
}

void label_icosahedral(const FiniteGroup& G, CharacterTable& T) {
    unsigned e = G.exponent();  // 60
    Cyclotomic u = Cyclotomic::golden_u(e), v = Cyclotomic::golden_v(e);
    int c1 = G.class_of(G.identity());
    int c2 = class_with_order(G, 2);
    int c4 = class_with_order(G, 4);
    int c3 = class_with_order(G, 3);
    int c6 = class_with_order(G, 6);
    int c5a = class_with_order(G, 5);
    int c5b = class_with_order(G, 5, c5a);
    auto deg3 = T.of_degree(3);
    // anchor: theta3(C5) = u
    int theta3, c5, c5p;
    if (T.irrep(deg3[0]).values[c5a] == u) {
        theta3 = deg3[0];
        c5 = c5a;
    } else if (T.irrep(deg3[0]).values[c5b] == u) {
        theta3 = deg3[0];
        c5 = c5b;
    } else if (T.irrep(deg3[1]).values[c5a] == u) {
        theta3 = deg3[1];
        c5 = c5a;
    } else {
        theta3 = deg3[1];
        c5 = c5b;
    }
    c5p = (c5 == c5a) ? c5b : c5a;
    int theta3p = (theta3 == deg3[0]) ? deg3[1] : deg3[0];
    int minus_one = G.class_rep(c2);  // the unique order-2 element is central
    int c10 = G.class_of(G.mul(minus_one, G.class_rep(c5)));
    int c10p = G.class_of(G.mul(minus_one, G.class_rep(c5p)));
    G.set_class_labels([&] {
        std::vector<std::string> lab(G.class_count());
        lab[c1] = "C1";
        lab[c2] = "C2";
        lab[c4] = "C4";
        lab[c3] = "C3";
        lab[c6] = "C6";
        lab[c5] = "C5";
        lab[c10] = "C10";
        lab[c5p] = "C5'";
        lab[c10p] = "C10'";
        return lab;
    }());
    G.set_class_display_order({c1, c2, c4, c3, c6, c5, c10, c5p, c10p});

    auto deg2 = T.of_degree(2);
    Cyclotomic um1 = u - Cyclotomic::one();
    int theta2 = (T.irrep(deg2[0]).values[c5] == um1) ? deg2[0] : deg2[1];
    int theta2p = (theta2 == deg2[0]) ? deg2[1] : deg2[0];
    auto deg4 = T.of_degree(4);
    int theta4 = (T.irrep(deg4[0]).values[c2] == Cyclotomic(Rational(4))) ? deg4[0] : deg4[1];
    int theta4p = (theta4 == deg4[0]) ? deg4[1] : deg4[0];
    int triv = T.of_degree(1).at(0);
    int theta5 = T.of_degree(5).at(0);
    int theta6 = T.of_degree(6).at(0);
    T.apply_row_order(
        {triv, theta3, theta3p, theta4, theta5, theta2, theta2p, theta4p, theta6},
        {"1", "theta3", "theta3'", "theta4", "theta5", "theta2", "theta2'", "theta4'", "theta6"});
}

void label_tetrahedral(const FiniteGroup& G, CharacterTable& T) {
    int c1 = G.class_of(G.identity());
    int c2 = class_with_order(G, 2);
    int c4 = class_with_order(G, 4);
    int c3a = class_with_order(G, 3);
    int c3b = class_with_order(G, 3, c3a);
    // Ct: the order-3 class with the smaller minimal element; Ct2 = class of
    // squares; primed classes are the central twists (order 6)
    int ct = (G.classes()[c3a][0] < G.classes()[c3b][0]) ? c3a : c3b;
    int ct2 = G.power_class(ct, 2);
    int minus_one = G.class_rep(c2);
    int ctp = G.class_of(G.mul(minus_one, G.class_rep(ct)));
    int ct2p = G.class_of(G.mul(minus_one, G.class_rep(ct2)));
    G.set_class_labels([&] {
        std::vector<std::string> lab(G.class_count());
        lab[c1] = "C1";
        lab[c2] = "C2";
        lab[c4] = "C4";
        lab[ct] = "Ct";
        lab[ctp] = "Ct'";
        lab[ct2] = "Ct2";
        lab[ct2p] = "Ct2'";
        return lab;
    }());
    G.set_class_display_order({c1, c2, c4, ct, ctp, ct2, ct2p});

    Cyclotomic omega = Cyclotomic::root_of_unity(3, 1);
    auto deg1 = T.of_degree(1);
    int triv = -1, psi1 = -1, psi1sq = -1;
    for (int i : deg1) {
        if (T.irrep(i).values[ct].is_one())
            triv = i;
        else if (T.irrep(i).values[ct] == omega)
            psi1 = i;
        else
            psi1sq = i;
    }
    auto deg2 = T.of_degree(2);
    int psi2 = -1, psi2psi1 = -1, psi2psi1sq = -1;
    for (int i : deg2) {
        const Cyclotomic& val = T.irrep(i).values[ct];
        if (val == Cyclotomic(Rational(-1)))
            psi2 = i;
        else if (val == -omega)
            psi2psi1 = i;
        else
            psi2psi1sq = i;
    }
    int psi3 = T.of_degree(3).at(0);
    T.apply_row_order({triv, psi1, psi1sq, psi3, psi2, psi2psi1, psi2psi1sq},
                      {"1", "psi1", "psi1^2", "psi3", "psi2", "psi2psi1", "psi2psi1^2"});
}

void label_quaternion(const FiniteGroup& G, CharacterTable& T) {
    int c1 = G.class_of(G.identity());
    int cm1 = class_with_order(G, 2);
    std::vector<int> fours;
    for (int c = 0; c < G.class_count(); ++c)
        if (G.class_order(c) == 4) fours.push_back(c);
    std::sort(fours.begin(), fours.end(),
              [&](int a, int b) { return G.classes()[a][0] < G.classes()[b][0]; });
    int ci = fours[0];
    int cj = fours[1];
    int cij = G.class_of(G.mul(G.class_rep(ci), G.class_rep(cj)));
    if (cij == ci || cij == cj) throw std::logic_error("quaternion labeling: degenerate classes");
    G.set_class_labels([&] {
        std::vector<std::string> lab(G.class_count());
        lab[c1] = "C1";
        lab[cm1] = "C-1";
        lab[ci] = "Ci";
        lab[cj] = "Cj";
        lab[cij] = "Cij";
        return lab;
    }());
    G.set_class_display_order({c1, cm1, ci, cj, cij});

    Cyclotomic one = Cyclotomic::one(), neg = Cyclotomic(Rational(-1));
    int triv = -1, t1 = -1, t1p = -1, t1t1p = -1;
    for (int i : T.of_degree(1)) {
        const auto& vi = T.irrep(i).values;
        if (vi[ci] == one && vi[cj] == one)
            triv = i;
        else if (vi[ci] == neg && vi[cj] == one)
            t1 = i;
        else if (vi[ci] == one && vi[cj] == neg)
            t1p = i;
        else
            t1t1p = i;
    }
    int t2 = T.of_degree(2).at(0);
    T.apply_row_order({triv, t1, t1p, t1t1p, t2},
                      {"1", "Theta1", "Theta1'", "Theta1Theta1'", "Theta2"});
}

}  // namespace

void apply_standard_labeling(const FiniteGroup& G, CharacterTable& T) {
    if (G.name() == "sl2z5")
        label_icosahedral(G, T);
    else if (G.name() == "a4tilde")
        label_tetrahedral(G, T);
    else if (G.name() == "q8")
        label_quaternion(G, T);
}

}  // namespace icotrace
