#include "icotrace/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace icotrace {

namespace {

uint64_t encode_mat2(unsigned m, unsigned a, unsigned b, unsigned c, unsigned d) {
    return ((uint64_t)a * m + b) * m * m + (uint64_t)c * m + d;
}

std::array<unsigned, 4> decode_mat2(unsigned m, uint64_t code) {
    unsigned d = (unsigned)(code % m);
    code /= m;
    unsigned c = (unsigned)(code % m);
    code /= m;
    unsigned b = (unsigned)(code % m);
    code /= m;
    unsigned a = (unsigned)(code % m);
    return {a, b, c, d};
}

uint64_t mat2_mul(unsigned m, uint64_t x, uint64_t y) {
    auto A = decode_mat2(m, x), B = decode_mat2(m, y);
    return encode_mat2(m, (A[0] * B[0] + A[1] * B[2]) % m, (A[0] * B[1] + A[1] * B[3]) % m,
                       (A[2] * B[0] + A[3] * B[2]) % m, (A[2] * B[1] + A[3] * B[3]) % m);
}

}  // namespace

void FiniteGroup::finish_build() {
    size_ = codes_.size();
    inverse_.assign(size_, -1);
    elt_order_.assign(size_, 0);
    for (size_t a = 0; a < size_; ++a) {
        for (size_t b = 0; b < size_; ++b)
            if (mul((int)a, (int)b) == identity_) {
                inverse_[a] = (int)b;
                break;
            }
        if (inverse_[a] < 0) throw std::logic_error("group: element without inverse");
        int x = (int)a, n = 1;
        while (x != identity_) {
            x = mul(x, (int)a);
            ++n;
        }
        elt_order_[a] = n;
    }
    // associativity spot check
    if (size_ > 1) {
        for (size_t t = 0; t < std::min<size_t>(64, size_ * size_); ++t) {
            int a = (int)(t % size_), b = (int)((t * 7 + 1) % size_), c = (int)((t * 13 + 2) % size_);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::logic_error("group: associativity violated");
        }
    }
    // classes computed eagerly so the object is immutable (and thread-safe)
    // once construction returns
    class_data();
}

FiniteGroup FiniteGroup::from_table(std::vector<uint64_t> codes, std::vector<int> table,
                                    int identity, std::string name) {
    FiniteGroup G;
    G.codes_ = std::move(codes);
    G.table_ = std::move(table);
    G.identity_ = identity;
    G.name_ = std::move(name);
    if (G.table_.size() != G.codes_.size() * G.codes_.size())
        throw std::invalid_argument("from_table: bad table size");
    G.finish_build();
    return G;
}

FiniteGroup FiniteGroup::mat2_group(unsigned m, const std::vector<std::array<unsigned, 4>>& gens,
                                    std::string name, size_t cap) {
    FiniteGroup G;
    G.name_ = std::move(name);
    std::unordered_map<uint64_t, int> index;
    std::vector<uint64_t> elems;
    uint64_t id = encode_mat2(m, 1, 0, 0, 1);
    elems.push_back(id);
    index[id] = 0;
    std::vector<uint64_t> gen_codes;
    for (const auto& g : gens) {
        unsigned det = ((uint64_t)g[0] * g[3] % m + (uint64_t)m * m - (uint64_t)g[1] * g[2] % m) % m;
        if (det != 1) throw std::invalid_argument("mat2_group: generator not in SL2 (det != 1)");
        gen_codes.push_back(encode_mat2(m, g[0] % m, g[1] % m, g[2] % m, g[3] % m));
    }
    for (size_t head = 0; head < elems.size(); ++head) {
        for (uint64_t g : gen_codes) {
            uint64_t w = mat2_mul(m, elems[head], g);
            if (!index.count(w)) {
                if (elems.size() >= cap) throw std::runtime_error("group closure exceeds cap");
                index[w] = (int)elems.size();
                elems.push_back(w);
            }
        }
    }
    G.codes_ = elems;
    G.identity_ = 0;
    G.table_.assign(elems.size() * elems.size(), -1);
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            auto it = index.find(mat2_mul(m, elems[a], elems[b]));
            if (it == index.end()) throw std::logic_error("group: closure not closed");
            G.table_[a * elems.size() + b] = it->second;
        }
    G.finish_build();
    return G;
}

FiniteGroup FiniteGroup::cyclic(unsigned n, std::string name) {
    if (n == 0) throw std::invalid_argument("cyclic: order 0");
    FiniteGroup G;
    G.name_ = name.empty() ? ("c" + std::to_string(n)) : std::move(name);
    G.codes_.resize(n);
    std::iota(G.codes_.begin(), G.codes_.end(), 0);
    G.identity_ = 0;
    G.table_.assign((size_t)n * n, 0);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) G.table_[(size_t)a * n + b] = (int)((a + b) % n);
    G.finish_build();
    return G;
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec, size_t cap) {
    if (spec == "trivial") return cyclic(1, "trivial");
    if (spec == "sl2z5") return mat2_group(5, {{{1, 1, 0, 1}}, {{0, 4, 1, 0}}}, "sl2z5", cap);
    if (spec == "sl2z7") return mat2_group(7, {{{1, 1, 0, 1}}, {{0, 6, 1, 0}}}, "sl2z7", cap);
    if (spec == "sl2z3" || spec == "a4tilde")
        return mat2_group(3, {{{1, 1, 0, 1}}, {{0, 2, 1, 0}}}, "a4tilde", cap);
    if (spec == "q8") return mat2_group(5, {{{2, 0, 0, 3}}, {{0, 4, 1, 0}}}, "q8", cap);
    if (spec.rfind("cyclic", 0) == 0) {
        unsigned n = (unsigned)std::stoul(spec.substr(6));
        if (n > cap) throw std::runtime_error("group closure exceeds cap");
        return cyclic(n);
    }
    throw std::invalid_argument("unknown group spec: " + spec);
}

int FiniteGroup::pow(int a, long long e) const {
    int n = elt_order_[a];
    long long ee = ((e % n) + n) % n;
    int r = identity_;
    int base = a;
    while (ee) {
        if (ee & 1) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

unsigned FiniteGroup::exponent() const {
    unsigned e = 1;
    for (size_t a = 0; a < size_; ++a) e = (unsigned)std::lcm<unsigned>(e, (unsigned)elt_order_[a]);
    return e;
}

void FiniteGroup::class_data() const {
    if (!class_of_.empty()) return;
    class_of_.assign(size_, -1);
    for (size_t x = 0; x < size_; ++x) {
        if (class_of_[x] >= 0) continue;
        int c = (int)classes_.size();
        std::set<int> orbit;
        for (size_t g = 0; g < size_; ++g) orbit.insert(conjugate((int)g, (int)x));
        classes_.emplace_back(orbit.begin(), orbit.end());
        for (int y : classes_.back()) class_of_[y] = c;
    }
    class_labels_.clear();
    for (size_t c = 0; c < classes_.size(); ++c) class_labels_.push_back("K" + std::to_string(c));
    class_display_.resize(classes_.size());
    std::iota(class_display_.begin(), class_display_.end(), 0);
}

const std::vector<std::string>& FiniteGroup::class_labels() const {
    class_data();
    return class_labels_;
}

void FiniteGroup::set_class_labels(std::vector<std::string> labels) const {
    class_data();
    if (labels.size() != classes_.size()) throw std::invalid_argument("bad label count");
    class_labels_ = std::move(labels);
}

const std::vector<int>& FiniteGroup::class_display_order() const {
    class_data();
    return class_display_;
}

void FiniteGroup::set_class_display_order(std::vector<int> order) const {
    class_data();
    if (order.size() != classes_.size()) throw std::invalid_argument("bad display order");
    class_display_ = std::move(order);
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (size_t x = 0; x < size_; ++x) {
        bool central = true;
        for (size_t g = 0; g < size_ && central; ++g)
            central = mul((int)x, (int)g) == mul((int)g, (int)x);
        if (central) z.push_back((int)x);
    }
    return z;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
    std::vector<char> in(size_, 0);
    std::vector<int> elems{identity_};
    in[identity_] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            elems.push_back(g);
        }
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t j = 0; j < elems.size(); ++j) {
            int w = mul(elems[head], elems[j]);
            if (!in[w]) {
                in[w] = 1;
                elems.push_back(w);
            }
            w = mul(elems[j], elems[head]);
            if (!in[w]) {
                in[w] = 1;
                elems.push_back(w);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> FiniteGroup::derived_subgroup_elements() const {
    std::vector<int> comms;
    std::vector<char> seen(size_, 0);
    for (size_t a = 0; a < size_; ++a)
        for (size_t b = 0; b < size_; ++b) {
            int c = mul(mul((int)a, (int)b), mul(inverse_[a], inverse_[b]));
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    return subgroup_generated(comms);
}

bool FiniteGroup::is_perfect() const { return derived_subgroup_elements().size() == size_; }

bool FiniteGroup::same_content(const FiniteGroup& o) const {
    return this == &o || (codes_ == o.codes_ && table_ == o.table_ && identity_ == o.identity_);
}

std::vector<int> FiniteGroup::abelianization() const {
    auto D = derived_subgroup_elements();
    // quotient group G/D assembled as a table group
    std::vector<int> coset_of(size_, -1);
    std::vector<int> reps;
    for (size_t x = 0; x < size_; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = (int)reps.size();
        reps.push_back((int)x);
        for (int d : D) coset_of[mul((int)x, d)] = c;
    }
    int q = (int)reps.size();
    std::vector<int> table((size_t)q * q);
    std::vector<uint64_t> codes(q);
    std::iota(codes.begin(), codes.end(), 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[(size_t)a * q + b] = coset_of[mul(reps[a], reps[b])];
    FiniteGroup A = from_table(std::move(codes), std::move(table), coset_of[identity_], "ab");
    // invariant factors by greedy max-order peeling on successive quotients
    std::vector<int> factors;
    std::vector<int> proj(q);
    std::iota(proj.begin(), proj.end(), 0);
    int classes = q;
    while (classes > 1) {
        auto order_in_quot = [&](int a) {
            int x = a, n = 1;
            while (proj[x] != proj[A.identity()]) {
                x = A.mul(x, a);
                ++n;
            }
            return n;
        };
        int best = A.identity(), best_ord = 1;
        for (int a = 0; a < q; ++a) {
            int n = order_in_quot(a);
            if (n > best_ord) {
                best_ord = n;
                best = a;
            }
        }
        factors.push_back(best_ord);
        std::vector<int> newproj(q, -1);
        int next = 0;
        for (int a = 0; a < q; ++a) {
            if (newproj[a] >= 0) continue;
            int x = a;
            do {
                for (int b = 0; b < q; ++b)
                    if (proj[b] == proj[x] && newproj[b] < 0) newproj[b] = next;
                x = A.mul(x, best);
            } while (proj[x] != proj[a]);
            ++next;
        }
        proj = std::move(newproj);
        classes = next;
    }
    std::sort(factors.begin(), factors.end(), std::greater<int>());
    return factors;
}

bool FiniteGroup::is_quasi_simple() const {
    if (!is_perfect()) return false;
    auto Z = center();
    std::vector<char> in_z(size_, 0);
    for (int z : Z) in_z[z] = 1;
    class_data();
    for (const auto& cls : classes_) {
        if (cls[0] == identity_ || in_z[cls[0]]) continue;
        auto N = subgroup_generated(cls);  // normal closure (class is conjugation stable)
        if (N.size() < size_) return false;
    }
    return true;
}

bool Subgroup::contains(int parent_elt) const {
    return std::binary_search(elements.begin(), elements.end(), parent_elt);
}

int Subgroup::from_parent(int parent_elt) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_elt);
    if (it == elements.end() || *it != parent_elt) return -1;
    return (int)(it - elements.begin());
}

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elements, std::string name) {
    Subgroup S;
    S.parent = &G;
    S.elements = elements;
    std::sort(S.elements.begin(), S.elements.end());
    S.elements.erase(std::unique(S.elements.begin(), S.elements.end()), S.elements.end());
    std::vector<int> idx(G.order(), -1);
    for (size_t i = 0; i < S.elements.size(); ++i) idx[S.elements[i]] = (int)i;
    if (idx[G.identity()] < 0) throw std::invalid_argument("subgroup: missing identity");
    size_t n = S.elements.size();
    std::vector<int> table(n * n, -1);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            int w = G.mul(S.elements[a], S.elements[b]);
            if (idx[w] < 0) throw std::invalid_argument("subgroup: not closed under multiplication");
            table[a * n + b] = idx[w];
        }
    std::vector<uint64_t> codes(n);
    for (size_t i = 0; i < n; ++i) codes[i] = G.encoding(S.elements[i]);
    S.group = std::make_shared<FiniteGroup>(
        FiniteGroup::from_table(std::move(codes), std::move(table), idx[G.identity()], std::move(name)));
    S.to_parent = S.elements;
    return S;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H) {
    std::vector<char> assigned(G.order(), 0);
    std::vector<std::vector<int>> cosets;
    for (int g = 0; g < G.order(); ++g) {
        if (assigned[g]) continue;
        std::vector<int> coset;
        coset.reserve(H.elements.size());
        for (int h : H.elements) coset.push_back(G.mul(g, h));
        std::sort(coset.begin(), coset.end());
        for (int x : coset) assigned[x] = 1;
        cosets.push_back(std::move(coset));
    }
    std::sort(cosets.begin(), cosets.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return cosets;
}

std::vector<int> frobenius_orbit_sizes(const FiniteGroup& G, int sigma, const Subgroup& H) {
    auto cosets = left_cosets(G, H);
    std::vector<int> coset_of(G.order(), -1);
    for (size_t i = 0; i < cosets.size(); ++i)
        for (int x : cosets[i]) coset_of[x] = (int)i;
    std::vector<int> image(cosets.size());
    for (size_t i = 0; i < cosets.size(); ++i) image[i] = coset_of[G.mul(sigma, cosets[i][0])];
    std::vector<char> seen(cosets.size(), 0);
    std::vector<int> sizes;
    for (size_t i = 0; i < cosets.size(); ++i) {
        if (seen[i]) continue;
        int n = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++n;
            j = (size_t)image[j];
        }
        sizes.push_back(n);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

}  // namespace icotrace
