#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace icotrace {

// Multiplication-table finite group. Elements are canonical uint64 encodings
// (2x2 matrices over Z/m flattened, or residues for cyclic groups); after
// closure only the index table matters.
class FiniteGroup {
public:
    // arithmetic kinds for build_group
    static FiniteGroup mat2_group(unsigned m, const std::vector<std::array<unsigned, 4>>& gens,
                                  std::string name, size_t cap = 10000);
    static FiniteGroup cyclic(unsigned n, std::string name = "");
    // bundled specs: "sl2z5", "sl2z7", "sl2z3" (= binary tetrahedral), "q8",
    // "cyclic<n>", "trivial"
    static FiniteGroup from_spec(const std::string& spec, size_t cap = 10000);
    // assemble from explicit codes and a multiplication table (row-major)
    static FiniteGroup from_table(std::vector<uint64_t> codes, std::vector<int> table,
                                  int identity, std::string name);

    int order() const { return (int)size_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[(size_t)a * size_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }  // g x g^-1
    int pow(int a, long long e) const;
    int element_order(int a) const { return elt_order_[a]; }
    unsigned exponent() const;  // lcm of element orders
    uint64_t encoding(int a) const { return codes_[a]; }
    const std::string& name() const { return name_; }

    // conjugacy classes, computed on first use and cached
    int class_count() const { class_data(); return (int)classes_.size(); }
    int class_of(int elt) const { class_data(); return class_of_[elt]; }
    const std::vector<std::vector<int>>& classes() const { class_data(); return classes_; }
    int class_rep(int c) const { class_data(); return classes_[c][0]; }
    int class_size(int c) const { class_data(); return (int)classes_[c].size(); }
    int class_order(int c) const { class_data(); return elt_order_[classes_[c][0]]; }
    int inverse_class(int c) const { class_data(); return class_of_[inverse_[classes_[c][0]]]; }
    // class of g^m for g in class c (well defined)
    int power_class(int c, long long m) const { class_data(); return class_of_[pow(classes_[c][0], m)]; }

    // standard class labels (C1, C2, ..., C5, C10, C5', C10' for the
    // binary icosahedral group); set by labeling code, defaults to "K<i>".
    const std::vector<std::string>& class_labels() const;
    void set_class_labels(std::vector<std::string> labels) const;
    // permutation of classes applied to reports so columns appear in the
    // standard order; identity by default
    const std::vector<int>& class_display_order() const;
    void set_class_display_order(std::vector<int> order) const;

    // derived data
    std::vector<int> center() const;
    std::vector<int> derived_subgroup_elements() const;
    bool is_perfect() const;
    // invariant factors of G/[G,G], e.g. {3} for Z/3, {} for perfect G
    std::vector<int> abelianization() const;
    bool is_quasi_simple() const;

    // subgroup closure of a set of element indices
    std::vector<int> subgroup_generated(const std::vector<int>& gens) const;

    // structural identity: same element encodings and multiplication table.
    // Distinct FiniteGroup objects built from the same elements are
    // interchangeable for class-function work.
    bool same_content(const FiniteGroup& o) const;

private:
    size_t size_ = 0;
    int identity_ = 0;
    std::vector<uint64_t> codes_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> elt_order_;
    std::string name_;

    mutable std::vector<int> class_of_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<std::string> class_labels_;
    mutable std::vector<int> class_display_;

    void class_data() const;
    void finish_build();
};

// A subgroup materialized as its own FiniteGroup together with the embedding
// into the parent (needed for fusion of conjugacy classes).
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;           // parent indices, sorted
    std::shared_ptr<FiniteGroup> group;  // reindexed copy
    std::vector<int> to_parent;          // subgroup index -> parent index

    bool contains(int parent_elt) const;
    int index_in_parent() const { return parent->order() / group->order(); }
    int from_parent(int parent_elt) const;  // -1 if absent
};

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elements, std::string name);

// orbit sizes of <sigma> acting by left multiplication on G/H; sorted
// descending. Each orbit is one place above an unramified place, with
// inertia degree = orbit size.
std::vector<int> frobenius_orbit_sizes(const FiniteGroup& G, int sigma, const Subgroup& H);

// cosets of H in G: each coset is the sorted list of its parent elements;
// cosets ordered by smallest member
std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H);

}  // namespace icotrace
