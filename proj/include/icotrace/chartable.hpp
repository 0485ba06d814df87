#pragma once

#include <string>
#include <vector>

#include "icotrace/cyclotomic.hpp"
#include "icotrace/group.hpp"

namespace icotrace {

// Class function on a finite group, one exact cyclotomic value per conjugacy
// class (indexed by the group's internal class order).
struct ClassFunction {
    const FiniteGroup* G = nullptr;
    std::vector<Cyclotomic> values;
    std::string name;

    const Cyclotomic& at_class(int c) const { return values[c]; }
    const Cyclotomic& at_element(int x) const { return values[G->class_of(x)]; }
    Rational degree() const;  // value at the identity class; must be rational

    bool operator==(const ClassFunction& o) const { return values == o.values; }
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }
};

ClassFunction trivial_character(const FiniteGroup& G);

// Complete table of irreducible characters, exact values in Q(zeta_exp(G)).
// Computed by the Dixon-Schneider method: class-algebra eigenvectors over a
// prime p = 1 mod exp(G), p > 2 sqrt(|G|), lifted by discrete Fourier
// inversion over the power maps. Retries with the next admissible prime on
// lift failure.
class CharacterTable {
public:
    explicit CharacterTable(const FiniteGroup& G);

    const FiniteGroup& group() const { return *G_; }
    int size() const { return (int)irreps_.size(); }
    const ClassFunction& irrep(int i) const { return irreps_[i]; }
    const std::vector<ClassFunction>& irreps() const { return irreps_; }
    // index of the irrep equal to f, or -1
    int find(const ClassFunction& f) const;
    // indices of irreps of the given degree
    std::vector<int> of_degree(long long d) const;
    unsigned prime_used() const { return prime_; }

    // reorder/rename rows (used by the standard-labeling code)
    void apply_row_order(const std::vector<int>& order, const std::vector<std::string>& names);

private:
    const FiniteGroup* G_;
    std::vector<ClassFunction> irreps_;
    unsigned prime_ = 0;

    void compute();
    void verify_orthogonality() const;
};

// Attach the standard labels to the bundled tables: class labels and display
// order plus row names/order. The icosahedral labeling is anchored by the
// convention theta3(C5) = u with u = -z5^2 - z5^3 (the positive root of
// x^2 - x - 1); C10 is the class of -g for g in C5. No-op for other groups.
void apply_standard_labeling(const FiniteGroup& G, CharacterTable& table);

}  // namespace icotrace
