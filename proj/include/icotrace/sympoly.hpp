#pragma once

#include <map>
#include <string>
#include <vector>

#include "icotrace/cyclotomic.hpp"

namespace icotrace {

// Sparse symmetric Laurent polynomial over place-indexed variable blocks
// t_{1,w}, ..., t_{n,w}: a Satake-side Hecke operator. Terms map a
// concatenated exponent vector (block order = ascending place id) to an
// exact rational coefficient.
class SymPoly {
public:
    struct Block {
        int place;
        int slots;
        bool operator==(const Block& o) const { return place == o.place && slots == o.slots; }
    };
    using Exponents = std::vector<int>;

    SymPoly() = default;  // zero
    static SymPoly constant(const Rational& c);
    static SymPoly monomial(std::vector<Block> blocks, Exponents e, const Rational& c);

    const std::vector<Block>& blocks() const { return blocks_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly scaled(const Rational& c) const;
    bool operator==(const SymPoly& o) const;

    // invariance under slot permutations within every place block
    bool is_symmetric() const;

    std::string to_string() const;

    // rewrite over a block layout that contains this polynomial's blocks
    SymPoly embedded(const std::vector<Block>& layout) const;
    static std::vector<Block> merge_layouts(const std::vector<Block>& a,
                                            const std::vector<Block>& b);

private:
    std::vector<Block> blocks_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace icotrace
