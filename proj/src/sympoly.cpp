#include "icotrace/sympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace icotrace {

SymPoly SymPoly::constant(const Rational& c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

SymPoly SymPoly::monomial(std::vector<Block> blocks, Exponents e, const Rational& c) {
    SymPoly p;
    p.blocks_ = std::move(blocks);
    size_t want = 0;
    for (const auto& b : p.blocks_) want += (size_t)b.slots;
    if (e.size() != want) throw std::invalid_argument("SymPoly::monomial: exponent size");
    for (size_t i = 1; i < p.blocks_.size(); ++i)
        if (p.blocks_[i - 1].place >= p.blocks_[i].place)
            throw std::invalid_argument("SymPoly::monomial: blocks must be sorted by place");
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<SymPoly::Block> SymPoly::merge_layouts(const std::vector<Block>& a,
                                                   const std::vector<Block>& b) {
    std::vector<Block> out = a;
    for (const auto& blk : b) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Block& x) { return x.place == blk.place; });
        if (it == out.end())
            out.push_back(blk);
        else if (it->slots != blk.slots)
            throw std::invalid_argument("SymPoly: slot mismatch for shared place");
    }
    std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) { return x.place < y.place; });
    return out;
}

SymPoly SymPoly::embedded(const std::vector<Block>& layout) const {
    // offsets in the target layout
    std::map<int, size_t> off;
    size_t total = 0;
    for (const auto& b : layout) {
        off[b.place] = total;
        total += (size_t)b.slots;
    }
    std::vector<size_t> src_off(blocks_.size());
    {
        size_t acc = 0;
        for (size_t i = 0; i < blocks_.size(); ++i) {
            src_off[i] = acc;
            acc += (size_t)blocks_[i].slots;
        }
    }
    SymPoly out;
    out.blocks_ = layout;
    for (const auto& [e, c] : terms_) {
        Exponents ne(total, 0);
        for (size_t i = 0; i < blocks_.size(); ++i) {
            auto it = off.find(blocks_[i].place);
            if (it == off.end()) throw std::invalid_argument("SymPoly::embedded: missing block");
            for (int s = 0; s < blocks_[i].slots; ++s) ne[it->second + s] = e[src_off[i] + s];
        }
        out.add_term(ne, c);
    }
    return out;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    auto layout = merge_layouts(blocks_, o.blocks_);
    SymPoly a = embedded(layout), b = o.embedded(layout);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o.scaled(Rational(-1)); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    auto layout = merge_layouts(blocks_, o.blocks_);
    SymPoly a = embedded(layout), b = o.embedded(layout);
    SymPoly out;
    out.blocks_ = layout;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SymPoly SymPoly::scaled(const Rational& c) const {
    SymPoly out;
    out.blocks_ = blocks_;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

bool SymPoly::operator==(const SymPoly& o) const {
    auto layout = merge_layouts(blocks_, o.blocks_);
    return embedded(layout).terms_ == o.embedded(layout).terms_;
}

bool SymPoly::is_symmetric() const {
    size_t off = 0;
    for (const auto& b : blocks_) {
        for (int s = 0; s + 1 < b.slots; ++s) {
            for (const auto& [e, c] : terms_) {
                Exponents t = e;
                std::swap(t[off + s], t[off + s + 1]);
                auto it = terms_.find(t);
                if (it == terms_.end() || it->second != c) return false;
            }
        }
        off += (size_t)b.slots;
    }
    return true;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        size_t off = 0;
        for (const auto& b : blocks_) {
            for (int s = 0; s < b.slots; ++s) {
                int ex = e[off + s];
                if (ex != 0) os << " t" << s + 1 << "w" << b.place << "^" << ex;
            }
            off += (size_t)b.slots;
        }
    }
    return os.str();
}

}  // namespace icotrace
