#include "vertex_set.hpp"

#include <bit>
#include <cassert>

#include "errors.hpp"

namespace primex {

namespace {
constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw DomainError("vertex set universe must be non-negative");
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % kWordBits != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << (universe % kWordBits)) - 1;
    return s;
}

VertexSet VertexSet::single(int universe, int v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > kWordBits) throw DomainError("from_mask supports universes up to 64");
    VertexSet s(universe);
    if (universe > 0) {
        std::uint64_t cap = universe == kWordBits ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << universe) - 1;
        s.words_[0] = mask & cap;
    }
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= universe_)
        throw DomainError("vertex " + std::to_string(v) + " outside universe [0, " +
                          std::to_string(universe_) + ")");
}

int VertexSet::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::all_or_none_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    bool any = false, all = true;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t inter = words_[i] & other.words_[i];
        if (inter) any = true;
        if (inter != other.words_[i]) all = false;
    }
    return all || !any;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    out -= *this;
    return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return -1;
}

int VertexSet::next(int v) const {
    if (v < 0) return -1;
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start / kWordBits);
    std::uint64_t w = words_[wi] >> (start % kWordBits);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi]) return static_cast<int>(wi) * kWordBits + std::countr_zero(words_[wi]);
    return -1;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > kWordBits) throw DomainError("to_mask requires universe <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool sep = false;
    for (int v : *this) {
        if (sep) out += ' ';
        out += std::to_string(v);
        sep = true;
    }
    out += '}';
    return out;
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    int va = a.first(), vb = b.first();
    while (va >= 0 && vb >= 0) {
        if (va != vb) return va < vb;
        va = a.next(va);
        vb = b.next(vb);
    }
    return false;
}

}  // namespace primex
