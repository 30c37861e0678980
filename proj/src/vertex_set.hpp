#ifndef PRIMEX_VERTEX_SET_HPP
#define PRIMEX_VERTEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace primex {

// Subset of [0, universe) backed by 64-bit words. Every set carries its
// ambient universe so that complements and comparisons are well-defined.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet single(int universe, int v);
    static VertexSet of(int universe, std::initializer_list<int> vs);
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const;
    bool contains(int v) const;

    void insert(int v);
    void erase(int v);

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    // True iff this set contains all of `other` or none of it. Allocation-free;
    // this is the inner test of every module check.
    bool all_or_none_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet complement() const;

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Smallest member, or -1 when empty.
    int first() const;
    // Smallest member strictly greater than v, or -1.
    int next(int v) const;

    std::vector<int> to_vector() const;
    std::uint64_t to_mask() const;  // universe must fit in 64 bits
    std::string to_string() const;  // "{0 2 5}"

    // Orders first by cardinality, then lexicographically on the sorted
    // element lists. This is the canonical order used for tie-breaking.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b);

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };
    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, -1); }

private:
    void check_vertex(int v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace primex

#endif
