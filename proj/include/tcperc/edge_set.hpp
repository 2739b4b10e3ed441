#ifndef TCPERC_EDGE_SET_HPP
#define TCPERC_EDGE_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tcperc {

// Dense directed edge set over vertices 1..n, stored as n rows of
// ceil(n/64) words; row i holds the out-neighborhood of i. Vertices are
// 1-based throughout the public API to match the linear-graph families
// (internal storage is 0-based). Self-loops are structurally excluded:
// insert(i,i) is a programming error.
class EdgeSet {
public:
    EdgeSet() : n_(0), wpr_(0) {}

    explicit EdgeSet(int n) : n_(n), wpr_((n + 63) / 64), bits_(static_cast<size_t>(n) * wpr_, 0) {
        assert(n >= 0);
    }

    int n() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool contains(int i, int j) const {
        assert(valid(i) && valid(j));
        if (i == j) return false;
        return (row(i)[(j - 1) >> 6] >> ((j - 1) & 63)) & 1u;
    }

    void insert(int i, int j) {
        assert(valid(i) && valid(j) && i != j);
        mutable_row(i)[(j - 1) >> 6] |= uint64_t{1} << ((j - 1) & 63);
    }

    void erase(int i, int j) {
        assert(valid(i) && valid(j));
        mutable_row(i)[(j - 1) >> 6] &= ~(uint64_t{1} << ((j - 1) & 63));
    }

    // Raw word access for the propagation kernels; row index 1-based.
    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i - 1) * wpr_; }
    uint64_t* mutable_row(int i) { return bits_.data() + static_cast<size_t>(i - 1) * wpr_; }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_) if (w) return false;
        return true;
    }

    bool operator==(const EdgeSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const EdgeSet& o) const { return !(*this == o); }

    bool is_subset_of(const EdgeSet& o) const {
        assert(n_ == o.n_);
        for (size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    bool intersects(const EdgeSet& o) const {
        assert(n_ == o.n_);
        for (size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & o.bits_[w]) return true;
        return false;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        assert(n_ == o.n_);
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
        return *this;
    }

    EdgeSet& operator&=(const EdgeSet& o) {
        assert(n_ == o.n_);
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
        return *this;
    }

    // Set difference: removes o's edges from *this.
    EdgeSet& operator-=(const EdgeSet& o) {
        assert(n_ == o.n_);
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~o.bits_[w];
        return *this;
    }

    EdgeSet transposed() const {
        EdgeSet t(n_);
        for_each_edge([&](int i, int j) { t.insert(j, i); });
        return t;
    }

    bool is_symmetric() const {
        bool sym = true;
        for_each_edge([&](int i, int j) { sym = sym && contains(j, i); });
        return sym;
    }

    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (int i = 1; i <= n_; ++i) {
            const uint64_t* r = row(i);
            for (int w = 0; w < wpr_; ++w) {
                uint64_t word = r[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    fn(i, (w << 6) + b + 1);
                }
            }
        }
    }

    // Out-neighbors of i, 1-based, ascending.
    template <typename Fn>
    void for_each_in_row(int i, Fn&& fn) const {
        const uint64_t* r = row(i);
        for (int w = 0; w < wpr_; ++w) {
            uint64_t word = r[w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                fn((w << 6) + b + 1);
            }
        }
    }

    int out_degree(int i) const {
        int d = 0;
        const uint64_t* r = row(i);
        for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
        return d;
    }

private:
    bool valid(int v) const { return v >= 1 && v <= n_; }

    int n_;
    int wpr_;
    std::vector<uint64_t> bits_;
};

inline EdgeSet set_union(EdgeSet a, const EdgeSet& b) { a |= b; return a; }
inline EdgeSet set_intersection(EdgeSet a, const EdgeSet& b) { a &= b; return a; }
inline EdgeSet set_difference(EdgeSet a, const EdgeSet& b) { a -= b; return a; }

namespace bitops {

inline bool rows_intersect(const uint64_t* a, const uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

// True when row has a set bit at a 1-based position strictly above v.
inline bool any_above(const uint64_t* row, int words, int v) {
    int w0 = v >> 6; // word containing bit index v (0-based bit v = vertex v+1)
    if (w0 < words) {
        uint64_t mask = ~uint64_t{0} << (v & 63);
        if (row[w0] & mask) return true;
        for (int w = w0 + 1; w < words; ++w)
            if (row[w]) return true;
    }
    return false;
}

// True when row has a set bit at a 1-based position strictly below v.
inline bool any_below(const uint64_t* row, int words, int v) {
    int bits = v - 1; // number of admissible bit positions 0..v-2
    if (bits <= 0) return false;
    int full = (bits - 1) >> 6;
    for (int w = 0; w < full; ++w)
        if (row[w]) return true;
    uint64_t mask = (bits & 63) == 0 ? ~uint64_t{0} : ((uint64_t{1} << (bits & 63)) - 1);
    (void)words;
    return (row[full] & mask) != 0;
}

// True when rows a and b share a set bit at a 1-based position in (lo, hi).
inline bool intersect_between(const uint64_t* a, const uint64_t* b, int words, int lo, int hi) {
    for (int w = 0; w < words; ++w) {
        uint64_t x = a[w] & b[w];
        while (x) {
            int bit = std::countr_zero(x);
            x &= x - 1;
            int v = (w << 6) + bit + 1;
            if (v > lo && v < hi) return true;
            if (v >= hi) return false;
        }
    }
    return false;
}

} // namespace bitops

} // namespace tcperc

#endif // TCPERC_EDGE_SET_HPP
