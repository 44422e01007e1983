#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace domcover {

/// Fixed-capacity set of vertex indices backed by 64-bit words.
///
/// Capacity is set at construction and never changes; all binary
/// operations require both operands to have the same capacity.
/// Bits above the capacity are always zero.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : n_(capacity), words_((capacity + 63) / 64, 0) {
        assert(capacity >= 0);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> vs) {
        VertexSet s(capacity);
        for (int v : vs) s.set(v);
        return s;
    }

    template <typename Range>
    static VertexSet from_range(int capacity, const Range& vs) {
        VertexSet s(capacity);
        for (int v : vs) s.set(v);
        return s;
    }

    int capacity() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// this := this \ o
    VertexSet& subtract(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    /// this := a & b, no allocation when capacities already match.
    void assign_and(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        resize_like(a);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] & b.words_[i];
    }

    void assign_or(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        resize_like(a);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] | b.words_[i];
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    /// Set difference as a value.
    friend VertexSet difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Superset test: does this contain every element of o?
    bool contains(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    /// First set bit at index >= from, or -1.
    int find_next(int from) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return int(wi * 64) + std::countr_zero(words_[wi]);
        return -1;
    }

    int find_first() const { return find_next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = find_first(); v != -1; v = find_next(v + 1)) out.push_back(v);
        return out;
    }

    /// Low word; only meaningful when capacity <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const VertexSet&) const = default;

    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = s->find_next(v + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, find_first()}; }
    iterator end() const { return {this, -1}; }

private:
    void resize_like(const VertexSet& a) {
        if (n_ != a.n_) {
            n_ = a.n_;
            words_.resize(a.words_.size());
        }
    }

    void mask_tail() {
        if (n_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domcover
