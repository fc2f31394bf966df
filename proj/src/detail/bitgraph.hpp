#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace strongmatch::detail {

// Fixed-size bit row; width chosen at BitGraph construction.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
    void clear(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ULL; }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Lowest set bit; -1 if empty.
    int lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    void and_with(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    void and_not_with(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    bool intersects(const BitRow& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int count_and(const BitRow& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    int bits() const { return nbits_; }

private:
    std::vector<std::uint64_t> words_;
    int nbits_ = 0;
};

struct BitGraph {
    explicit BitGraph(int n) : n(n), rows(static_cast<std::size_t>(n), BitRow(n)) {}

    void add_edge(int a, int b) {
        rows[static_cast<std::size_t>(a)].set(b);
        rows[static_cast<std::size_t>(b)].set(a);
    }

    const BitRow& adj(int v) const { return rows[static_cast<std::size_t>(v)]; }

    int n;
    std::vector<BitRow> rows;
};

struct MisResult {
    int size = 0;
    double weight = 0.0;
    std::vector<int> members; // ascending
};

// Maximum independent set of bg; among maximum sets minimizes total weight
// when `weights` is non-null (all weights >= 0); remaining ties resolve to
// the lexicographically smallest ascending member sequence. Throws
// errc::budget_exceeded after max_nodes search nodes.
MisResult max_independent_set(const BitGraph& bg, const double* weights, std::uint64_t max_nodes);

} // namespace strongmatch::detail
