#pragma once
// Adjacent-merge union-find, weighted interval covers, lazy segment tree.

#include <cstdint>
#include <vector>

namespace sqdup {

// [a, b) with weight g, 1-based
struct WeightedInterval {
    int a;
    int b;
    int g;
};

enum class Extremum { max, min };

// Per-position max (sentinel 0) or min (sentinel n+1) weight of covering intervals.
// Result is indexed 1..n; slot 0 holds the sentinel.
std::vector<int> cover_extremum(const std::vector<WeightedInterval>& intervals, int n, Extremum mode);

// Partition of [1, n+1) into contiguous blocks; only neighbours merge.
class IntervalUnionFind {
public:
    struct Block {
        int min;
        int max;
    };
    explicit IntervalUnionFind(int n);
    int universe() const { return n_; }
    Block find(int e);
    // merge the block of e with the block directly left of it
    void union_with_left(int e);
    // merge the block of e with the block directly right of it
    void union_with_right(int e);
    // e and e+1 in different blocks required; throws otherwise
    void unite_adjacent(int e, int f);

private:
    int n_;
    struct Node {
        int parent, size, lo, hi;
    };
    std::vector<Node> node_;
    int root(int e);
    void link(int x, int y);
};

// Range add, range sum, range min with rightmost position; 1-based.
class SegTree {
public:
    explicit SegTree(int n);
    explicit SegTree(const std::vector<std::int64_t>& values);  // values[0] is position 1
    int size() const { return n_; }
    void add(int i, int j, std::int64_t v);
    std::int64_t sum(int i, int j) const;
    std::int64_t min(int i, int j) const;
    // rightmost position in [i, j] holding 0 assuming all values >= 0; 0 if none
    int rightmost_zero(int i, int j) const;
    // leftmost position in [i, j] holding 0 assuming all values >= 0; 0 if none
    int leftmost_zero(int i, int j) const;

private:
    int n_;
    mutable std::vector<std::int64_t> sum_, min_, lazy_;
    std::vector<int> width_;
    void build(int node, int l, int r, const std::vector<std::int64_t>* values);
    void apply(int node, std::int64_t v) const;
    void push(int node) const;
    void add(int node, int l, int r, int i, int j, std::int64_t v);
    std::int64_t sum(int node, int l, int r, int i, int j) const;
    std::int64_t min(int node, int l, int r, int i, int j) const;
    int rightmost_zero(int node, int l, int r, int i, int j) const;
    int leftmost_zero(int node, int l, int r, int i, int j) const;
    void check(int i, int j) const;
};

}  // namespace sqdup
