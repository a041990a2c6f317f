#include "sqdup/interval_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sqdup {

std::vector<int> cover_extremum(const std::vector<WeightedInterval>& intervals, int n, Extremum mode) {
    const int sentinel = mode == Extremum::max ? 0 : n + 1;
    std::vector<int> out(n + 1, sentinel);
    // counting sort by weight
    int gmax = 0;
    for (const auto& iv : intervals) {
        if (iv.a < 1 || iv.b > n + 1 || iv.a > iv.b)
            throw std::out_of_range("interval outside [1, n+1)");
        if (iv.g < 0) throw std::out_of_range("negative weight");
        gmax = std::max(gmax, iv.g);
    }
    std::vector<int> start(gmax + 2, 0);
    for (const auto& iv : intervals) ++start[iv.g + 1];
    for (int g = 0; g <= gmax; ++g) start[g + 1] += start[g];
    // copy in weight order so the sweep reads intervals sequentially
    std::vector<WeightedInterval> order(intervals.size());
    for (const auto& iv : intervals) order[start[iv.g]++] = iv;
    if (mode == Extremum::max) std::reverse(order.begin(), order.end());

    // each block's max is the next unassigned position; n+1 stays unassigned
    IntervalUnionFind uf(n + 1);
    for (const auto& iv : order) {
        int p = uf.find(iv.a).max;
        while (p < iv.b) {
            out[p] = iv.g;
            uf.union_with_right(p);
            p = uf.find(p).max;
        }
    }
    return out;
}

IntervalUnionFind::IntervalUnionFind(int n) : n_(n), node_(n + 2) {
    for (int e = 0; e <= n + 1; ++e) node_[e] = {e, 1, e, e};
}

int IntervalUnionFind::root(int e) {
    int r = e;
    while (node_[r].parent != r) r = node_[r].parent;
    while (node_[e].parent != r) {
        int nx = node_[e].parent;
        node_[e].parent = r;
        e = nx;
    }
    return r;
}

IntervalUnionFind::Block IntervalUnionFind::find(int e) {
    if (e < 1 || e > n_ + 1) throw std::out_of_range("element outside universe");
    const Node& r = node_[root(e)];
    return {r.lo, r.hi};
}

void IntervalUnionFind::link(int x, int y) {
    if (node_[x].size < node_[y].size) std::swap(x, y);
    Node& a = node_[x];
    const Node& b = node_[y];
    node_[y].parent = x;
    a.size += b.size;
    a.lo = std::min(a.lo, b.lo);
    a.hi = std::max(a.hi, b.hi);
}

void IntervalUnionFind::union_with_right(int e) {
    auto b = find(e);
    if (b.max + 1 > n_ + 1) throw std::out_of_range("no block to the right");
    link(root(e), root(b.max + 1));
}

void IntervalUnionFind::union_with_left(int e) {
    auto b = find(e);
    if (b.min - 1 < 1) throw std::out_of_range("no block to the left");
    link(root(e), root(b.min - 1));
}

void IntervalUnionFind::unite_adjacent(int e, int f) {
    auto be = find(e), bf = find(f);
    if (be.max + 1 == bf.min || bf.max + 1 == be.min) link(root(e), root(f));
    else if (be.min != bf.min) throw std::logic_error("blocks are not adjacent");
}

SegTree::SegTree(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("empty segment tree");
    sum_.assign(4 * n, 0);
    min_.assign(4 * n, 0);
    lazy_.assign(4 * n, 0);
    width_.assign(4 * n, 0);
    build(1, 1, n, nullptr);
}

SegTree::SegTree(const std::vector<std::int64_t>& values) : n_(static_cast<int>(values.size())) {
    if (n_ < 1) throw std::invalid_argument("empty segment tree");
    sum_.assign(4 * n_, 0);
    min_.assign(4 * n_, 0);
    lazy_.assign(4 * n_, 0);
    width_.assign(4 * n_, 0);
    build(1, 1, n_, &values);
}

void SegTree::build(int node, int l, int r, const std::vector<std::int64_t>* values) {
    width_[node] = r - l + 1;
    if (l == r) {
        sum_[node] = min_[node] = values ? (*values)[l - 1] : 0;
        return;
    }
    int m = (l + r) / 2;
    build(2 * node, l, m, values);
    build(2 * node + 1, m + 1, r, values);
    sum_[node] = sum_[2 * node] + sum_[2 * node + 1];
    min_[node] = std::min(min_[2 * node], min_[2 * node + 1]);
}

void SegTree::apply(int node, std::int64_t v) const {
    sum_[node] += v * width_[node];
    min_[node] += v;
    lazy_[node] += v;
}

void SegTree::push(int node) const {
    if (lazy_[node]) {
        apply(2 * node, lazy_[node]);
        apply(2 * node + 1, lazy_[node]);
        lazy_[node] = 0;
    }
}

void SegTree::check(int i, int j) const {
    if (i < 1 || j > n_ || i > j) throw std::out_of_range("range out of bounds");
}

void SegTree::add(int i, int j, std::int64_t v) {
    check(i, j);
    add(1, 1, n_, i, j, v);
}

void SegTree::add(int node, int l, int r, int i, int j, std::int64_t v) {
    if (j < l || r < i) return;
    if (i <= l && r <= j) {
        apply(node, v);
        return;
    }
    push(node);
    int m = (l + r) / 2;
    add(2 * node, l, m, i, j, v);
    add(2 * node + 1, m + 1, r, i, j, v);
    sum_[node] = sum_[2 * node] + sum_[2 * node + 1];
    min_[node] = std::min(min_[2 * node], min_[2 * node + 1]);
}

std::int64_t SegTree::sum(int i, int j) const {
    check(i, j);
    return sum(1, 1, n_, i, j);
}

std::int64_t SegTree::sum(int node, int l, int r, int i, int j) const {
    if (j < l || r < i) return 0;
    if (i <= l && r <= j) return sum_[node];
    push(node);
    int m = (l + r) / 2;
    return sum(2 * node, l, m, i, j) + sum(2 * node + 1, m + 1, r, i, j);
}

std::int64_t SegTree::min(int i, int j) const {
    check(i, j);
    return min(1, 1, n_, i, j);
}

std::int64_t SegTree::min(int node, int l, int r, int i, int j) const {
    if (j < l || r < i) return std::numeric_limits<std::int64_t>::max();
    if (i <= l && r <= j) return min_[node];
    push(node);
    int m = (l + r) / 2;
    return std::min(min(2 * node, l, m, i, j), min(2 * node + 1, m + 1, r, i, j));
}

int SegTree::rightmost_zero(int i, int j) const {
    check(i, j);
    return rightmost_zero(1, 1, n_, i, j);
}

int SegTree::rightmost_zero(int node, int l, int r, int i, int j) const {
    if (j < l || r < i || min_[node] > 0) return 0;
    if (l == r) return l;
    push(node);
    int m = (l + r) / 2;
    int got = rightmost_zero(2 * node + 1, m + 1, r, i, j);
    return got ? got : rightmost_zero(2 * node, l, m, i, j);
}

int SegTree::leftmost_zero(int i, int j) const {
    check(i, j);
    return leftmost_zero(1, 1, n_, i, j);
}

int SegTree::leftmost_zero(int node, int l, int r, int i, int j) const {
    if (j < l || r < i || min_[node] > 0) return 0;
    if (l == r) return l;
    push(node);
    int m = (l + r) / 2;
    int got = leftmost_zero(2 * node, l, m, i, j);
    return got ? got : leftmost_zero(2 * node + 1, m + 1, r, i, j);
}

}  // namespace sqdup
