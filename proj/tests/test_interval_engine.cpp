#include <chrono>
#include <random>

#include "doctest.h"
#include "sqdup/interval_engine.hpp"

using namespace sqdup;

TEST_CASE("cover extremum small cases") {
    CHECK(cover_extremum({}, 3, Extremum::max) == std::vector<int>{0, 0, 0, 0});
    CHECK(cover_extremum({}, 3, Extremum::min) == std::vector<int>{4, 4, 4, 4});
    CHECK(cover_extremum({{1, 3, 5}}, 4, Extremum::max) == std::vector<int>{0, 5, 5, 0, 0});
    CHECK(cover_extremum({{1, 4, 2}, {2, 5, 7}}, 4, Extremum::max) == std::vector<int>{0, 2, 7, 7, 7});
    CHECK(cover_extremum({{1, 4, 2}, {2, 5, 7}}, 4, Extremum::min) == std::vector<int>{5, 2, 2, 2, 7});
    CHECK_THROWS(cover_extremum({{0, 2, 1}}, 4, Extremum::max));
    CHECK_THROWS(cover_extremum({{1, 6, 1}}, 4, Extremum::max));
}

TEST_CASE("cover extremum against per-position scan") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 500; ++rep) {
        int n = 1 + static_cast<int>(rng() % 200);
        int k = static_cast<int>(rng() % 401);
        std::vector<WeightedInterval> iv;
        for (int t = 0; t < k; ++t) {
            int a = 1 + static_cast<int>(rng() % n);
            int b = a + 1 + static_cast<int>(rng() % (n + 1 - a));
            iv.push_back({a, b, 1 + static_cast<int>(rng() % n)});
        }
        auto hi = cover_extremum(iv, n, Extremum::max);
        auto lo = cover_extremum(iv, n, Extremum::min);
        for (int x = 1; x <= n; ++x) {
            int mx = 0, mn = n + 1;
            for (auto& v : iv)
                if (v.a <= x && x < v.b) mx = std::max(mx, v.g), mn = std::min(mn, v.g);
            REQUIRE(hi[x] == mx);
            REQUIRE(lo[x] == mn);
        }
    }
}

TEST_CASE("interval union-find") {
    IntervalUnionFind uf(6);
    auto b = uf.find(3);
    CHECK(b.min == 3);
    CHECK(b.max == 3);
    uf.union_with_right(3);
    CHECK(uf.find(4).min == 3);
    CHECK(uf.find(4).max == 4);
    uf.union_with_left(3);
    CHECK(uf.find(2).max == 4);
    CHECK_THROWS(uf.unite_adjacent(1, 6));
    IntervalUnionFind all(5);
    for (int e = 1; e <= 5; ++e) all.union_with_right(e);
    CHECK(all.find(1).max == 6);
    CHECK(all.find(1).min == 1);
    CHECK_THROWS(all.union_with_right(1));
}

TEST_CASE("interval union-find scales near linearly") {
    // Random finds over 10^6 elements leave the cache, so each timing is divided
    // by a plain array walk with the same access pattern.
    auto run = [](int n) {
        std::mt19937_64 rng(9);
        std::vector<int> picks(2 * static_cast<std::size_t>(n));
        for (auto& x : picks) x = 1 + static_cast<int>(rng() % n);
        auto t0 = std::chrono::steady_clock::now();
        IntervalUnionFind uf(n);
        long long sink = 0;
        for (int e = 0; e < n; ++e) {
            int x = picks[2 * e];
            if (uf.find(x).max <= n) uf.union_with_right(x);
            sink += uf.find(picks[2 * e + 1]).max;
        }
        auto t1 = std::chrono::steady_clock::now();
        std::vector<int> plain(n + 2);
        for (int e = 0; e < n; ++e) {
            plain[picks[2 * e]] += e;
            sink += plain[picks[2 * e + 1]];
        }
        auto t2 = std::chrono::steady_clock::now();
        CHECK(sink != 0);
        double uf_s = std::chrono::duration<double>(t1 - t0).count();
        double base = std::chrono::duration<double>(t2 - t1).count();
        return uf_s / std::max(base, 1e-9);
    };
    run(100000);
    double a = run(100000), b = run(1000000);
    MESSAGE("union-find cost per array access, 1e5: " << a << ", 1e6: " << b);
    CHECK(b < 2.5 * a);
}

TEST_CASE("segment tree") {
    SegTree t(std::vector<std::int64_t>{1, 4, 9, -2, 7, 6});
    t.add(1, 4, 3);
    CHECK(t.sum(2, 5) == 27);
    SegTree z(5);
    CHECK(z.sum(3, 3) == 0);
    SegTree q(std::vector<std::int64_t>{0, 0, 1, 0});
    CHECK(q.rightmost_zero(1, 4) == 4);
    CHECK(q.rightmost_zero(3, 3) == 0);
    CHECK(q.leftmost_zero(3, 4) == 4);
    CHECK_THROWS(q.sum(0, 2));
    CHECK_THROWS(q.add(2, 5, 1));

    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10000; ++rep) {
        int n = 1 + static_cast<int>(rng() % 30);
        std::vector<std::int64_t> a(n, 0);
        SegTree s(n);
        for (int op = 0; op < 20; ++op) {
            int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
            if (i > j) std::swap(i, j);
            switch (rng() % 4) {
                case 0: {
                    int v = static_cast<int>(rng() % 3);
                    s.add(i, j, v);
                    for (int x = i; x <= j; ++x) a[x - 1] += v;
                    break;
                }
                case 1: {
                    std::int64_t want = 0;
                    for (int x = i; x <= j; ++x) want += a[x - 1];
                    REQUIRE(s.sum(i, j) == want);
                    break;
                }
                case 2: {
                    int want = 0;
                    for (int x = i; x <= j; ++x)
                        if (a[x - 1] == 0) want = x;
                    REQUIRE(s.rightmost_zero(i, j) == want);
                    break;
                }
                default: {
                    int want = 0;
                    for (int x = j; x >= i; --x)
                        if (a[x - 1] == 0) want = x;
                    REQUIRE(s.leftmost_zero(i, j) == want);
                }
            }
        }
    }
}
