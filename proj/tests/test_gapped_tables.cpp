#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sqdup/gapped_tables.hpp"
#include "sqdup/ops_kernel.hpp"

using namespace sqdup;

namespace {

Word W(const char* s) { return word_from(s); }

// common prefix of w[i..n] and w[1..j]^R
int rev_lcp(const Word& w, int j, int i) {
    int l = 0, n = len(w);
    while (i + l <= n && j - l >= 1 && w[i + l - 1] == w[j - l - 1]) ++l;
    return l;
}

// Direct tables: for every earlier copy, the longest arm allowed by the gap rule.
// gap_ok(i, gap) says whether a gap length is admissible at i.
template <class GapOk>
std::vector<int> brute_rev(const Word& w, GapOk gap_ok) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)  // u^R ends at j, gap i-1-j
            if (gap_ok(i, i - 1 - j, 1 << 30)) t[i] = std::max(t[i], rev_lcp(w, j, i));
    return t;
}
template <class GapOk>
std::vector<int> brute_rev_long(const Word& w, GapOk gap_ok) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            int l = rev_lcp(w, j, i);
            if (l >= 1 && gap_ok(i, i - 1 - j, l)) t[i] = std::max(t[i], l);
        }
    return t;
}
template <class GapOk>
std::vector<int> brute_rep(const Word& w, GapOk gap_ok) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s < i; ++s) {
            int lcp = naive::lcp(w, s, i);
            for (int l = std::min(lcp, i - s); l >= 1; --l)
                if (gap_ok(i, i - s - l, l)) {  // u = w[s..s+l-1], gap i-s-l
                    t[i] = std::max(t[i], l);
                    break;
                }
        }
    return t;
}

bool witness_rev(const Word& w, const GapTable& t, int i, int lo_gap, int hi_gap) {
    int l = t.arm[i], s = t.source[i];
    if (!l) return s == 0;
    int gap = i - 1 - (s + l - 1);
    if (gap < lo_gap || gap > hi_gap || s < 1) return false;
    for (int x = 0; x < l; ++x)
        if (w[i + x - 1] != w[s + l - 1 - x - 1]) return false;
    return true;
}
bool witness_rep(const Word& w, const GapTable& t, int i, int lo_gap, int hi_gap) {
    int l = t.arm[i], s = t.source[i];
    if (!l) return s == 0;
    int gap = i - s - l;
    if (gap < lo_gap || gap > hi_gap || s < 1) return false;
    for (int x = 0; x < l; ++x)
        if (w[i + x - 1] != w[s + x - 1]) return false;
    return true;
}

std::vector<int> random_gaps(std::mt19937_64& rng, int n) {
    std::vector<int> g(n + 1, 0);
    int mode = rng() % 3;
    for (int i = 1; i <= n; ++i) g[i] = mode == 0 ? static_cast<int>(rng() % (n + 1)) : mode == 1 ? static_cast<int>(rng() % 4) : 1 + static_cast<int>(rng() % std::max(1, i / 2));
    return g;
}

}  // namespace

TEST_CASE("gapped table examples") {
    CHECK(lprf_bounded(W("abba"), 0, 1).arm[3] == 2);
    CHECK(lpf_bounded(W("abab"), 0, 2).arm[3] == 2);
    std::vector<int> zero(5, 0);
    CHECK(lpf_func(W("abab"), zero).arm[3] == 2);
    Word distinct = W("abcdefgh");
    std::vector<int> gz(9, 0);
    for (const auto& t : {lprf_bounded(distinct, 0, 8), lpf_bounded(distinct, 1, 5), lprf_func(distinct, gz), lpf_func(distinct, gz)})
        for (int i = 1; i <= 8; ++i) CHECK(t.arm[i] == 0);
    for (int i = 1; i <= 8; ++i) CHECK(lpal_lrep(distinct, ArmKind::palindrome)[i] == 0);
    CHECK(lpal_lrep(W("aa"), ArmKind::repeat)[2] == 1);
    CHECK_THROWS(lprf_bounded(W("ab"), 1, 1));
    CHECK_THROWS(lpf_bounded(W("ab"), 0, 3));
    CHECK_THROWS(lprf_func(W("ab"), std::vector<int>{0, 0}));
}

TEST_CASE("bounded-gap tables, exhaustive small words") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& w : naive::all_words(n))
            for (int G = 1; G <= n; ++G)
                for (int g = 0; g < G; ++g) {
                    auto ok = [&](int, int gap, int) { return g <= gap && gap < G; };
                    auto a = lprf_bounded(w, g, G);
                    auto b = lpf_bounded(w, g, G);
                    auto ra = brute_rev(w, ok), rb = brute_rep(w, ok);
                    for (int i = 1; i <= n; ++i) {
                        REQUIRE(a.arm[i] == ra[i]);
                        REQUIRE(b.arm[i] == rb[i]);
                        REQUIRE(witness_rev(w, a, i, g, G - 1));
                        REQUIRE(witness_rep(w, b, i, g, G - 1));
                    }
                }
}

TEST_CASE("bounded-gap tables, random words") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + rng() % 119, sigma = 1 + rng() % 4;
        Word w = naive::random_word(rng, n, sigma);
        if (t % 4 == 0)
            for (int x = 0; x < n; ++x) w[x] = (x % (1 + t % 5)) == 0 ? 1 : w[x] % 2;
        int G = 1 + rng() % n, g = rng() % G;
        auto ok = [&](int, int gap, int) { return g <= gap && gap < G; };
        auto a = lprf_bounded(w, g, G);
        auto b = lpf_bounded(w, g, G);
        auto ra = brute_rev(w, ok), rb = brute_rep(w, ok);
        for (int i = 1; i <= n; ++i) {
            REQUIRE(a.arm[i] == ra[i]);
            REQUIRE(b.arm[i] == rb[i]);
            REQUIRE(witness_rev(w, a, i, g, G - 1));
            REQUIRE(witness_rep(w, b, i, g, G - 1));
        }
    }
}

TEST_CASE("wide gaps and periodic text for the repeat table") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        int n = 200 + rng() % 200;
        Word w(n);
        int p = 1 + rng() % 6;
        for (int x = 0; x < n; ++x) w[x] = (x % p == 0) || (rng() % 50 == 0);
        int g = rng() % 5, G = g + 1 + rng() % (n - g);
        auto ok = [&](int, int gap, int) { return g <= gap && gap < G; };
        auto b = lpf_bounded(w, g, G);
        auto rb = brute_rep(w, ok);
        for (int i = 1; i <= n; ++i) REQUIRE(b.arm[i] == rb[i]);
    }
}

TEST_CASE("gap-function tables") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + rng() % 120, sigma = 1 + rng() % 4;
        Word w = naive::random_word(rng, n, sigma);
        auto g = random_gaps(rng, n);
        auto ok = [&](int i, int gap, int) { return gap >= g[i]; };
        auto a = lprf_func(w, g);
        auto b = lpf_func(w, g);
        auto ra = brute_rev(w, ok), rb = brute_rep(w, ok);
        for (int i = 1; i <= n; ++i) {
            REQUIRE(a.arm[i] == ra[i]);
            REQUIRE(b.arm[i] == rb[i]);
            REQUIRE(witness_rev(w, a, i, g[i], n));
            REQUIRE(witness_rep(w, b, i, g[i], n));
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& w : naive::all_words(n))
            for (int c = 0; c <= n; ++c) {
                std::vector<int> g(n + 1, c);
                auto ok = [&](int, int gap, int) { return gap >= c; };
                auto ra = brute_rev(w, ok), rb = brute_rep(w, ok);
                auto a = lprf_func(w, g), b = lpf_func(w, g);
                for (int i = 1; i <= n; ++i) {
                    REQUIRE(a.arm[i] == ra[i]);
                    REQUIRE(b.arm[i] == rb[i]);
                }
            }
}

TEST_CASE("gap regimes agree") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + rng() % 60;
        Word w = naive::random_word(rng, n, 2);
        int c = rng() % n;
        std::vector<int> g(n + 1, c);
        auto a = lprf_func(w, g), b = lprf_bounded(w, c, n);
        auto x = lpf_func(w, g), y = lpf_bounded(w, c, n);
        CHECK(a.arm == b.arm);
        CHECK(x.arm == y.arm);
    }
}

TEST_CASE("leftmost best earlier suffix") {
    auto L = l_array(W("aaaa"));
    CHECK(L[2] == 1);
    CHECK(L[3] == 1);
    CHECK(L[4] == 1);
    auto D = l_array(W("abcd"));
    for (int i = 2; i <= 4; ++i) CHECK(D[i] == 1);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + rng() % 200;
        Word w = naive::random_word(rng, n, 1 + rng() % 3);
        auto got = l_array(w);
        for (int i = 2; i <= n; ++i) {
            int best = -1, arg = 0;
            for (int j = 1; j < i; ++j)
                if (int v = naive::lcp(w, j, i); v > best) best = v, arg = j;
            REQUIRE(got[i] == arg);
        }
    }
}

TEST_CASE("best earlier copy lies on the chain of leftmost maximisers") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + rng() % 120;
        Word w = naive::random_word(rng, n, 1 + rng() % 3);
        auto g = random_gaps(rng, n);
        auto L = l_array(w);
        for (int i = 2; i <= n; ++i) {
            // leftmost start of the longest x at i with another copy ending before i-g(i)
            int best = 0, B = -1;
            for (int s = 1; s < i; ++s) {
                int v = std::min(naive::lcp(w, s, i), i - g[i] - s);
                if (v > best) best = v, B = s;
            }
            if (B < 0) continue;
            bool on_chain = false;
            for (int x = L[i]; x; x = L[x])
                if (x == B) on_chain = true;
            REQUIRE(on_chain);
        }
    }
}

TEST_CASE("maximal long-armed structures") {
    CHECK(maximal_long_armed(W("ab"), ArmKind::palindrome).empty());
    CHECK(maximal_long_armed(W("aa"), ArmKind::repeat).empty());
    CHECK(maximal_long_armed(W("aa"), ArmKind::palindrome) == std::vector<LongArmed>{{1, 1, 2}});
    CHECK_THROWS_AS(maximal_long_armed(Word(50, 1), ArmKind::repeat, 40), BudgetExceeded);
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + rng() % 40;
        Word w = naive::random_word(rng, n, 1 + rng() % 3);
        auto at = [&](int x) { return x >= 1 && x <= n ? static_cast<long long>(w[x - 1]) : -1 - x; };
        for (auto kind : {ArmKind::palindrome, ArmKind::repeat}) {
            std::vector<LongArmed> brute;
            for (int i = 1; i <= n; ++i)
                for (int l = 1; i + l - 1 <= n; ++l)
                    for (int j = i + l; j + l - 1 <= n; ++j) {
                        int gap = j - i - l;
                        if (gap > l) continue;
                        bool eq = true;
                        for (int x = 0; x < l && eq; ++x)
                            eq = kind == ArmKind::palindrome ? w[i + x - 1] == w[j + l - 1 - x - 1] : w[i + x - 1] == w[j + x - 1];
                        if (!eq) continue;
                        bool outer, inner;
                        if (kind == ArmKind::palindrome) {
                            outer = at(i - 1) == at(j + l) && i > 1 && j + l <= n;
                            inner = gap >= 2 && w[i + l - 1] == w[j - 2];
                        } else {
                            if (gap == 0) continue;
                            outer = i > 1 && w[i - 2] == w[j - 2];
                            inner = j + l <= n && w[i + l - 1] == w[j + l - 1];
                        }
                        if (!outer && !inner) brute.push_back({i, l, j});
                    }
            std::sort(brute.begin(), brute.end());
            REQUIRE(maximal_long_armed(w, kind) == brute);
        }
    }
}

TEST_CASE("long-armed tables") {
    std::mt19937_64 rng(15);
    auto ok = [](int, int gap, int l) { return gap <= l; };
    auto check = [&](const Word& w) {
        auto pal = lpal_lrep(w, ArmKind::palindrome);
        auto rep = lpal_lrep(w, ArmKind::repeat);
        auto bp = brute_rev_long(w, ok), br = brute_rep(w, ok);
        for (int i = 1; i <= len(w); ++i) {
            REQUIRE(pal[i] == bp[i]);
            REQUIRE(rep[i] == br[i]);
        }
    };
    for (int t = 0; t < 300; ++t) {
        int n = 1 + rng() % 120;
        check(naive::random_word(rng, n, 1 + rng() % 4));
    }
    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n)) check(w);
}
