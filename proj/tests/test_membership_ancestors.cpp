#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sqdup/membership_ancestors.hpp"

using namespace sqdup;

namespace {

Word W(const char* s) { return word_from(s); }

// all factor contents of w reachable to w, by word-level search
std::set<Word> naive_ancestor_words(naive::Op op, int k, const Word& w) {
    std::set<Word> out;
    int n = len(w);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Word x = sub(w, i, j);
            if (!out.count(x) && naive::member(op, k, x, w)) out.insert(x);
        }
    return out;
}

bool naive_primitive(const Word& x, bool pre, bool suf, int k) {
    int m = len(x);
    for (int p = 1; 2 * p <= m && p <= k; ++p) {
        if (pre && naive::is_square(x, 1, 2 * p)) return false;
        if (suf && naive::is_square(x, m - 2 * p + 1, m)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("flag arrays") {
    auto f = sd_pd_flags(W("abab"), 2);
    CHECK(f.S[4]);
    CHECK(f.P[1]);
    CHECK(f.S[2]);
    auto g = sd_pd_flags(W("aab"), 1);
    CHECK(!g.S[1]);
    CHECK(!g.S[2]);
    CHECK(g.S[3]);
    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n))
            for (int k = 1; k <= std::min(4, n); ++k) {
                auto fl = sd_pd_flags(w, k);
                for (int i = 1; i <= n; ++i) {
                    REQUIRE(static_cast<bool>(fl.S[i]) == naive::member(naive::Op::SD, k, sub(w, 1, i), w));
                    REQUIRE(static_cast<bool>(fl.P[i]) == naive::member(naive::Op::PD, k, sub(w, i, n), w));
                }
            }
}

TEST_CASE("membership examples") {
    CHECK(psd_membership(W("abaabaa"), W("aba")));
    CHECK(!psd_membership(W("abaabaa"), W("abaab")));
    CHECK(pssc_membership(W("abab"), W("ab")));
    CHECK(!pssc_membership(W("abab"), W("c")));
    CHECK(!pssc_membership(W("abacabac"), W("aba")));
    CHECK(psdk_membership(W("abcab"), W("abcab"), 2));
    CHECK(!psdk_membership(W("abab"), W("c"), 2));
    CHECK(psdk_language_membership(W("abaab"), 2, [](const Word& u) { return u == W("abaab"); }));
    CHECK(!psdk_language_membership(W("abaab"), 2, [](const Word&) { return false; }));
}

TEST_CASE("membership agrees with closure search, binary words up to 9") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& w : naive::all_words(n)) {
            auto psd = naive_ancestor_words(naive::Op::PSD, 0, w);
            auto pssc = naive_ancestor_words(naive::Op::PSSC, 0, w);
            std::set<Word> bounded[4];
            for (int k = 1; k <= 3; ++k) bounded[k] = naive_ancestor_words(naive::Op::PSD, k, w);
            std::set<Word> seen;
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Word x = sub(w, i, j);
                    if (!seen.insert(x).second) continue;
                    REQUIRE(psd_membership(w, x) == static_cast<bool>(psd.count(x)));
                    REQUIRE(pssc_membership(w, x) == static_cast<bool>(pssc.count(x)));
                    for (int k = 1; k <= 3; ++k) REQUIRE(psdk_membership(w, x, k) == static_cast<bool>(bounded[k].count(x)));
                }
            CHECK(!psd_membership(w, Word{7}));
        }
}

TEST_CASE("language membership over length-3 factors") {
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 3 + static_cast<int>(rng() % 8);
        Word w = naive::random_word(rng, n, 2);
        int k = 1 + static_cast<int>(rng() % 3);
        bool want = false;
        for (int i = 1; i + 2 <= n && !want; ++i) want = naive::member(naive::Op::PSD, k, sub(w, i, i + 2), w);
        REQUIRE(psdk_language_membership(w, k, [](const Word& u) { return len(u) == 3; }) == want);
    }
}

TEST_CASE("minimal suffix-completion prefix") {
    CHECK(ssc_min_prefix(W("abcacb")) == 6);
    CHECK(ssc_min_prefix(W("abab")) == 2);
    CHECK(ssc_min_prefix(W("aaaa")) == 1);
    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n)) {
            int want = n;
            for (int i = 1; i <= n; ++i)
                if (naive::member(naive::Op::SSC, 0, sub(w, 1, i), w)) {
                    want = i;
                    break;
                }
            REQUIRE(ssc_min_prefix(w) == want);
            REQUIRE(pssc_ancestor_profile(w).j[1] == want);
        }
}

TEST_CASE("completion ancestor profile") {
    auto sf = pssc_ancestor_profile(W("abcacb"));
    CHECK(sf.j[1] == 6);
    CHECK(sf.count == 1);
    for (int i = 2; i <= 6; ++i) CHECK(sf.j[i] == 7);
    CHECK(pssc_ancestor_profile(W("aaaa")).count == 10);

    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n)) {
            auto prof = pssc_ancestor_profile(w);
            auto anc = oracle_ancestors(parse_op("pssc"), w, AncestorScope::in_place);
            std::set<Factor> as(anc.begin(), anc.end());
            std::vector<Factor> from_profile;
            for (int i = 1; i <= n; ++i)
                for (int j = prof.j[i]; j <= n; ++j) from_profile.push_back({i, j});
            REQUIRE(close_by_content(w, from_profile) == oracle_ancestors(parse_op("pssc"), w));
            std::int64_t count = 0;
            for (int i = 1; i <= n; ++i) {
                if (i > 1 && prof.j[i - 1] <= n && prof.j[i] <= n) REQUIRE(prof.j[i - 1] <= prof.j[i]);
                for (int j = i; j <= n; ++j) {
                    REQUIRE(static_cast<bool>(as.count({i, j})) == (prof.j[i] <= j));
                    count += prof.j[i] <= j;
                }
            }
            REQUIRE(prof.count == count);
            REQUIRE(static_cast<std::int64_t>(anc.size()) == count);
            // shortest: least length, leftmost
            Factor best{1, n};
            for (auto f : anc)
                if (f.length() < best.length() || (f.length() == best.length() && f.i < best.i)) best = f;
            REQUIRE(prof.shortest == best);
        }
}

TEST_CASE("bounded ancestors") {
    CHECK(bpsd_ancestors(W("aaaa"), 4, AncestorQuery::count).count == 10);
    for (int n = 1; n <= 10; ++n)
        for (const auto& w : naive::all_words(n))
            for (int k = 1; k <= std::min(n, 4); ++k) {
                auto op = parse_op("psd", k);
                auto anc = oracle_ancestors(op, w, AncestorScope::in_place);
                auto got = bpsd_ancestors(w, k, AncestorQuery::all);
                REQUIRE(got.all == anc);
                REQUIRE(close_by_content(w, got.all) == oracle_ancestors(op, w));
                REQUIRE(got.count == static_cast<std::int64_t>(anc.size()));
                Factor best{1, n};
                std::optional<Factor> lp;
                auto t = compute_square_tables(w);
                for (auto f : anc) {
                    if (f.length() < best.length() || (f.length() == best.length() && f.i < best.i)) best = f;
                    if (naive_primitive(sub(w, f.i, f.j), true, true, k) &&
                        (!lp || f.length() > lp->length() || (f.length() == lp->length() && f.i < lp->i)))
                        lp = f;
                }
                REQUIRE(got.shortest == best);
                REQUIRE(naive_primitive(sub(w, best.i, best.j), true, true, k));
                auto p = bpsd_ancestors(w, k, AncestorQuery::longest_primitive);
                REQUIRE(p.longest_primitive == lp);
            }
}

TEST_CASE("every non-primitive ancestor contains a primitive ancestor") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& w : naive::all_words(n)) {
            auto anc = oracle_ancestors(parse_op("psd"), w);
            for (auto f : anc) {
                if (naive_primitive(sub(w, f.i, f.j), true, true, n)) continue;
                bool has = false;
                for (auto g : anc)
                    if (f.i <= g.i && g.j <= f.j && naive_primitive(sub(w, g.i, g.j), true, true, n)) has = true;
                REQUIRE(has);
            }
        }
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root(W("abcacb"), parse_op("psd")) == Factor{1, 6});
    CHECK(primitive_root(W("abab"), parse_op("sd")) == Factor{1, 2});
    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n))
            for (const char* name : {"pd", "sd", "psd"})
                for (int k : {0, 1, 2, 3}) {
                    auto op = parse_op(name, k ? std::optional<int>(k) : std::nullopt);
                    auto r = primitive_root(w, op);
                    Word x = sub(w, r.i, r.j);
                    REQUIRE(naive::member(static_cast<naive::Op>(static_cast<int>(op.family)), k, x, w));
                    REQUIRE(naive_primitive(x, op.prefix_side(), op.suffix_side(), k ? k : n));
                }
}

TEST_CASE("primitive factor test") {
    auto t = compute_square_tables(W("aa"));
    CHECK(!is_primitive_factor(t, 1, 2, parse_op("pssc")));
    auto u = compute_square_tables(W("abcacb"));
    CHECK(is_primitive_factor(u, 1, 6, parse_op("psd")));
    for (int n = 1; n <= 12; ++n)
        for (const auto& w : naive::all_words(n)) {
            auto tb = compute_square_tables(w);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Word x = sub(w, i, j);
                    for (const char* name : {"pd", "sd", "psd", "psc", "ssc", "pssc"}) {
                        auto op = parse_op(name);
                        REQUIRE(is_primitive_factor(tb, i, j, op) == naive_primitive(x, op.prefix_side(), op.suffix_side(), n));
                    }
                    for (int k = 1; k <= 3; ++k)
                        REQUIRE(is_primitive_factor(tb, i, j, parse_op("psd", k)) == naive_primitive(x, true, true, k));
                }
        }
}

TEST_CASE("family with many suffix-duplication primitive roots") {
    // w_1 = aabbab, w_i = w_{i-1} w_{i-1} bb; R_2 = {w_1}, R_i = R_{i-1} + w_{i-1} R_{i-1}
    std::vector<Word> w{Word{}, W("aabbab")};
    std::vector<std::vector<Word>> R(2);
    for (int i = 2; i <= 5; ++i) {
        w.push_back(concat(concat(w[i - 1], w[i - 1]), W("bb")));
        if (i == 2) {
            R.push_back({w[1]});
        } else {
            auto next = R[i - 1];
            for (auto& r : R[i - 1]) next.push_back(concat(w[i - 1], r));
            R.push_back(next);
        }
    }
    CHECK(primitive_root(w[2], parse_op("sd")) == Factor{1, 6});
    for (int i = 2; i <= 5; ++i) {
        CHECK(len(w[i]) == (1 << (i + 2)) - 2);
        CHECK(static_cast<int>(R[i].size()) == (1 << (i - 2)));
        // suffix-duplication ancestors are prefixes; primitive ones end without a square
        auto f = sd_pd_flags(w[i], len(w[i]));
        auto t = compute_square_tables(w[i]);
        std::set<Word> roots;
        for (int j = 1; j <= len(w[i]); ++j)
            if (f.S[j] && t.left[j] < 1) roots.insert(sub(w[i], 1, j));
        for (auto& r : R[i]) CHECK(roots.count(r));
        MESSAGE("w_" << i << ": " << roots.size() << " suffix-duplication primitive roots");
    }
}

TEST_CASE("common ancestors") {
    CHECK(common_ancestor(W("abab"), W("abab"), parse_op("psd"), CommonQuery::any).has_value());
    CHECK(!common_ancestor(W("abab"), W("cdcd"), parse_op("pssc"), CommonQuery::any).has_value());
    CHECK(!common_ancestor(W("ab"), W("cd"), parse_op("psd", 1), CommonQuery::shortest).has_value());

    const OpKind ops[] = {parse_op("psd"), parse_op("psd", 2), parse_op("pssc")};
    const naive::Op nops[] = {naive::Op::PSD, naive::Op::PSD, naive::Op::PSSC};
    const int ks[] = {0, 2, 0};
    std::vector<Word> pool;
    for (int n = 1; n <= 9; ++n)
        for (auto& w : naive::all_words(n)) pool.push_back(w);
    std::vector<std::set<Word>> anc[3];
    for (int v = 0; v < 3; ++v)
        for (auto& w : pool) anc[v].push_back(naive_ancestor_words(nops[v], ks[v], w));

    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = 0; b < pool.size(); ++b) {
            const Word &x = pool[a], &y = pool[b];
            bool full = len(x) <= 7 && len(y) <= 7;
            for (int v = 0; v < 3; ++v) {
                std::optional<int> lo, hi;
                for (auto& u : anc[v][a])
                    if (anc[v][b].count(u)) {
                        lo = std::min(lo.value_or(len(u)), len(u));
                        hi = std::max(hi.value_or(len(u)), len(u));
                    }
                auto s = common_ancestor(x, y, ops[v], CommonQuery::shortest);
                REQUIRE(s.has_value() == lo.has_value());
                if (lo) {
                    REQUIRE(len(*s) == *lo);
                    REQUIRE(anc[v][a].count(*s));
                    REQUIRE(anc[v][b].count(*s));
                }
                if (!full) continue;
                auto l = common_ancestor(x, y, ops[v], CommonQuery::longest);
                auto any = common_ancestor(x, y, ops[v], CommonQuery::any);
                REQUIRE(any.has_value() == lo.has_value());
                if (!lo) continue;
                REQUIRE(len(*l) == *hi);
                REQUIRE(anc[v][a].count(*l));
                REQUIRE(anc[v][b].count(*l));
                REQUIRE(anc[v][a].count(*any));
                REQUIRE(anc[v][b].count(*any));
            }
        }
}
