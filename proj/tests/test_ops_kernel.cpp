#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sqdup/ops_kernel.hpp"

using namespace sqdup;

namespace {

std::vector<Word> words(std::initializer_list<const char*> xs) {
    std::vector<Word> out;
    for (auto x : xs) out.push_back(word_from(x));
    std::sort(out.begin(), out.end());
    return out;
}

naive::Op as_naive(Family f) { return static_cast<naive::Op>(static_cast<int>(f)); }

const Family kFamilies[] = {Family::PD, Family::SD, Family::PSD, Family::PSC, Family::SSC, Family::PSSC};

}  // namespace

TEST_CASE("single steps") {
    CHECK(step(parse_op("psd"), word_from("ab")) == words({"aab", "abb", "abab"}));
    CHECK(step(parse_op("sd", 1), word_from("ab")) == words({"abb"}));
    CHECK(step(parse_op("ssc"), word_from("aba")) == words({"abaa", "abab", "ababa", "abaaba"}));
    // y empty reduces square completion to duplication
    CHECK(step(parse_op("pd"), word_from("abc")) == words({"aabc", "ababc", "abcabc"}));
    auto sd = step(parse_op("sd"), word_from("abc"));
    auto ssc = step(parse_op("ssc"), word_from("abc"));
    CHECK(std::includes(ssc.begin(), ssc.end(), sd.begin(), sd.end()));
    CHECK_THROWS(parse_op("ssc", 2));
    CHECK_THROWS(parse_op("xd"));
}

TEST_CASE("steps agree with independent enumeration") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& x : naive::all_words(n, n <= 5 ? 3 : 2))
            for (Family f : kFamilies)
                for (int k : {0, 1, 2, 3}) {
                    if (k && (f == Family::PSC || f == Family::SSC || f == Family::PSSC)) continue;
                    OpKind op{f, k ? std::optional<int>(k) : std::nullopt};
                    auto got = step(op, x);
                    auto want = naive::step(as_naive(f), k, x);
                    REQUIRE(got == std::vector<Word>(want.begin(), want.end()));
                    for (auto& y : got) {
                        REQUIRE(len(y) > len(x));
                        if (op.prefix_side() && !op.suffix_side()) REQUIRE(std::equal(x.begin(), x.end(), y.end() - len(x)));
                        if (op.suffix_side() && !op.prefix_side()) REQUIRE(std::equal(x.begin(), x.end(), y.begin()));
                    }
                }
}

TEST_CASE("bounded closures") {
    CHECK(closure_upto(parse_op("sd"), word_from("ab"), 4) == words({"ab", "abb", "abab", "abbb"}));
    for (Family f : kFamilies) CHECK(closure_upto(OpKind{f, {}}, word_from("aba"), 3) == words({"aba"}));
    CHECK_THROWS_AS(closure_upto(parse_op("psd"), word_from("ab"), 30, 1000), BudgetExceeded);
}

TEST_CASE("closure of ab under prefix-suffix duplication, three blocks") {
    auto cl = closure_upto(parse_op("psd"), word_from("ab"), 12);
    std::set<Word> inside, want;
    for (auto& y : cl) {
        // shape a b^m a b^n a b^p, m,n,p >= 1
        std::vector<int> blocks;
        bool ok = !y.empty() && y[0] == 'a';
        for (std::size_t t = 0; ok && t < y.size();) {
            if (y[t] != 'a') { ok = false; break; }
            std::size_t u = t + 1;
            while (u < y.size() && y[u] == 'b') ++u;
            if (u == t + 1) ok = false;
            blocks.push_back(static_cast<int>(u - t - 1));
            t = u;
        }
        if (ok && blocks.size() == 3) inside.insert(y);
    }
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n)
            for (int p = 1; p <= 9; ++p)
                if (3 + m + n + p <= 12 && m <= std::min(n, p) && n <= m + p) {
                    Word y;
                    for (int b : {m, n, p}) {
                        y.push_back('a');
                        y.insert(y.end(), b, 'b');
                    }
                    want.insert(y);
                }
    CHECK(inside == want);
}

TEST_CASE("closure containment chain") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& x : naive::all_words(n))
            for (int k = 1; k <= n; ++k) {
                int L = 10;
                auto a = closure_upto(parse_op("psd", k), x, L);
                auto b = closure_upto(parse_op("psd"), x, L);
                auto c = closure_upto(parse_op("pssc"), x, L);
                REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
                REQUIRE(std::includes(c.begin(), c.end(), b.begin(), b.end()));
                auto nb = naive::closure(naive::Op::PSD, k, x, L);
                REQUIRE(a == std::vector<Word>(nb.begin(), nb.end()));
            }
}

TEST_CASE("suffix completion is hereditary along prefixes") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& x : naive::all_words(n)) {
            auto cl = closure_upto(parse_op("ssc"), x, 12);
            std::set<Word> in_x(cl.begin(), cl.end());
            for (const auto& z : cl)
                for (int m = len(x); m <= len(z); ++m) {
                    Word y(z.begin(), z.begin() + m);
                    auto cy = naive::closure(naive::Op::SSC, 0, y, len(z));
                    REQUIRE(cy.count(z));
                }
        }
}

TEST_CASE("derivation replay") {
    Derivation d{word_from("ab"), {{Side::suffix, 2}, {Side::suffix, 1}}};
    auto r = verify_derivation(parse_op("sd"), d);
    CHECK(r.ok);
    CHECK(r.word == word_from("ababb"));
    CHECK(verify_derivation(parse_op("sd"), Derivation{word_from("ab"), {}}).word == word_from("ab"));
    auto bad = verify_derivation(parse_op("sd", 1), Derivation{word_from("ab"), {{Side::suffix, 1}, {Side::suffix, 2}}});
    CHECK(!bad.ok);
    CHECK(bad.failed_at == 1);
    // a|b a b: suffix y x y with y = a, x = b
    auto c = verify_derivation(parse_op("ssc"), Derivation{word_from("aba"), {{Side::suffix, 1, 1}}});
    CHECK(c.ok);
    CHECK(c.word == word_from("abab"));
    CHECK(!verify_derivation(parse_op("sd"), Derivation{word_from("aba"), {{Side::suffix, 1, 1}}}).ok);
}

TEST_CASE("factor-graph distance and ancestors agree with word-level search") {
    CHECK(oracle_distance(parse_op("sd"), word_from("ab"), word_from("abab")) == 1);
    CHECK(oracle_distance(parse_op("pssc"), word_from("aba"), word_from("abacabac")) == kInf);
    Word w = word_from("abaabaa");
    auto anc = oracle_ancestors(parse_op("psd"), w);
    CHECK(std::count(anc.begin(), anc.end(), Factor{1, 3}) == 1);
    CHECK(std::count(anc.begin(), anc.end(), Factor{1, 5}) == 0);
    CHECK(oracle_ancestors(parse_op("psd"), word_from("aaaa")).size() == 10);

    for (int n = 1; n <= 8; ++n)
        for (const auto& w2 : naive::all_words(n))
            for (Family f : kFamilies)
                for (int k : {0, 1, 2}) {
                    if (k && (f == Family::PSC || f == Family::SSC || f == Family::PSSC)) continue;
                    OpKind op{f, k ? std::optional<int>(k) : std::nullopt};
                    auto a = oracle_ancestors(op, w2);
                    REQUIRE(std::count(a.begin(), a.end(), Factor{1, n}) == 1);
                    std::set<Factor> as(a.begin(), a.end());
                    auto placed = oracle_ancestors(op, w2, AncestorScope::in_place);
                    for (auto f : placed) REQUIRE(oracle_distance_from(op, w2, f.i, f.j) != kInf);
                    REQUIRE(placed.size() <= a.size());
                    for (int i = 1; i <= n; ++i)
                        for (int j = i; j <= n; ++j) {
                            Word x = sub(w2, i, j);
                            int want = naive::distance(as_naive(f), k, x, w2);
                            int got = oracle_distance(op, x, w2);
                            REQUIRE(got == (want < 0 ? kInf : want));
                            REQUIRE(as.count({i, j}) == (want >= 0 ? 1u : 0u));
                            if (got != kInf) REQUIRE(got <= n - (j - i + 1));
                        }
                }
}
