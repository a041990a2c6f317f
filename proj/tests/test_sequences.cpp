#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "sqdup/sequences.hpp"

using namespace sqdup;

namespace {

std::string bits(const Word& w) {
    std::string s;
    for (auto c : w) s += char('0' + c);
    return s;
}

// independent closed forms for the generators
int tm_bit(int i) { return __builtin_popcount(static_cast<unsigned>(i)) & 1; }
int pd_bit(int i) { return __builtin_ctz(static_cast<unsigned>(i + 1)) & 1; }
int stewart_bit(int i) {
    // drop trailing ternary 1s; the bit is set iff the last remaining digit is 2
    while (i % 3 == 1) i /= 3;
    return i % 3 == 2;
}
Word fib_by_concat(int n) {
    Word a{0}, b{0, 1};
    while (len(b) < n) {
        Word c = b;
        c.insert(c.end(), a.begin(), a.end());
        a = std::move(b);
        b = std::move(c);
    }
    b.resize(n);
    return b;
}

// smallest end position of a factor with period p and length > p * num / den; n+1 if none
int first_repetition_end(const Word& w, int num, int den) {
    int n = len(w), best = n + 1;
    for (int p = 1; p < n; ++p) {
        int stretch = 0;  // consecutive x with w[x] == w[x+p]
        for (int x = 0; x + p < n; ++x) {
            stretch = w[x] == w[x + p] ? stretch + 1 : 0;
            // factor length stretch + p ending at index x + p
            if (static_cast<long long>(stretch + p) * den > static_cast<long long>(p) * num) {
                best = std::min(best, x + p + 1);
                break;
            }
        }
    }
    return best;
}

naive::Op to_naive(Family f) { return static_cast<naive::Op>(static_cast<int>(f)); }

// BFS over words that stay prefixes of text
std::vector<int> naive_prefix_reach(Family f, int k, const Word& text, int start) {
    std::vector<char> seen(len(text) + 1, 0);
    std::vector<int> todo{start};
    seen[start] = 1;
    while (!todo.empty()) {
        int m = todo.back();
        todo.pop_back();
        for (const Word& y : naive::step(to_naive(f), k, Word(text.begin(), text.begin() + m))) {
            if (len(y) > len(text) || !std::equal(y.begin(), y.end(), text.begin())) continue;
            if (!seen[len(y)]) {
                seen[len(y)] = 1;
                todo.push_back(len(y));
            }
        }
    }
    std::vector<int> out;
    for (int m = start; m <= len(text); ++m)
        if (seen[m]) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("generator prefixes") {
    CHECK(bits(generate(Sequence::thue_morse, 8)) == "01101001");
    CHECK(bits(generate(Sequence::fibonacci, 8)) == "01001010");
    CHECK(bits(generate(Sequence::period_doubling, 8)) == "01000101");
    CHECK(bits(generate(Sequence::stewart, 9)) == "001001011");
    CHECK(parse_sequence("thue_morse") == Sequence::thue_morse);
    CHECK(sequence_name(Sequence::stewart) == "stewart");
    CHECK_THROWS(parse_sequence("hall"));
    CHECK_THROWS(generate(Sequence::fibonacci, 0));
}

TEST_CASE("generators match closed forms and stay prefix-consistent") {
    const int n = 5000;
    Word t = generate(Sequence::thue_morse, n), d = generate(Sequence::period_doubling, n), s = generate(Sequence::stewart, n);
    for (int i = 0; i < n; ++i) {
        CHECK(t[i] == Word::value_type(tm_bit(i)));
        CHECK(d[i] == Word::value_type(pd_bit(i)));
        CHECK(s[i] == Word::value_type(stewart_bit(i)));
    }
    CHECK(generate(Sequence::fibonacci, n) == fib_by_concat(n));
    for (auto seq : {Sequence::fibonacci, Sequence::thue_morse, Sequence::period_doubling, Sequence::stewart}) {
        Word full = generate(seq, 700);
        for (int m : {1, 2, 3, 10, 81, 255, 256, 699}) CHECK(generate(seq, m) == Word(full.begin(), full.begin() + m));
    }
}

TEST_CASE("prefix graph agrees with word-level search") {
    std::mt19937_64 rng(31);
    std::vector<Word> texts;
    for (auto seq : {Sequence::fibonacci, Sequence::thue_morse, Sequence::period_doubling, Sequence::stewart})
        texts.push_back(generate(seq, 14));
    for (int r = 0; r < 40; ++r) texts.push_back(naive::random_word(rng, 12, r % 3 ? 2 : 1));
    for (int r = 0; r < 10; ++r) {
        // periodic texts exercise long completions
        Word base = naive::random_word(rng, 1 + r % 4, 2), w;
        while (len(w) < 13) w.insert(w.end(), base.begin(), base.end());
        texts.push_back(w);
    }
    for (const Word& text : texts)
        for (auto f : {Family::PD, Family::SD, Family::PSD, Family::PSC, Family::SSC, Family::PSSC})
            for (int k : {0, 1, 2, 3}) {
                if (k && (f == Family::PSC || f == Family::SSC || f == Family::PSSC)) continue;
                OpKind op{f, k ? std::optional<int>(k) : std::nullopt};
                for (int start = 1; start <= len(text); ++start) {
                    auto got = reachable_prefix_lengths(op, text, start);
                    CHECK(got == naive_prefix_reach(f, k, text, start));
                    CHECK(std::is_sorted(got.begin(), got.end()));
                    CHECK(got.front() == start);
                }
            }
}

TEST_CASE("omega chains reach 4096 and replay") {
    struct Case {
        Family f;
        Sequence s;
    };
    for (auto [f, seq] : {Case{Family::SSC, Sequence::fibonacci}, Case{Family::SSC, Sequence::thue_morse},
                          Case{Family::SSC, Sequence::period_doubling}, Case{Family::SD, Sequence::stewart}}) {
        CAPTURE(sequence_name(seq));
        OpKind op{f, std::nullopt};
        auto chain = verify_omega(op, seq, 4096);
        REQUIRE(chain.has_value());
        CHECK(len(chain->start) <= 16);
        Replay r = verify_derivation(op, *chain);
        REQUIRE(r.ok);
        CHECK(len(r.word) >= 4096);
        Word text = generate(seq, len(r.word));
        CHECK(r.word == text);
        // each element is a prefix of the final word, so the earliest bad end bounds them all
        if (seq == Sequence::thue_morse) CHECK(first_repetition_end(r.word, 2, 1) > len(r.word));
        if (seq == Sequence::stewart) CHECK(first_repetition_end(r.word, 3, 1) == len(r.word) + 1);
        // replay step by step: every element is a prefix
        Word cur = chain->start;
        for (const auto& st : chain->steps) {
            auto next = apply_step(op, cur, st);
            REQUIRE(next.has_value());
            CHECK(len(*next) > len(cur));
            CHECK(std::equal(next->begin(), next->end(), text.begin()));
            cur = *next;
        }
    }
}

TEST_CASE("duplication alone cannot carry Thue-Morse far") {
    auto rows = thue_morse_psd_bounds(6);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        CAPTURE(row.n);
        CHECK(row.bound == (1 << (row.n + 1)) + (row.n ? 1 << (row.n - 1) : 0));
        CHECK(row.holds);
        CHECK(row.worst <= row.bound);
        CHECK(row.worst >= (1 << row.n));
    }
    // suffix completion from the seed the verifier picked does get past the bound
    OpKind ssc{Family::SSC, std::nullopt};
    auto chain = verify_omega(ssc, Sequence::thue_morse, 400);
    REQUIRE(chain.has_value());
    Word text = generate(Sequence::thue_morse, 800);
    CHECK(longest_reachable_prefix(ssc, text, len(chain->start)) >= 400);
}

TEST_CASE("unreachable targets fail") {
    // Thue-Morse has no square prefix, so prefix duplication never lands on one of its prefixes
    auto chain = verify_omega(OpKind{Family::PD, std::nullopt}, Sequence::thue_morse, 64, 4);
    CHECK_FALSE(chain.has_value());
    CHECK_THROWS(verify_omega(OpKind{Family::SSC, std::nullopt}, Sequence::fibonacci, 0));
}
