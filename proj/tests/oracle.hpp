#pragma once
// Brute-force reference implementations. Deliberately slow and direct; they
// share nothing with the library beyond the Word type.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "sqdup/word.hpp"

namespace naive {

using sqdup::Word;

std::vector<int> suffix_array(const Word& w);
int lcp(const Word& w, int i, int j);            // 1-based suffixes
bool is_square(const Word& w, int i, int j);      // w[i..j]
bool is_primitive(const Word& u);
int period(const Word& u);

struct Tables {
    std::vector<int> left, right, max_sq_end, sc, min_right_end, max_left_end;
};
Tables square_tables(const Word& w);

struct RunT {
    int i, j, p;
    auto operator<=>(const RunT&) const = default;
};
std::vector<RunT> runs(const Word& w);

// operation families mirror the library enum order: PD SD PSD PSC SSC PSSC
enum class Op { PD, SD, PSD, PSC, SSC, PSSC };
std::set<Word> step(Op op, int k, const Word& x);  // k <= 0 means unbounded
std::set<Word> closure(Op op, int k, const Word& x, int maxlen);
// shortest derivation length from x to w, word-level BFS; -1 when unreachable
int distance(Op op, int k, const Word& x, const Word& w);
// w reachable from x
bool member(Op op, int k, const Word& x, const Word& w);

// every binary word of length n
std::vector<Word> all_words(int n, int sigma = 2);
Word random_word(std::mt19937_64& rng, int n, int sigma);

}  // namespace naive
