#pragma once
// Longest previous gapped factor / reversed factor tables. All tables are
// indexed 1..n. For position i the arm u is a prefix of w[i..n]; a repeat
// needs u v as a suffix of w[1..i-1], a palindrome needs u^R v there.

#include <cstdint>
#include <vector>

#include "sqdup/word.hpp"

namespace sqdup {

struct GapTable {
    std::vector<int> arm;
    // start of the earlier copy (u, or u^R for palindromes) behind arm[i]; 0 when arm[i] = 0
    std::vector<int> source;
};

// gap bounds g <= |v| < G, with 0 <= g < G <= n
GapTable lprf_bounded(const Word& w, int g, int G);
GapTable lpf_bounded(const Word& w, int g, int G);

// gap lower bound |v| >= g[i]; g is indexed 1..n with 0 <= g[i] <= n
GapTable lprf_func(const Word& w, const std::vector<int>& g);
GapTable lpf_func(const Word& w, const std::vector<int>& g);

// L[i]: leftmost j < i maximising lcp(j, i); L[1] = 0
std::vector<int> l_array(const Word& w);

enum class ArmKind { palindrome, repeat };

// left arm w[i..i+len-1], right arm w[j..j+len-1], gap j-i-len <= len
struct LongArmed {
    int i;
    int len;
    int j;
    friend bool operator==(const LongArmed&, const LongArmed&) = default;
    friend auto operator<=>(const LongArmed&, const LongArmed&) = default;
};

inline constexpr int kLongArmedCap = 20000;

// Palindromes: arms extend neither outwards nor inwards. Repeats: nonempty
// gap, arms extend neither left nor right at the same distance.
std::vector<LongArmed> maximal_long_armed(const Word& w, ArmKind kind, int cap = kLongArmedCap);

// gap at most the arm
std::vector<int> lpal_lrep(const Word& w, ArmKind kind);

}  // namespace sqdup
