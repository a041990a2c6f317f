#pragma once
// Prefixes of classic infinite binary words and checks that an operation can
// grow one prefix of such a word into longer and longer prefixes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqdup/ops_kernel.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

enum class Sequence { fibonacci, thue_morse, period_doubling, stewart };

Sequence parse_sequence(std::string_view name);
std::string sequence_name(Sequence s);

// length-n prefix over {0, 1}
Word generate(Sequence s, int n);

// A chain of prefixes, each one step from the previous, starting from a
// prefix of length <= max_seed (the shortest that works) and ending at
// length >= target_len.
std::optional<Derivation> verify_omega(const OpKind& op, Sequence s, int target_len, int max_seed = 16);

// Longest prefix of text reachable from text[1..start] with every
// intermediate word a prefix of text.
int longest_reachable_prefix(const OpKind& op, const Word& text, int start);

// From prefixes of the n-th Thue-Morse block no duplication chain of
// Thue-Morse prefixes passes 2^{n+1} + 2^{n-1}.
struct BoundRow {
    int n;
    int bound;   // floor of 2^{n+1} + 2^{n-1}
    int worst;   // longest prefix reached from any prefix of t_n
    bool holds;
};
std::vector<BoundRow> thue_morse_psd_bounds(int max_n = 6);

// Lengths reachable from text[1..start] (experiment helper, asserts nothing).
std::vector<int> reachable_prefix_lengths(const OpKind& op, const Word& text, int start);

}  // namespace sqdup
