#pragma once
// Definition-level routes behind `sqdup oracle ...`. Cubic or worse; callers
// keep inputs small.

#include <vector>

#include "sqdup/gapped_tables.hpp"
#include "sqdup/ops_kernel.hpp"
#include "sqdup/square_tables.hpp"
#include "sqdup/squarefree.hpp"

namespace sqdup::brute {

std::vector<int> suffix_array(const Word& w);  // 0-based list of 1-based starts
std::vector<int> lcp_array(const Word& w);     // 1..n, entry 1 is 0
std::vector<Run> runs(const Word& w);
SquareTables square_tables(const Word& w);  // runs left empty

// gap rule per (i, gap, arm)
std::vector<int> lprf(const Word& w, const std::vector<int>& lo, const std::vector<int>& hi);
std::vector<int> lpf(const Word& w, const std::vector<int>& lo, const std::vector<int>& hi);
std::vector<int> lpal_lrep(const Word& w, ArmKind kind);

bool has_square_prefix(const Word& w, int i, int j, int max_root);
bool has_square_suffix(const Word& w, int i, int j, int max_root);
// no one-step predecessor under op
bool primitive(const Word& w, int i, int j, const OpKind& op);

std::vector<Factor> free_factors(const Word& w, PsfKind kind);

bool factorizable(const Word& w, bool runs_allowed);
int max_square_parts(const Word& w);

}  // namespace sqdup::brute
