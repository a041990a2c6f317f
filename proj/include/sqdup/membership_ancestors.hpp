#pragma once
// Membership deciders and ancestor computations for PSD, PSD_k and PSSC.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sqdup/ops_kernel.hpp"
#include "sqdup/square_tables.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

// S[i]: w reachable from w[1..i] by SD_k; P[j]: w reachable from w[j..n] by PD_k. Indexed 1..n.
struct FlagArrays {
    std::vector<char> S, P;
};

FlagArrays sd_pd_flags(const PrimSquareLists& squares);
FlagArrays sd_pd_flags(const Word& w, int k);

bool psdk_membership(const Word& w, const Word& x, int k);
// w reachable under PSD_k from some factor accepted by member
bool psdk_language_membership(const Word& w, int k, const std::function<bool(const Word&)>& member);
bool psd_membership(const Word& w, const Word& x);

// Least i with w reachable from w[1..i] by SSC.
int ssc_min_prefix(const Word& w);

// Per start i, least end j_i of a PSSC ancestor (n+1 when none starts at i).
struct AncestorProfile {
    int n = 0;
    std::vector<int> j;  // 1..n
    std::int64_t count = 0;
    Factor shortest;     // leftmost among the shortest
};

AncestorProfile pssc_ancestor_profile(const SquareTables& t);
AncestorProfile pssc_ancestor_profile(const Word& w);
bool pssc_membership(const Word& w, const Word& x);

// Ancestor matrix for PSD or PSD_k: row-major (i-1)*n + (j-1). Quadratic.
std::vector<char> psd_ancestor_matrix(const Word& w, std::optional<int> k);

struct BoundedAncestors {
    std::vector<Factor> all;  // only filled on request
    std::int64_t count = 0;
    Factor shortest;
    std::optional<Factor> longest_primitive;
};

enum class AncestorQuery { all, count, shortest, longest_primitive };

BoundedAncestors bpsd_ancestors(const Word& w, int k, AncestorQuery what);

// Greedy peeling of shortest square prefixes/suffixes; op is PD, SD or PSD, optionally bounded.
Factor primitive_root(const Word& w, const OpKind& op);

// No square (with root <= k when bounded) at the start and/or end of w[i..j].
bool is_primitive_factor(const SquareTables& t, int i, int j, const OpKind& op);

enum class CommonQuery { any, shortest, longest };

std::optional<Word> common_ancestor(const Word& x, const Word& y, const OpKind& op, CommonQuery what);

}  // namespace sqdup
