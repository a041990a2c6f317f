#pragma once
// Duplication and completion distances. Tables are indexed 1..n; kInf marks unreachable.

#include <vector>

#include "sqdup/square_tables.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

enum class DupSide { suffix, prefix };

// suffix: entry i is the SD_k distance from w[1..i] to w.
// prefix: entry j is the PD_k distance from w[j..n] to w.
// reference selects the plain O(nk) recurrence instead of the run-window sweep.
std::vector<int> dup_distance_table(const Word& w, int k, DupSide side, bool reference = false);

// Fewest PSD_k steps from x to w.
int bpsd_distance(const Word& x, const Word& w, int k);

// entry i: SSC distance from w[1..i] to w
std::vector<int> sscd_table(const Word& w);
// entry j: PSC distance from w[j..n] to w
std::vector<int> pscd_table(const Word& w);

inline constexpr int kPsscDistanceCap = 20000;

// Fewest PSSC steps from x (any occurrence) to w.
int pssc_distance(const Word& x, const Word& w, int cap = kPsscDistanceCap);
int pssc_distance_from(const Word& w, int i, int j, int cap = kPsscDistanceCap);

// Widest one-step completions of w[i..j] inside w: least start reachable by a
// prefix completion, greatest end reachable by a suffix completion (0 if none).
class CompletionReach {
public:
    explicit CompletionReach(const Word& w);
    int n() const { return n_; }
    int min_start(int i, int j) const;
    int max_end(int i, int j) const;

private:
    int n_;
    std::vector<Run> runs_, mirrored_;
    std::vector<int> off_, ids_, moff_, mids_;  // runs covering each position
    static int min_start(const std::vector<Run>& runs, const std::vector<int>& off, const std::vector<int>& ids, int i, int j);
};

}  // namespace sqdup
