#pragma once
// Runs and per-position square tables. Arrays are indexed 1..n, slot 0 unused.

#include <span>
#include <vector>

#include "sqdup/core_index.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

struct Run {
    int i;  // start
    int j;  // end
    int p;  // period
    int length() const { return j - i + 1; }
    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run&, const Run&) = default;
};

std::vector<Run> compute_runs(const Lce& lce);
std::vector<Run> compute_runs(const Word& w);

enum class TableRoute { runs, lz };

struct SquareTables {
    int n = 0;
    std::vector<Run> runs;
    std::vector<int> left;           // start of shortest square ending at i, 0 if none
    std::vector<int> right;          // end of shortest square starting at i, n+1 if none
    std::vector<int> max_sq_end;     // length of longest square ending at i
    std::vector<int> sc;             // arm of longest square centred at i
    std::vector<int> min_right_end;  // least end of a square whose left root holds i, n+1 if none
    std::vector<int> max_left_end;   // greatest start of a square whose right root holds i, 0 if none
};

SquareTables compute_square_tables(const Lce& lce, TableRoute route = TableRoute::runs);
SquareTables compute_square_tables(const Word& w, TableRoute route = TableRoute::runs);

// left/right restricted to squares of root length <= k
std::vector<int> bounded_left(const SquareTables& t, int k);
std::vector<int> bounded_right(const SquareTables& t, int k);

// Shortest-square-ending table via LZ factors; reference route for left[].
std::vector<int> left_via_lz(const Lce& lce);

// Primitively rooted squares with root <= k, by start and by end.
class PrimSquareLists {
public:
    PrimSquareLists(const std::vector<Run>& runs, int n, int k);
    int n() const { return n_; }
    int bound() const { return k_; }
    // root lengths p (ascending) with w[i..i+2p-1] primitively rooted
    std::span<const int> starting_at(int i) const { return span_of(by_start_, start_off_, i); }
    // root lengths p (ascending) with w[j-2p+1..j] primitively rooted
    std::span<const int> ending_at(int j) const { return span_of(by_end_, end_off_, j); }
    // root lengths p (ascending) with w[c-p..c+p-1] primitively rooted
    std::span<const int> centred_at(int c) const { return span_of(by_centre_, centre_off_, c); }
    std::size_t total() const { return by_start_.size(); }

private:
    int n_, k_;
    std::vector<int> by_start_, start_off_, by_end_, end_off_, by_centre_, centre_off_;
    static std::span<const int> span_of(const std::vector<int>& v, const std::vector<int>& off, int i) {
        return {v.data() + off[i], static_cast<std::size_t>(off[i + 1] - off[i])};
    }
};

}  // namespace sqdup
