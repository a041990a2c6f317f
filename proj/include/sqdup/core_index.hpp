#pragma once
// Suffix array, LCP and constant-time range minima; LZ factorization; basic factors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sqdup/word.hpp"

namespace sqdup {

// 0-based suffix array of an integer string with values in [0, upper].
std::vector<int> suffix_array(std::span<const int> s, int upper);

// Range-minimum over a fixed array. Blocks of 32 plus a sparse table over
// block minima keep memory near 2n words. Indices here are 0-based.
template <class T>
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(std::vector<T> a) : a_(std::move(a)) { build(); }

    std::size_t size() const { return a_.size(); }
    const std::vector<T>& values() const { return a_; }

    // leftmost index of a minimum in [l, r]
    std::size_t argmin(std::size_t l, std::size_t r) const {
        std::size_t bl = l / kB, br = r / kB;
        if (bl == br) return scan(l, r);
        std::size_t best = scan(l, bl * kB + kB - 1);
        if (bl + 1 < br) {
            std::size_t mid = block_argmin(bl + 1, br - 1);
            if (a_[mid] < a_[best]) best = mid;
        }
        std::size_t tail = scan(br * kB, r);
        if (a_[tail] < a_[best]) best = tail;
        return best;
    }
    T min(std::size_t l, std::size_t r) const { return a_[argmin(l, r)]; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // largest index q in [l, r] with a[q] < x, or npos
    std::size_t last_below(std::size_t l, std::size_t r, T x) const {
        if (l > r) return npos;
        std::size_t br = r / kB, bl = l / kB;
        for (std::size_t q = r + 1; q-- > std::max(l, br * kB);)
            if (a_[q] < x) return q;
        if (br == bl) return npos;
        // rightmost block in (bl, br) whose minimum is below x
        std::size_t lo = bl + 1, hi = br;  // search in [lo, hi)
        if (lo < hi && a_[block_argmin(lo, hi - 1)] < x) {
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                if (a_[block_argmin(mid, hi - 1)] < x) lo = mid;
                else hi = mid;
            }
            for (std::size_t q = lo * kB + kB; q-- > lo * kB;)
                if (a_[q] < x) return q;
        }
        for (std::size_t q = bl * kB + kB; q-- > l;)
            if (a_[q] < x) return q;
        return npos;
    }

    // smallest index q in [l, r] with a[q] < x, or npos
    std::size_t first_below(std::size_t l, std::size_t r, T x) const {
        if (l > r) return npos;
        std::size_t br = r / kB, bl = l / kB;
        for (std::size_t q = l; q <= std::min(r, bl * kB + kB - 1); ++q)
            if (a_[q] < x) return q;
        if (br == bl) return npos;
        std::size_t lo = bl + 1, hi = br;  // search in [lo, hi)
        if (lo < hi && a_[block_argmin(lo, hi - 1)] < x) {
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                if (a_[block_argmin(lo, mid - 1)] < x) hi = mid;
                else lo = mid;
            }
            for (std::size_t q = lo * kB; q < lo * kB + kB; ++q)
                if (a_[q] < x) return q;
        }
        for (std::size_t q = br * kB; q <= r; ++q)
            if (a_[q] < x) return q;
        return npos;
    }

private:
    static constexpr std::size_t kB = 32;
    std::vector<T> a_;
    std::vector<std::vector<std::uint32_t>> table_;  // level -> block -> argmin index

    std::size_t scan(std::size_t l, std::size_t r) const {
        std::size_t best = l;
        for (std::size_t i = l + 1; i <= r; ++i)
            if (a_[i] < a_[best]) best = i;
        return best;
    }
    std::size_t block_argmin(std::size_t bl, std::size_t br) const {
        std::size_t k = std::bit_width(br - bl + 1) - 1;
        std::size_t x = table_[k][bl], y = table_[k][br + 1 - (std::size_t{1} << k)];
        return a_[y] < a_[x] ? y : x;
    }
    void build() {
        std::size_t nb = (a_.size() + kB - 1) / kB;
        if (nb == 0) return;
        table_.emplace_back(nb);
        for (std::size_t b = 0; b < nb; ++b)
            table_[0][b] = static_cast<std::uint32_t>(scan(b * kB, std::min(a_.size(), b * kB + kB) - 1));
        for (std::size_t k = 1; (std::size_t{1} << k) <= nb; ++k) {
            std::size_t h = std::size_t{1} << (k - 1);
            table_.emplace_back(nb - (std::size_t{1} << k) + 1);
            for (std::size_t b = 0; b + (std::size_t{1} << k) <= nb; ++b) {
                auto x = table_[k - 1][b], y = table_[k - 1][b + h];
                table_[k][b] = a_[y] < a_[x] ? y : x;
            }
        }
    }
};

// Suffix array with ranks and LCP over a word. Public positions are 1-based.
class TextIndex {
public:
    explicit TextIndex(const Word& w);

    int n() const { return n_; }
    const Word& word() const { return w_; }
    // sa[r] for r in 1..n is the start of the r-th smallest suffix
    int sa(int r) const { return sa_min_.values()[r]; }
    int rank(int i) const { return rank_[i]; }
    // lcp of the suffixes at ranks r-1 and r (r >= 2)
    int lcp_adjacent(int r) const { return lcp_min_.values()[r]; }
    std::vector<int> sa_vector() const { return {sa_min_.values().begin() + 1, sa_min_.values().end()}; }

    // |longest common prefix of w[i..n] and w[j..n]|
    int lcp(int i, int j) const;

    // Rank interval [lo, hi] of suffixes sharing a prefix of length >= len with suffix i.
    std::pair<int, int> rank_interval(int i, int len) const;
    // Smallest start position among suffixes with lcp(., i) >= len.
    int min_start_sharing(int i, int len) const;

private:
    Word w_;
    int n_;
    std::vector<int> rank_;
    RangeMin<int> lcp_min_;
    RangeMin<int> sa_min_;
};

// Forward and backward extension queries in O(1).
class Lce {
public:
    explicit Lce(const Word& w);
    int n() const { return fwd_.n(); }
    const Word& word() const { return fwd_.word(); }
    const TextIndex& forward() const { return fwd_; }
    // common prefix of w[i..n], w[j..n]; zero when either index is past n
    int ext(int i, int j) const {
        if (i > n() || j > n() || i < 1 || j < 1) return 0;
        return fwd_.lcp(i, j);
    }
    // common suffix of w[1..i], w[1..j]; zero when either index is < 1
    int ext_back(int i, int j) const {
        if (i < 1 || j < 1 || i > n() || j > n()) return 0;
        return bwd_.lcp(n() + 1 - i, n() + 1 - j);
    }
    // w[i..i+2l-1] is a square
    bool is_square(int i, int l) const { return l > 0 && i + 2 * l - 1 <= n() && ext(i, i + l) >= l; }

private:
    TextIndex fwd_;
    TextIndex bwd_;
};

// Joint ordering of suffixes w[i..n] and reversed prefixes w[1..i]^R, built
// over w.sep.w^R with the separator below every letter.
class BidiIndex {
public:
    explicit BidiIndex(const Word& w);
    int n() const { return n_; }
    int rank(int i) const { return idx_.rank(i); }
    int rank_rev(int e) const { return idx_.rank(rev_pos(e)); }
    int total() const { return idx_.n(); }
    // owner of list slot r: positive i for suffix i, negative -e for reversed prefix e, 0 separator
    int slot_owner(int r) const;
    // common prefix of w[i..n] and w[1..e]^R
    int lcp_suffix_rev(int i, int e) const { return idx_.lcp(i, rev_pos(e)); }
    int lcp_suffixes(int i, int j) const { return idx_.lcp(i, j); }
    int lcp_revs(int e, int f) const { return idx_.lcp(rev_pos(e), rev_pos(f)); }

private:
    int n_;
    TextIndex idx_;
    int rev_pos(int e) const { return 2 * n_ + 2 - e; }
    static Word joined(const Word& w);
};

struct LzFactor {
    int start;   // 1-based
    int length;
    int source;  // 1-based start of an earlier occurrence; 0 for a fresh letter
};

std::vector<LzFactor> lz_factorize(const Word& w, bool allow_overlap = false);

// Arithmetic progression of positions start, start+step, ...
struct Progression {
    int start;
    int step;
    int count;
    int last() const { return start + step * (count - 1); }
};

// Dictionary of basic factors: labels of every w[i..i+2^k-1] plus per-block
// occurrence progressions for windowed occurrence queries.
class Dbf {
public:
    explicit Dbf(const Word& w, int window_factor = 10);
    int n() const { return n_; }
    int levels() const { return static_cast<int>(label_.size()); }
    int label(int i, int k) const { return label_[k][i - 1]; }
    int window_factor() const { return c_; }
    // Occurrences of w[i..i+2^k-1] lying inside w[a..b]; b - a + 1 <= c*2^k.
    std::vector<Progression> occurrences(int i, int k, int a, int b) const;

private:
    int n_;
    int c_;
    std::vector<std::vector<int>> label_;
    struct Slot {
        int first;
        int last;
        int count;
    };
    std::vector<std::unordered_map<std::uint64_t, Slot>> blocks_;
};

// Start positions (1-based) of every occurrence of x in w.
std::vector<int> occurrences(const Word& x, const Word& w);

// Expand a compact occurrence set into sorted positions.
std::vector<int> expand(const std::vector<Progression>& ps);

}  // namespace sqdup
