#include "sqdup/square_tables.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sqdup/interval_engine.hpp"

namespace sqdup {

namespace {

// suffix i strictly below suffix j; flip reverses the letter order, end of text is lowest in both
bool suffix_less(const Lce& lce, int i, int j, bool flip) {
    const Word& w = lce.word();
    int n = lce.n();
    int l = lce.ext(i, j);
    if (i + l > n) return true;
    if (j + l > n) return false;
    Symbol a = w[i + l - 1], b = w[j + l - 1];
    return flip ? a > b : a < b;
}

}  // namespace

std::vector<Run> compute_runs(const Lce& lce) {
    int n = lce.n();
    std::vector<Run> runs;
    std::vector<int> stack;
    for (bool flip : {false, true}) {
        stack.clear();
        for (int i = n; i >= 1; --i) {
            while (!stack.empty() && !suffix_less(lce, stack.back(), i, flip)) stack.pop_back();
            int next = stack.empty() ? n + 1 : stack.back();
            stack.push_back(i);
            int p = next - i;
            if (i + p > n) continue;
            int end = i + p - 1 + lce.ext(i, i + p);
            int start = i - lce.ext_back(i - 1, i + p - 1);
            if (end - start + 1 >= 2 * p) runs.push_back({start, end, p});
        }
    }
    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
#ifndef NDEBUG
    long long expo = 0;
    for (const auto& r : runs) expo += r.length() / r.p;
    assert(static_cast<long long>(runs.size()) < n && expo < 3LL * n);
#endif
    return runs;
}

std::vector<Run> compute_runs(const Word& w) { return compute_runs(Lce(w)); }

namespace {

void fill_from_runs(SquareTables& t) {
    int n = t.n;
    std::vector<WeightedInterval> left_iv, right_iv, sq_end_iv, sc_iv, mre1, mre2, mle1, mle2;
    for (const auto& r : t.runs) {
        int a = r.i, b = r.j, p = r.p;
        left_iv.push_back({a + 2 * p - 1, b + 1, p});
        right_iv.push_back({a, b - 2 * p + 2, p});
        for (int m = 1; 2 * m * p <= b - a + 1; ++m) {
            sq_end_iv.push_back({a + 2 * m * p - 1, b + 1, 2 * m * p});
            sc_iv.push_back({a + m * p, b - m * p + 2, m * p});
        }
        mre2.push_back({a, a + p, a + 2 * p - 1});
        if (a + p <= b - p) mre1.push_back({a + p, b - p + 1, p});
        mle1.push_back({a + p, b - p + 2, p});
        if (b - p + 2 <= b) mle2.push_back({b - p + 2, b + 1, b - 2 * p + 1});
    }
    auto lmin = cover_extremum(left_iv, n, Extremum::min);
    auto rmin = cover_extremum(right_iv, n, Extremum::min);
    t.max_sq_end = cover_extremum(sq_end_iv, n, Extremum::max);
    t.sc = cover_extremum(sc_iv, n, Extremum::max);
    auto m1 = cover_extremum(mre1, n, Extremum::min);
    auto m2 = cover_extremum(mre2, n, Extremum::min);
    auto x1 = cover_extremum(mle1, n, Extremum::min);
    auto x2 = cover_extremum(mle2, n, Extremum::max);
    t.left.assign(n + 2, 0);
    t.right.assign(n + 2, n + 1);
    t.min_right_end.assign(n + 2, n + 1);
    t.max_left_end.assign(n + 2, 0);
    for (int x = 1; x <= n; ++x) {
        if (lmin[x] <= n) t.left[x] = x - 2 * lmin[x] + 1;
        if (rmin[x] <= n) t.right[x] = x + 2 * rmin[x] - 1;
        int e = m2[x];
        if (m1[x] <= n) e = std::min(e, x + m1[x]);
        t.min_right_end[x] = e;
        int s = x2[x];
        if (x1[x] <= n) s = std::max(s, x - x1[x]);
        t.max_left_end[x] = s;
    }
    t.max_sq_end.resize(n + 2, 0);
    t.sc.resize(n + 2, 0);
}

}  // namespace

SquareTables compute_square_tables(const Lce& lce, TableRoute route) {
    SquareTables t;
    t.n = lce.n();
    t.runs = compute_runs(lce);
    fill_from_runs(t);
    if (route == TableRoute::lz) t.left = left_via_lz(lce);
    return t;
}

SquareTables compute_square_tables(const Word& w, TableRoute route) {
    return compute_square_tables(Lce(w), route);
}

std::vector<int> bounded_left(const SquareTables& t, int k) {
    auto out = t.left;
    for (int x = 1; x <= t.n; ++x)
        if (out[x] && (x - out[x] + 1) / 2 > k) out[x] = 0;
    return out;
}

std::vector<int> bounded_right(const SquareTables& t, int k) {
    auto out = t.right;
    for (int x = 1; x <= t.n; ++x)
        if (out[x] <= t.n && (out[x] - x + 1) / 2 > k) out[x] = t.n + 1;
    return out;
}

std::vector<int> left_via_lz(const Lce& lce) {
    int n = lce.n();
    std::vector<int> left(n + 2, 0);
    for (const auto& f : lz_factorize(lce.word())) {
        int s = f.start;
        for (int x = s; x < s + f.length; ++x) {
            if (f.source) {
                // the copy lies strictly before s, so its table entries are final
                int xs = x - s + f.source;
                if (left[xs] >= f.source) {
                    left[x] = left[xs] + (s - f.source);
                    continue;
                }
            }
            // otherwise the shortest square ending at x must start before s
            for (int l = std::max(1, (x - s + 2) / 2); 2 * l <= x; ++l) {
                int st = x - 2 * l + 1;
                if (st >= s) continue;
                if (lce.ext(st, st + l) >= l) {
                    left[x] = st;
                    break;
                }
            }
        }
    }
    return left;
}

PrimSquareLists::PrimSquareLists(const std::vector<Run>& runs, int n, int k) : n_(n), k_(k) {
    // bucket every square (s, p) by start, end and centre with one counting pass each
    std::vector<int> cnt_s(n + 3, 0), cnt_e(n + 3, 0), cnt_c(n + 3, 0);
    for (const auto& r : runs) {
        if (r.p > k) continue;
        for (int s = r.i; s + 2 * r.p - 1 <= r.j; ++s) {
            ++cnt_s[s + 1];
            ++cnt_e[s + 2 * r.p];
            ++cnt_c[s + r.p + 1];
        }
    }
    for (int i = 1; i <= n + 2; ++i) {
        cnt_s[i] += cnt_s[i - 1];
        cnt_e[i] += cnt_e[i - 1];
        cnt_c[i] += cnt_c[i - 1];
    }
    start_off_ = cnt_s;
    end_off_ = cnt_e;
    centre_off_ = cnt_c;
    by_start_.resize(cnt_s[n + 2]);
    by_end_.resize(cnt_e[n + 2]);
    by_centre_.resize(cnt_c[n + 2]);
    for (const auto& r : runs) {
        if (r.p > k) continue;
        for (int s = r.i; s + 2 * r.p - 1 <= r.j; ++s) {
            by_start_[cnt_s[s]++] = r.p;
            by_end_[cnt_e[s + 2 * r.p - 1]++] = r.p;
            by_centre_[cnt_c[s + r.p]++] = r.p;
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::sort(by_start_.begin() + start_off_[i], by_start_.begin() + start_off_[i + 1]);
        std::sort(by_end_.begin() + end_off_[i], by_end_.begin() + end_off_[i + 1]);
        std::sort(by_centre_.begin() + centre_off_[i], by_centre_.begin() + centre_off_[i + 1]);
    }
}

}  // namespace sqdup
