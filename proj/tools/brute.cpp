#include "brute.hpp"

#include <algorithm>

namespace sqdup::brute {

namespace {

bool square_at(const Word& w, int i, int j) {
    int l = j - i + 1;
    if (l <= 0 || l % 2) return false;
    return std::equal(w.begin() + (i - 1), w.begin() + (i - 1 + l / 2), w.begin() + (i - 1 + l / 2));
}

int common_prefix(const Word& w, int i, int j) {
    int n = len(w), l = 0;
    while (i + l <= n && j + l <= n && w[i + l - 1] == w[j + l - 1]) ++l;
    return l;
}

int smallest_period(const Word& w, int i, int j) {
    int l = j - i + 1;
    for (int p = 1; p < l; ++p)
        if (common_prefix(w, i, i + p) >= l - p) return p;
    return l;
}

}  // namespace

std::vector<int> suffix_array(const Word& w) {
    std::vector<int> sa(len(w));
    for (int i = 0; i < len(w); ++i) sa[i] = i + 1;
    std::sort(sa.begin(), sa.end(), [&](int a, int b) { return std::lexicographical_compare(w.begin() + a - 1, w.end(), w.begin() + b - 1, w.end()); });
    return sa;
}

std::vector<int> lcp_array(const Word& w) {
    auto sa = suffix_array(w);
    std::vector<int> out(len(w) + 2, 0);
    for (int r = 2; r <= len(w); ++r) out[r] = common_prefix(w, sa[r - 2], sa[r - 1]);
    return out;
}

std::vector<Run> runs(const Word& w) {
    int n = len(w);
    std::vector<Run> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int p = smallest_period(w, i, j);
            if (2 * p > j - i + 1) continue;
            bool left = i == 1 || w[i - 2] != w[i + p - 2];
            bool right = j == n || w[j] != w[j - p];
            if (left && right) out.push_back({i, j, p});
        }
    std::sort(out.begin(), out.end());
    return out;
}

SquareTables square_tables(const Word& w) {
    int n = len(w);
    SquareTables t;
    t.n = n;
    t.left.assign(n + 2, 0);
    t.right.assign(n + 2, n + 1);
    t.max_sq_end.assign(n + 2, 0);
    t.sc.assign(n + 2, 0);
    t.min_right_end.assign(n + 2, n + 1);
    t.max_left_end.assign(n + 2, 0);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; b += 2) {
            if (!square_at(w, a, b)) continue;
            int h = (b - a + 1) / 2;
            t.left[b] = std::max(t.left[b], a);
            t.right[a] = std::min(t.right[a], b);
            t.max_sq_end[b] = std::max(t.max_sq_end[b], b - a + 1);
            t.sc[a + h] = std::max(t.sc[a + h], h);
            for (int x = a; x < a + h; ++x) t.min_right_end[x] = std::min(t.min_right_end[x], b);
            for (int x = a + h; x <= b; ++x) t.max_left_end[x] = std::max(t.max_left_end[x], a);
        }
    return t;
}

std::vector<int> lprf(const Word& w, const std::vector<int>& lo, const std::vector<int>& hi) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            int gap = i - 1 - j;
            if (gap < lo[i] || gap > hi[i]) continue;
            int l = 0;
            while (i + l <= n && j - l >= 1 && w[i + l - 1] == w[j - l - 1]) ++l;
            t[i] = std::max(t[i], l);
        }
    return t;
}

std::vector<int> lpf(const Word& w, const std::vector<int>& lo, const std::vector<int>& hi) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s < i; ++s)
            for (int l = std::min(common_prefix(w, s, i), i - s); l >= 1; --l) {
                int gap = i - s - l;
                if (gap >= lo[i] && gap <= hi[i]) {
                    t[i] = std::max(t[i], l);
                    break;
                }
            }
    return t;
}

std::vector<int> lpal_lrep(const Word& w, ArmKind kind) {
    int n = len(w);
    std::vector<int> t(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        if (kind == ArmKind::palindrome) {
            for (int j = 1; j < i; ++j) {
                int l = 0;
                while (i + l <= n && j - l >= 1 && w[i + l - 1] == w[j - l - 1]) ++l;
                if (l >= 1 && i - 1 - j <= l) t[i] = std::max(t[i], l);
            }
        } else {
            for (int s = 1; s < i; ++s)
                for (int l = std::min(common_prefix(w, s, i), i - s); l >= 1; --l)
                    if (i - s - l <= l) {
                        t[i] = std::max(t[i], l);
                        break;
                    }
        }
    }
    return t;
}

bool has_square_prefix(const Word& w, int i, int j, int max_root) {
    for (int r = 1; r <= max_root && i + 2 * r - 1 <= j; ++r)
        if (square_at(w, i, i + 2 * r - 1)) return true;
    return false;
}

bool has_square_suffix(const Word& w, int i, int j, int max_root) {
    for (int r = 1; r <= max_root && j - 2 * r + 1 >= i; ++r)
        if (square_at(w, j - 2 * r + 1, j)) return true;
    return false;
}

bool primitive(const Word& w, int i, int j, const OpKind& op) {
    int root = op.completion() ? j - i + 1 : op.bound_or(j - i + 1);
    if (op.prefix_side() && has_square_prefix(w, i, j, root)) return false;
    if (op.suffix_side() && has_square_suffix(w, i, j, root)) return false;
    return true;
}

std::vector<Factor> free_factors(const Word& w, PsfKind kind) {
    int n = len(w);
    std::vector<Factor> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            bool p = !has_square_prefix(w, i, j, n), s = !has_square_suffix(w, i, j, n);
            if (kind == PsfKind::p ? p : kind == PsfKind::s ? s : p && s) out.push_back({i, j});
        }
    return out;
}

bool factorizable(const Word& w, bool runs_allowed) {
    int n = len(w);
    std::vector<char> ok(n + 2, 0);
    ok[n + 1] = 1;
    for (int i = n; i >= 1; --i)
        for (int e = i + 1; e <= n && !ok[i]; ++e) {
            if (!ok[e + 1]) continue;
            bool part = runs_allowed ? 2 * smallest_period(w, i, e) <= e - i + 1 : square_at(w, i, e);
            ok[i] = part;
        }
    return ok[1];
}

int max_square_parts(const Word& w) {
    int n = len(w);
    std::vector<int> best(n + 2, 0);
    for (int i = n; i >= 1; --i) {
        best[i] = best[i + 1];  // a plain letter
        for (int e = i + 1; e <= n; e += 2)
            if (square_at(w, i, e)) best[i] = std::max(best[i], best[e + 1] + 1);
    }
    return best[1];
}

}  // namespace sqdup::brute
