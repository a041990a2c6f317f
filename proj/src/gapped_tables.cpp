#include "sqdup/gapped_tables.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sqdup/core_index.hpp"
#include "sqdup/interval_engine.hpp"
#include "sqdup/ops_kernel.hpp"
#include "sqdup/square_tables.hpp"

namespace sqdup {

namespace {

void check_bounds(const Word& w, int g, int G) {
    if (w.empty()) throw std::invalid_argument("empty input");
    if (g < 0 || g >= G || G > len(w)) throw std::invalid_argument("need 0 <= g < G <= n");
}

void check_gaps(const Word& w, const std::vector<int>& g) {
    if (w.empty()) throw std::invalid_argument("empty input");
    int n = len(w);
    if (static_cast<int>(g.size()) < n + 1) throw std::invalid_argument("gap array must cover 1..n");
    for (int i = 1; i <= n; ++i)
        if (g[i] < 0 || g[i] > n) throw std::invalid_argument("gap value out of range");
}

// For every query q in [1, nq], among items j in [q-hi, q-lo] ∩ [1, ni]
// find the items whose keys are nearest below and above key_q[q].
// Queries go in blocks of delta = hi-lo+1 consecutive positions; the window
// of a block's queries spans two item ranges J' (shrinking from the left) and
// J'' (growing to the right). Both become deletion-only sequences in key
// order, where the nearest live neighbours of a query slot are found with an
// adjacent-merge union-find.
struct Nearest {
    std::vector<int> below, above;  // item or 0
};

Nearest window_nearest(int nq, int ni, int lo, int hi, const std::vector<int>& key_item, const std::vector<int>& key_q, int keys) {
    const int delta = hi - lo + 1;
    const int blocks = (nq + delta - 1) / delta;
    Nearest out{std::vector<int>(nq + 1, 0), std::vector<int>(nq + 1, 0)};
    if (ni < 1 || blocks == 0) return out;

    std::vector<int> item_at(keys + 1, 0), query_at(keys + 1, 0);
    for (int j = 1; j <= ni; ++j) item_at[key_item[j]] = j;
    for (int q = 1; q <= nq; ++q) query_at[key_q[q]] = q;
    auto block_prime = [&](int j) {  // block whose J' holds j
        int x = j + lo - 1;
        return (x + delta - 1) / delta;
    };
    auto block_second = [&](int j) {  // block whose J'' holds j, or -1
        int x = j + lo - 1;
        return x % delta ? x / delta : -1;
    };
    auto in_range = [&](int b) { return b >= 0 && b < blocks; };

    // per block, slots in key order: +j item, -q query
    std::vector<int> offA(blocks + 1, 0), offB(blocks + 1, 0);
    for (int j = 1; j <= ni; ++j) {
        if (in_range(block_prime(j))) ++offA[block_prime(j) + 1];
        if (in_range(block_second(j))) ++offB[block_second(j) + 1];
    }
    for (int q = 1; q <= nq; ++q) {
        ++offA[(q - 1) / delta + 1];
        ++offB[(q - 1) / delta + 1];
    }
    for (int b = 0; b < blocks; ++b) {
        offA[b + 1] += offA[b];
        offB[b + 1] += offB[b];
    }
    std::vector<int> slotA(offA[blocks]), slotB(offB[blocks]);
    std::vector<int> posA(ni + 1, 0), posB(ni + 1, 0), qposA(nq + 1), qposB(nq + 1);
    auto fillA = offA, fillB = offB;
    for (int r = 0; r <= keys; ++r) {
        if (int j = item_at[r]) {
            if (int b = block_prime(j); in_range(b)) {
                posA[j] = fillA[b] - offA[b] + 1;
                slotA[fillA[b]++] = j;
            }
            if (int b = block_second(j); in_range(b)) {
                posB[j] = fillB[b] - offB[b] + 1;
                slotB[fillB[b]++] = j;
            }
        }
        if (int q = query_at[r]) {
            int b = (q - 1) / delta;
            qposA[q] = fillA[b] - offA[b] + 1;
            slotA[fillA[b]++] = -q;
            qposB[q] = fillB[b] - offB[b] + 1;
            slotB[fillB[b]++] = -q;
        }
    }

    std::vector<char> dead;
    auto run_pass = [&](const std::vector<int>& slots, int from, int to, auto&& order) {
        int L = to - from;
        IntervalUnionFind uf(L);
        dead.assign(L + 2, 0);
        auto kill = [&](int s) {
            dead[s] = 1;
            if (s > 1 && dead[s - 1]) uf.union_with_left(s);
            if (s < L && dead[s + 1]) uf.union_with_right(s);
        };
        for (int s = 1; s <= L; ++s)
            if (slots[from + s - 1] < 0) kill(s);
        auto answer = [&](int q, int qslot) {
            auto blk = uf.find(qslot);
            if (blk.min > 1) {
                int j = slots[from + blk.min - 2];
                if (!out.below[q] || key_item[j] > key_item[out.below[q]]) out.below[q] = j;
            }
            if (blk.max < L) {
                int j = slots[from + blk.max];
                if (!out.above[q] || key_item[j] < key_item[out.above[q]]) out.above[q] = j;
            }
        };
        order(kill, answer);
    };

    for (int b = 0; b < blocks; ++b) {
        int c = b * delta + 1 - lo;  // top of the window for the block's first query
        int first = b * delta + 1, last = std::min(nq, (b + 1) * delta);
        // J' = [c-delta+1, c]: left end of the window moves right
        run_pass(slotA, offA[b], offA[b + 1], [&](auto& kill, auto& answer) {
            for (int q = first; q <= last; ++q) {
                int gone = c - delta + (q - first);
                if (q > first && gone >= 1 && gone <= ni) kill(posA[gone]);
                answer(q, qposA[q]);
            }
        });
        // J'' = [c+1, c+delta-1]: right end of the window moves right; replay backwards
        run_pass(slotB, offB[b], offB[b + 1], [&](auto& kill, auto& answer) {
            for (int t = delta - 1; t >= 0; --t) {
                int q = first + t;
                if (q <= last) answer(q, qposB[q]);
                int gone = c + t;
                if (t >= 1 && gone >= 1 && gone <= ni && posB[gone]) kill(posB[gone]);
            }
        });
    }
    return out;
}

// LCP against the nearest-key items
template <class Lcp>
void take_nearest(const Nearest& nb, int q, Lcp lcp, int& best, int& who) {
    for (int j : {nb.below[q], nb.above[q]})
        if (j) {
            int v = lcp(j);
            if (v > best) best = v, who = j;
        }
}

}  // namespace

GapTable lprf_bounded(const Word& w, int g, int G) {
    check_bounds(w, g, G);
    int n = len(w);
    BidiIndex bidi(w);
    std::vector<int> key_item(n + 1), key_q(n + 1);
    for (int x = 1; x <= n; ++x) {
        key_item[x] = bidi.rank_rev(x);
        key_q[x] = bidi.rank(x);
    }
    // reversed prefix w[1..j]^R with j in [i-G, i-1-g]
    auto nb = window_nearest(n, n, g + 1, G, key_item, key_q, bidi.total());
    GapTable t{std::vector<int>(n + 2, 0), std::vector<int>(n + 2, 0)};
    for (int i = 1; i <= n; ++i) {
        int best = 0, who = 0;
        take_nearest(nb, i, [&](int j) { return bidi.lcp_suffix_rev(i, j); }, best, who);
        t.arm[i] = best;
        t.source[i] = best ? who - best + 1 : 0;
    }
    return t;
}

GapTable lpf_bounded(const Word& w, int g, int G) {
    check_bounds(w, g, G);
    int n = len(w);
    const int delta = G - g;
    BidiIndex bidi(w);
    Dbf dbf(w, 10);
    GapTable t{std::vector<int>(n + 2, 0), std::vector<int>(n + 2, 0)};
    auto lcp = [&](int s, int i) { return bidi.lcp_suffixes(s, i); };
    // arm from start s for query i: min(lcp, i-g-s), valid when it reaches i-G
    auto offer = [&](int i, int s) {
        if (s < 1 || s >= i) return;
        int v = std::min(lcp(s, i), i - g - s);
        if (v >= std::max(1, i - G - s + 1) && v > t.arm[i]) {
            t.arm[i] = v;
            t.source[i] = s;
        }
    };
    auto scan = [&](int i, int k, int a, int b) {
        a = std::max(a, 1);
        if (a > b) return;
        for (const auto& pr : dbf.occurrences(i, k, a, b)) {
            if (pr.count <= 4) {
                for (int x = 0; x < pr.count; ++x) offer(i, pr.start + x * pr.step);
                continue;
            }
            // All starts share one p-periodic stretch ending at E, so lcp(s, i)
            // is min(E-s+1, ext_i) off the single point where the two agree.
            // Left of it the arm is capped by ext_i and validity is a lower
            // bound on s; right of it the arm decreases with s.
            int p = pr.step;
            int ext_i = p + (i + p <= n ? lcp(i, i + p) : 0);
            int E = pr.start + p + lcp(pr.start, pr.start + p) - 1;
            int s_eq = E + 1 - ext_i;
            auto first_at_least = [&](long long x) {
                long long m = x <= pr.start ? 0 : (x - pr.start + p - 1) / p;
                return pr.start + static_cast<int>(std::min<long long>(m, pr.count - 1)) * p;
            };
            offer(i, pr.start);
            offer(i, first_at_least(static_cast<long long>(i) - G + 1 - ext_i));
            offer(i, first_at_least(s_eq));
            offer(i, first_at_least(static_cast<long long>(s_eq) + 1));
        }
    };
    // arms of length in [2^k, 2^{k+1}) start in [i-G-2^{k+1}+2, i-g-2^k]
    for (int k = 0; k < dbf.levels() && (1 << k) <= n; ++k) {
        int span = 1 << k;
        if (delta + 2 * span <= 10 * span) {
            for (int i = 1; i + span - 1 <= n; ++i) scan(i, k, i - G - 2 * span + 2, i - g - 1);
            continue;
        }
        // wide gap: two short ends by occurrence lists, the far middle by a
        // sliding window where only the lcp matters
        for (int i = 1; i + span - 1 <= n; ++i) {
            scan(i, k, i - G - 2 * span + 2, i - G + span - 2);
            scan(i, k, i - g - 2 * span, i - g - 1);
        }
        int lo = g + 2 * span + 1, hi = G;
        std::vector<int> key(n + 1);
        for (int x = 1; x <= n; ++x) key[x] = bidi.rank(x);
        auto nb = window_nearest(n, n, lo, hi, key, key, bidi.total());
        for (int i = 1; i <= n; ++i) {
            int best = 0, who = 0;
            take_nearest(nb, i, [&](int s) { return lcp(s, i); }, best, who);
            best = std::min(best, 2 * span - 1);
            if (best > t.arm[i]) {
                t.arm[i] = best;
                t.source[i] = who;
            }
        }
    }
    return t;
}

namespace {

// Nodes are inserted online with a fixed parent; queries climb to the deepest
// ancestor (current node included) whose id is at most a bound. Ids strictly
// decrease towards the root.
class LevelAncestors {
public:
    explicit LevelAncestors(int n) : levels_(std::bit_width(static_cast<unsigned>(n)) + 1), up_(levels_, std::vector<int>(n + 1, 0)) {}
    void attach(int v, int parent) {
        up_[0][v] = parent;
        for (int b = 1; b < levels_; ++b) up_[b][v] = up_[b - 1][v] ? up_[b - 1][up_[b - 1][v]] : 0;
    }
    int deepest_at_most(int v, int bound) const {
        if (!v || v <= bound) return v;
        for (int b = levels_ - 1; b >= 0; --b)
            if (up_[b][v] > bound) v = up_[b][v];
        return up_[0][v];
    }

private:
    int levels_;
    std::vector<std::vector<int>> up_;
};

}  // namespace

GapTable lprf_func(const Word& w, const std::vector<int>& g) {
    check_gaps(w, g);
    int n = len(w);
    BidiIndex bidi(w);
    GapTable t{std::vector<int>(n + 2, 0), std::vector<int>(n + 2, 0)};
    // Scanning the joint order, a new reversed prefix j dominates every
    // stacked j' > j: it is nearer in rank and leaves a longer gap. The stack
    // is a root path of a tree that keeps ids increasing; a query takes the
    // deepest stacked j <= i-1-g(i).
    auto pass = [&](bool ascending) {
        LevelAncestors tree(n);
        std::vector<int> stack;
        int total = bidi.total();
        for (int step = 1; step <= total; ++step) {
            int r = ascending ? step : total + 1 - step;
            int owner = bidi.slot_owner(r);
            if (owner < 0) {
                int j = -owner;
                while (!stack.empty() && stack.back() > j) stack.pop_back();
                tree.attach(j, stack.empty() ? 0 : stack.back());
                stack.push_back(j);
            } else if (owner > 0 && !stack.empty()) {
                int i = owner, bound = i - 1 - g[i];
                if (bound < 1) continue;
                int j = tree.deepest_at_most(stack.back(), bound);
                if (!j) continue;
                int v = bidi.lcp_suffix_rev(i, j);
                if (v > t.arm[i]) {
                    t.arm[i] = v;
                    t.source[i] = j - v + 1;
                }
            }
        }
    };
    pass(true);
    pass(false);
    return t;
}

std::vector<int> l_array(const Word& w) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    TextIndex idx(w);
    // best lcp with an earlier suffix comes from the nearest earlier suffixes in rank order
    std::vector<int> prev(n + 1, 0), next(n + 1, 0), st;
    for (int r = 1; r <= n; ++r) {
        while (!st.empty() && idx.sa(st.back()) > idx.sa(r)) st.pop_back();
        prev[r] = st.empty() ? 0 : idx.sa(st.back());
        st.push_back(r);
    }
    st.clear();
    for (int r = n; r >= 1; --r) {
        while (!st.empty() && idx.sa(st.back()) > idx.sa(r)) st.pop_back();
        next[r] = st.empty() ? 0 : idx.sa(st.back());
        st.push_back(r);
    }
    std::vector<int> L(n + 1, 0);
    for (int i = 2; i <= n; ++i) {
        int r = idx.rank(i), m = 0;
        for (int j : {prev[r], next[r]})
            if (j) m = std::max(m, idx.lcp(j, i));
        L[i] = m ? idx.min_start_sharing(i, m) : 1;
    }
    return L;
}

GapTable lpf_func(const Word& w, const std::vector<int>& g) {
    check_gaps(w, g);
    int n = len(w);
    TextIndex idx(w);
    auto L = l_array(w);
    // Along i, L[i], L[L[i]], ... positions drop and lcp with i is the running
    // min of lam over the nodes passed. The arm from s is min(lcp, T-s) with
    // T = i-g(i); s+lcp strictly decreases, so the optimum sits where it
    // first drops to T or just before.
    std::vector<int> lam(n + 1, 0);
    for (int x = 2; x <= n; ++x) lam[x] = idx.lcp(L[x], x);
    int levels = std::bit_width(static_cast<unsigned>(n)) + 1;
    std::vector<std::vector<int>> up(levels, std::vector<int>(n + 1, 0)), low(levels, std::vector<int>(n + 1, kInf));
    for (int x = 1; x <= n; ++x) {
        up[0][x] = L[x];
        low[0][x] = lam[x];
    }
    for (int b = 1; b < levels; ++b)
        for (int x = 1; x <= n; ++x) {
            int mid = up[b - 1][x];
            up[b][x] = mid ? up[b - 1][mid] : 0;
            low[b][x] = mid ? std::min(low[b - 1][x], low[b - 1][mid]) : low[b - 1][x];
        }
    GapTable t{std::vector<int>(n + 2, 0), std::vector<int>(n + 2, 0)};
    for (int i = 2; i <= n; ++i) {
        int T = i - g[i];
        if (T < 2) continue;
        // deepest ancestor with id <= T-1, tracking the lcp it carries
        int x = i, m = kInf;
        for (int b = levels - 1; b >= 0; --b)
            if (up[b][x] > T - 1) {
                m = std::min(m, low[b][x]);
                x = up[b][x];
            }
        int a = up[0][x];
        if (!a) continue;
        m = std::min(m, lam[x]);
        auto offer = [&](int s, int l) {
            int v = std::min(l, T - s);
            if (v > t.arm[i]) {
                t.arm[i] = v;
                t.source[i] = s;
            }
        };
        offer(a, m);
        if (a + m <= T) continue;
        // climb while s + lcp(s) > T
        x = a;
        for (int b = levels - 1; b >= 0; --b) {
            int y = up[b][x];
            if (!y) continue;
            int my = std::min(m, low[b][x]);
            if (y + my > T) {
                x = y;
                m = my;
            }
        }
        offer(x, m);
        if (int y = up[0][x]) offer(y, std::min(m, lam[x]));
    }
    return t;
}

std::vector<LongArmed> maximal_long_armed(const Word& w, ArmKind kind, int cap) {
    int n = len(w);
    if (n > cap) throw BudgetExceeded("word exceeds the quadratic scan cap");
    std::vector<LongArmed> out;
    if (n == 0) return out;
    if (kind == ArmKind::palindrome) {
        BidiIndex bidi(w);
        // inner ends a < b that cannot move inwards; arms grow outwards
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                if (w[a - 1] != w[b - 1]) continue;
                if (b - a - 1 >= 2 && w[a] == w[b - 2]) continue;
                int l = bidi.lcp_suffix_rev(b, a);
                if (b - a - 1 <= l) out.push_back({a - l + 1, l, b});
            }
    } else {
        // maximal stretches of w[x] = w[x+d] shorter than d
        for (int d = 1; d < n; ++d)
            for (int x = 1; x + d <= n;) {
                if (w[x - 1] != w[x + d - 1]) {
                    ++x;
                    continue;
                }
                int s = x;
                while (x + d <= n && w[x - 1] == w[x + d - 1]) ++x;
                int l = x - s;
                if (l < d && d - l <= l) out.push_back({s, l, s + d});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> lpal_lrep(const Word& w, ArmKind kind) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    const int divisor = kind == ArmKind::palindrome ? 3 : 2;
    std::vector<WeightedInterval> iv;
    for (auto [i, l, j] : maximal_long_armed(w, kind)) {
        int gap = j - i - l;
        int r = (l - gap) / divisor;
        iv.push_back({j, std::min(j + r + 1, n + 1), j + l - 1});
    }
    if (kind == ArmKind::repeat) {
        // A stretch w[x] = w[x+d] of length >= d is a run of period p | d and
        // yields no maximal gapped repeat, yet right of it the clipped arms
        // w[b-2d+2..b-d] / w[b-d+2..b] (gap 1) still form long-armed repeats
        // that no square centred there accounts for.
        for (const auto& r : compute_runs(w))
            for (int d = r.p; 2 * d <= r.length(); d += r.p) {
                if (d < 2) continue;
                int j = r.j - d + 2, l = d - 1;
                iv.push_back({j, std::min(j + (l - 1) / 2 + 1, n + 1), r.j});
            }
    }
    auto H = cover_extremum(iv, n, Extremum::max);
    std::vector<int> out(n + 2, 0);
    for (int x = 1; x <= n; ++x) out[x] = H[x] ? H[x] - x + 1 : 0;
    if (kind == ArmKind::repeat) {
        auto sc = compute_square_tables(w).sc;
        for (int x = 1; x <= n; ++x) out[x] = std::max(out[x], sc[x]);
    }
    return out;
}

}  // namespace sqdup
