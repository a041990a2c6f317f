#include "sqdup/distances.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sqdup/core_index.hpp"
#include "sqdup/ops_kernel.hpp"

namespace sqdup {

namespace {

std::vector<int> sdd_reference(const Word& w, int k) {
    int n = len(w);
    Lce lce(w);
    std::vector<int> d(n + 2, kInf);
    d[n] = 0;
    for (int i = n - 1; i >= 1; --i)
        for (int s = 1; s <= std::min(k, i) && i + s <= n; ++s)
            if (d[i + s] != kInf && lce.ext(i - s + 1, i + 1) >= s) d[i] = std::min(d[i], d[i + s] + 1);
    return d;
}

// From w[1..i] one SD_k step reaches i + m*p whenever a run (a, b, p) holds the
// square w[i-mp+1..i+mp], i.e. mp <= min(k, i-a+1) and i+mp <= b. Per run and
// residue class the admissible targets form a window sliding towards smaller
// j as i decreases, so a monotone deque yields the best target.
std::vector<int> sdd_runs(const Word& w, int k) {
    int n = len(w);
    auto runs = compute_runs(w);
    std::vector<int> d(n + 2, kInf);
    d[n] = 0;

    struct Window {
        int head = 0, tail = 0;  // live slots [head, tail) in the pool
        int base = 0;
    };
    std::vector<int> run_of;
    std::vector<std::size_t> window_base;  // first window per run
    std::vector<std::vector<int>> sources(n + 2);
    std::size_t windows = 0, slots = 0;
    std::vector<std::size_t> slot_base;
    for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
        const auto& rn = runs[r];
        window_base.push_back(windows);
        slot_base.push_back(slots);
        if (rn.p > k) continue;
        windows += rn.p;
        slots += rn.length() + rn.p;
        for (int i = rn.i + rn.p - 1; i <= rn.j - rn.p; ++i) sources[i].push_back(r);
    }
    std::vector<Window> win(windows);
    std::vector<std::pair<int, int>> pool(slots);  // (j, distance)
    for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
        const auto& rn = runs[r];
        if (rn.p > k) continue;
        // residue class c gets pool slots [base, base + length/p + 2)
        std::size_t at = slot_base[r];
        for (int c = 0; c < rn.p; ++c) {
            auto& wd = win[window_base[r] + c];
            wd.base = static_cast<int>(at);
            wd.head = wd.tail = wd.base;
            at += rn.length() / rn.p + 1;
        }
    }
    for (int i = n - 1; i >= 1; --i) {
        for (int r : sources[i]) {
            const auto& rn = runs[r];
            int p = rn.p;
            auto& wd = win[window_base[r] + (i - rn.i) % p];
            int j = i + p;
            if (d[j] != kInf) {
                while (wd.tail > wd.head && pool[wd.tail - 1].second >= d[j]) --wd.tail;
                pool[wd.tail++] = {j, d[j]};
            }
            int reach = std::min({rn.j, i + k, 2 * i - rn.i + 1});
            while (wd.tail > wd.head && pool[wd.head].first > reach) ++wd.head;
            if (wd.tail > wd.head) d[i] = std::min(d[i], pool[wd.head].second + 1);
        }
    }
    return d;
}

std::vector<int> mirror(const std::vector<int>& t, int n) {
    std::vector<int> out(n + 2, kInf);
    for (int x = 1; x <= n; ++x) out[x] = t[n + 1 - x];
    return out;
}

}  // namespace

std::vector<int> dup_distance_table(const Word& w, int k, DupSide side, bool reference) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    if (k < 1) throw std::invalid_argument("bound must be positive");
    if (n < k) throw std::invalid_argument("bound exceeds word length");
    if (side == DupSide::suffix) return reference ? sdd_reference(w, k) : sdd_runs(w, k);
    Word r = reversed(w);
    return mirror(reference ? sdd_reference(r, k) : sdd_runs(r, k), n);
}

int bpsd_distance(const Word& x, const Word& w, int k) {
    int n = len(w), m = len(x);
    if (k < 1) throw std::invalid_argument("bound must be positive");
    if (m == 0 || m > n) return kInf;
    auto occ = occurrences(x, w);
    if (occ.empty()) return kInf;
    int kk = std::min(k, n);
    auto sdd = dup_distance_table(w, kk, DupSide::suffix);
    auto pdd = dup_distance_table(w, kk, DupSide::prefix);
    auto combine = [&](int i, int j, int base) {
        if (sdd[j] == kInf || pdd[i] == kInf) return kInf;
        return base + sdd[j] + pdd[i];
    };
    int best = kInf;
    if (m >= k) {
        for (int i : occ) best = std::min(best, combine(i, i + m - 1, 0));
        return best;
    }
    // layered search over factors shorter than k; every square root counts as one step
    Lce lce(w);
    auto runs = compute_runs(lce);
    PrimSquareLists sq(runs, n, kk);
    const int width = std::min(2 * k, n) + 1;
    std::vector<int> dist(static_cast<std::size_t>(n + 1) * width, -1);
    std::deque<Factor> q;
    for (int i : occ) {
        dist[static_cast<std::size_t>(i) * width + m] = 0;
        q.push_back({i, i + m - 1});
    }
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        int L = j - i + 1;
        int d = dist[static_cast<std::size_t>(i) * width + L];
        if (i == 1 && j == n) {
            best = std::min(best, d);
            continue;
        }
        if (L >= k) {
            best = std::min(best, combine(i, j, d));
            continue;
        }
        auto visit = [&](int a, int b) {
            int& slot = dist[static_cast<std::size_t>(a) * width + (b - a + 1)];
            if (slot < 0) {
                slot = d + 1;
                q.push_back({a, b});
            }
        };
        int lim = std::min(L, k);
        if (j < n)
            for (int p : sq.centred_at(j + 1))
                for (int s = p; s <= lim && j + s <= n && lce.is_square(j + 1 - s, s); s += p) visit(i, j + s);
        for (int p : sq.centred_at(i))
            for (int s = p; s <= lim && i - s >= 1 && lce.is_square(i - s, s); s += p) visit(i - s, j);
    }
    return best;
}

std::vector<int> sscd_table(const Word& w) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    auto t = compute_square_tables(w);
    // w[1..m] completes to w[1..m'] iff m' - MaxSqEnd[m']/2 <= m < m'
    std::vector<int> reach_back(n + 2, n + 1);
    for (int m = n; m >= 1; --m) reach_back[m] = std::min(reach_back[m + 1], m - t.max_sq_end[m] / 2);
    std::vector<int> out(n + 2, kInf);
    int limit = n, d = 0;
    out[n] = 0;
    while (true) {
        int next = std::min(limit, reach_back[limit]);
        if (next >= limit) break;
        ++d;
        for (int m = next; m < limit; ++m) out[m] = d;
        limit = next;
    }
    return out;
}

std::vector<int> pscd_table(const Word& w) { return mirror(sscd_table(reversed(w)), len(w)); }

CompletionReach::CompletionReach(const Word& w) : n_(len(w)) {
    runs_ = compute_runs(w);
    for (const auto& r : runs_) mirrored_.push_back({n_ + 1 - r.j, n_ + 1 - r.i, r.p});
    auto index = [&](const std::vector<Run>& rs, std::vector<int>& off, std::vector<int>& ids) {
        off.assign(n_ + 2, 0);
        for (const auto& r : rs)
            for (int x = r.i; x <= r.j; ++x) ++off[x];
        int acc = 0;
        for (int x = 0; x <= n_ + 1; ++x) {
            int c = off[x];
            off[x] = acc;
            acc += c;
        }
        off.push_back(acc);
        ids.resize(acc);
        auto fill = off;
        for (int id = 0; id < static_cast<int>(rs.size()); ++id)
            for (int x = rs[id].i; x <= rs[id].j; ++x) ids[fill[x]++] = id;
    };
    index(runs_, off_, ids_);
    index(mirrored_, moff_, mids_);
}

int CompletionReach::min_start(const std::vector<Run>& runs, const std::vector<int>& off, const std::vector<int>& ids, int i, int j) {
    // squares w[s..s+2l-1] with s <= i-1 <= s+l-1 and end <= j
    if (i <= 1) return 0;
    int best = 0;
    for (int t = off[i - 1]; t < off[i]; ++t) {
        const Run& r = runs[ids[t]];
        int a = r.i, p = r.p, e = std::min(j, r.j);
        int m1 = std::min((e - i + 1) / p, (i - a) / p);
        int s = m1 >= 1 ? i - m1 * p : 0;
        int mstar = (i - a) / p + 1;
        if (2 * mstar * p <= e - a + 1) s = a;
        if (s && (!best || s < best)) best = s;
    }
    return best;
}

int CompletionReach::min_start(int i, int j) const { return min_start(runs_, off_, ids_, i, j); }

int CompletionReach::max_end(int i, int j) const {
    int s = min_start(mirrored_, moff_, mids_, n_ + 1 - j, n_ + 1 - i);
    return s ? n_ + 1 - s : 0;
}

namespace {

int pssc_bfs(const Word& w, const std::vector<Factor>& sources, int cap) {
    int n = len(w);
    if (n > cap) throw BudgetExceeded("word exceeds the quadratic distance cap");
    CompletionReach reach(w);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    auto id = [&](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };
    std::vector<Factor> layer, next;
    for (auto f : sources)
        if (!seen[id(f.i, f.j)]) {
            seen[id(f.i, f.j)] = true;
            layer.push_back(f);
        }
    for (int d = 0; !layer.empty(); ++d) {
        next.clear();
        for (auto [i, j] : layer) {
            if (i == 1 && j == n) return d;
            // the widest completion on each side dominates all narrower ones
            int s = reach.min_start(i, j);
            if (s && !seen[id(s, j)]) {
                seen[id(s, j)] = true;
                next.push_back({s, j});
            }
            int e = reach.max_end(i, j);
            if (e && !seen[id(i, e)]) {
                seen[id(i, e)] = true;
                next.push_back({i, e});
            }
        }
        std::swap(layer, next);
    }
    return kInf;
}

}  // namespace

int pssc_distance(const Word& x, const Word& w, int cap) {
    int m = len(x);
    if (m == 0 || m > len(w)) return kInf;
    std::vector<Factor> src;
    for (int i : occurrences(x, w)) src.push_back({i, i + m - 1});
    if (src.empty()) return kInf;
    return pssc_bfs(w, src, cap);
}

int pssc_distance_from(const Word& w, int i, int j, int cap) {
    if (i < 1 || j > len(w) || i > j) throw std::out_of_range("factor out of range");
    return pssc_bfs(w, {{i, j}}, cap);
}

}  // namespace sqdup
