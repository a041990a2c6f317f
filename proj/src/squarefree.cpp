#include "sqdup/squarefree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sqdup/interval_engine.hpp"
#include "sqdup/membership_ancestors.hpp"

namespace sqdup {

PsfIndex::PsfIndex(const Word& w) : PsfIndex(compute_square_tables(w)) {}

PsfIndex::PsfIndex(SquareTables t) : t_(std::move(t)), left_min_(t_.left) {}

bool PsfIndex::query(int i, int j, PsfKind kind) const {
    if (i < 1 || j > t_.n || i > j) throw std::out_of_range("factor out of range");
    bool p = t_.right[i] > j, s = t_.left[j] < i;
    switch (kind) {
        case PsfKind::p: return p;
        case PsfKind::s: return s;
        case PsfKind::ps: return p && s;
    }
    return false;
}

void enumerate_pssf(const PsfIndex& idx, PsfKind kind, const std::function<void(int, int)>& emit) {
    const auto& t = idx.tables();
    int n = t.n;
    std::vector<std::pair<int, int>> stack;
    for (int i = 1; i <= n; ++i) {
        int hi = kind == PsfKind::s ? n : t.right[i] - 1;
        if (kind == PsfKind::p) {
            for (int j = i; j <= hi; ++j) emit(i, j);
            continue;
        }
        // in-order walk of the Cartesian tree of left[] restricted to values < i;
        // each visited node is an output, so the cost is linear in the output
        int l = i, r = hi;
        stack.clear();
        while (true) {
            while (l <= r) {
                auto m = static_cast<int>(idx.left_min().argmin(l, r));
                if (t.left[m] >= i) break;
                stack.push_back({m, r});
                r = m - 1;
            }
            if (stack.empty()) break;
            auto [m, rr] = stack.back();
            stack.pop_back();
            emit(i, m);
            l = m + 1;
            r = rr;
        }
    }
}

std::vector<Factor> enumerate_pssf(const Word& w, PsfKind kind) {
    std::vector<Factor> out;
    if (w.empty()) return out;
    PsfIndex idx(w);
    enumerate_pssf(idx, kind, [&](int i, int j) { out.push_back({i, j}); });
    return out;
}

std::int64_t count_pssf(const Word& w) {
    int n = len(w);
    if (n == 0) return 0;
    auto t = compute_square_tables(w);
    // j joins the tree once i passes left[j]; then count joined j in [i, right[i]-1]
    std::vector<std::vector<int>> wake(n + 2);
    for (int j = 1; j <= n; ++j) wake[t.left[j] + 1].push_back(j);
    SegTree tree(n);
    std::int64_t total = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j : wake[i]) tree.add(j, j, 1);
        int hi = t.right[i] - 1;
        if (hi >= i) total += tree.sum(i, hi);
    }
    return total;
}

namespace {

// longest factor w[i..j] with lo[i] <= j <= right[i]-1 and left[j] < i
Factor longest_between(const SquareTables& t, const std::vector<int>& lo) {
    RangeMin<int> lm(t.left);
    Factor best{1, 0};
    for (int i = 1; i <= t.n; ++i) {
        int a = std::max(lo[i], i), b = t.right[i] - 1;
        if (a > b || b - i + 1 <= best.length()) continue;
        auto q = lm.last_below(a, b, i);
        if (q != RangeMin<int>::npos && static_cast<int>(q) - i + 1 > best.length()) best = {i, static_cast<int>(q)};
    }
    return best;
}

}  // namespace

Factor longest_pssf(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty input");
    auto t = compute_square_tables(w);
    return longest_between(t, std::vector<int>(t.n + 2, 1));
}

Factor longest_primitive_pssc_ancestor(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty input");
    auto t = compute_square_tables(w);
    auto prof = pssc_ancestor_profile(t);
    std::vector<int> lo(t.n + 2);
    for (int i = 1; i <= t.n; ++i) lo[i] = prof.j[i];  // n+1 when i starts no ancestor
    return longest_between(t, lo);
}

int Factorization::count(PartTag t) const { return static_cast<int>(std::count(tags.begin(), tags.end(), t)); }

std::optional<Factorization> factor_into_squares(const Word& w) {
    int n = len(w);
    if (n == 0) return Factorization{};
    auto runs = compute_runs(w);
    PrimSquareLists sq(runs, n, n);
    // nxt[i]: smallest end of a primitively rooted square at i whose remainder factors
    std::vector<int> nxt(n + 2, 0);
    std::vector<char> ok(n + 2, 0);
    ok[n + 1] = 1;
    for (int i = n; i >= 1; --i)
        for (int p : sq.starting_at(i))
            if (ok[i + 2 * p]) {
                ok[i] = 1;
                nxt[i] = i + 2 * p - 1;
                break;
            }
    if (!ok[1]) return std::nullopt;
    Factorization f;
    for (int i = 1; i <= n; i = nxt[i] + 1) {
        f.parts.push_back({i, nxt[i]});
        f.tags.push_back(PartTag::square);
    }
    return f;
}

Factorization max_square_factorization(const Word& w) {
    int n = len(w);
    Factorization f;
    if (n == 0) return f;
    auto t = compute_square_tables(w);
    // a square factor can always be trimmed to the shortest square at its start
    std::vector<int> best(n + 2, 0);
    for (int i = n; i >= 1; --i) {
        best[i] = best[i + 1];
        if (t.right[i] <= n) best[i] = std::max(best[i], best[t.right[i] + 1] + 1);
    }
    for (int i = 1; i <= n;) {
        if (t.right[i] <= n && best[i] == best[t.right[i] + 1] + 1) {
            f.parts.push_back({i, t.right[i]});
            f.tags.push_back(PartTag::square);
            i = t.right[i] + 1;
        } else {
            f.parts.push_back({i, i});
            f.tags.push_back(PartTag::plain);
            ++i;
        }
    }
    return f;
}

std::optional<Factorization> factor_into_runs(const Word& w) {
    int n = len(w);
    if (n == 0) return Factorization{};
    Lce lce(w);
    auto runs = compute_runs(lce);
    // A factor w[s..e] has period <= half its length iff some run of period p
    // holds it with e >= s+2p-1. Starting positions are reached left to right;
    // a run only needs its first reachable start, which covers the most ends.
    std::vector<std::vector<int>> opening(n + 2);
    for (int r = 0; r < static_cast<int>(runs.size()); ++r) opening[runs[r].i].push_back(r);
    std::vector<int> next_free(n + 3);
    std::iota(next_free.begin(), next_free.end(), 0);
    auto find = [&](int x) {
        int root = x;
        while (next_free[root] != root) root = next_free[root];
        while (next_free[x] != root) x = std::exchange(next_free[x], root);
        return root;
    };
    std::vector<int> from(n + 2, 0);  // from[e+1] = start of the factor ending at e
    std::vector<char> reached(n + 2, 0);
    reached[1] = 1;
    next_free[1] = 2;
    std::vector<int> pending;
    for (int s = 1; s <= n; ++s) {
        for (int r : opening[s]) pending.push_back(r);
        if (!reached[s]) continue;
        for (int r : pending) {
            const Run& rn = runs[r];
            if (rn.j - 2 * rn.p + 1 < s) continue;
            for (int x = find(s + 2 * rn.p); x <= rn.j + 1; x = find(x)) {
                reached[x] = 1;
                from[x] = s;
                next_free[x] = x + 1;
            }
        }
        pending.clear();
    }
    if (!reached[n + 1]) return std::nullopt;
    Factorization f;
    for (int x = n + 1; x > 1; x = from[x]) f.parts.push_back({from[x], x - 1});
    std::reverse(f.parts.begin(), f.parts.end());
    for (auto [s, e] : f.parts) {
        int L = e - s + 1;
        f.tags.push_back(L % 2 == 0 && lce.ext(s, s + L / 2) >= L / 2 ? PartTag::square : PartTag::run);
    }
    return f;
}

}  // namespace sqdup
