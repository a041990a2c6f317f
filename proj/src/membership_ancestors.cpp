#include "sqdup/membership_ancestors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sqdup/core_index.hpp"
#include "sqdup/interval_engine.hpp"

namespace sqdup {

FlagArrays sd_pd_flags(const PrimSquareLists& sq) {
    int n = sq.n();
    FlagArrays f;
    f.S.assign(n + 2, 0);
    f.P.assign(n + 2, 0);
    if (n == 0) return f;
    f.S[n] = 1;
    for (int i = n; i >= 1; --i)
        if (f.S[i])
            for (int p : sq.ending_at(i)) f.S[i - p] = 1;
    f.P[1] = 1;
    for (int j = 1; j <= n; ++j)
        if (f.P[j])
            for (int p : sq.starting_at(j)) f.P[j + p] = 1;
    return f;
}

FlagArrays sd_pd_flags(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("bound must be positive");
    return sd_pd_flags(PrimSquareLists(compute_runs(w), len(w), std::min(k, len(w))));
}

namespace {

// Breadth-first search over factors shorter than k, using primitively rooted
// duplications only (enough for reachability). A node of length >= k counts as
// reaching w when both flags hold.
bool short_reach(int n, int k, const PrimSquareLists& sq, const FlagArrays& f, const std::vector<Factor>& seeds) {
    const int width = 2 * k;
    std::vector<char> seen(static_cast<std::size_t>(n + 1) * width, 0);
    std::deque<Factor> q;
    auto visit = [&](int i, int j) {
        char& s = seen[static_cast<std::size_t>(i) * width + (j - i + 1)];
        if (!s) {
            s = 1;
            q.push_back({i, j});
        }
    };
    for (auto s : seeds) visit(s.i, s.j);
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        int L = j - i + 1;
        if (i == 1 && j == n) return true;
        if (L >= k) {
            if (f.P[i] && f.S[j]) return true;
            continue;
        }
        if (j < n)
            for (int p : sq.centred_at(j + 1)) {
                if (p > L || j + p > n) break;
                visit(i, j + p);
            }
        for (int p : sq.centred_at(i)) {
            if (p > L) break;
            visit(i - p, j);
        }
    }
    return false;
}

int clamp_bound(int k, int n) {
    if (k < 1) throw std::invalid_argument("bound must be positive");
    return std::min(k, n);
}

}  // namespace

bool psdk_membership(const Word& w, const Word& x, int k) {
    int n = len(w), m = len(x);
    if (m == 0 || m > n) return false;
    auto occ = occurrences(x, w);
    if (occ.empty()) return false;
    k = clamp_bound(k, n);
    PrimSquareLists sq(compute_runs(w), n, k);
    auto f = sd_pd_flags(sq);
    if (m >= k) {
        for (int i : occ)
            if (f.P[i] && f.S[i + m - 1]) return true;
        return false;
    }
    std::vector<Factor> seeds;
    for (int i : occ) seeds.push_back({i, i + m - 1});
    return short_reach(n, k, sq, f, seeds);
}

bool psdk_language_membership(const Word& w, int k, const std::function<bool(const Word&)>& member) {
    int n = len(w);
    if (n == 0) return false;
    k = clamp_bound(k, n);
    PrimSquareLists sq(compute_runs(w), n, k);
    auto f = sd_pd_flags(sq);
    std::vector<Factor> seeds;
    bool hit = false;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (!member(sub(w, i, j))) continue;
            if (j - i + 1 >= k) hit = hit || (f.P[i] && f.S[j]);
            else seeds.push_back({i, j});
        }
    return hit || short_reach(n, k, sq, f, seeds);
}

std::vector<char> psd_ancestor_matrix(const Word& w, std::optional<int> k) {
    int n = len(w);
    std::vector<char> anc(static_cast<std::size_t>(n) * n, 0);
    if (n == 0) return anc;
    int bound = k ? clamp_bound(*k, n) : n;
    PrimSquareLists sq(compute_runs(w), n, bound);
    auto at = [&](int i, int j) -> char& { return anc[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
    at(1, n) = 1;
    for (int L = n - 1; L >= 1; --L)
        for (int i = 1; i + L - 1 <= n; ++i) {
            int j = i + L - 1;
            bool ok = false;
            if (j < n)
                for (int p : sq.centred_at(j + 1)) {
                    if (p > L || j + p > n) break;
                    if (at(i, j + p)) { ok = true; break; }
                }
            if (!ok)
                for (int p : sq.centred_at(i)) {
                    if (p > L) break;
                    if (at(i - p, j)) { ok = true; break; }
                }
            at(i, j) = ok;
        }
    return anc;
}

bool psd_membership(const Word& w, const Word& x) {
    int n = len(w), m = len(x);
    if (m == 0 || m > n) return false;
    auto occ = occurrences(x, w);
    if (occ.empty()) return false;
    auto anc = psd_ancestor_matrix(w, std::nullopt);
    for (int i : occ)
        if (anc[static_cast<std::size_t>(i - 1) * n + (i + m - 2)]) return true;
    return false;
}

int ssc_min_prefix(const Word& w) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    // right roots of squares inside run (a, b, p) cover exactly [a+p, b];
    // the answer is the last position not covered, or 1
    auto runs = compute_runs(w);
    std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) { return x.j > y.j; });
    int ell = n;
    int low = n + 1;  // least a+p over runs with b >= ell seen so far
    std::size_t next = 0;
    while (true) {
        while (next < runs.size() && runs[next].j >= ell) {
            low = std::min(low, runs[next].i + runs[next].p);
            ++next;
        }
        if (low <= ell) ell = low - 1;
        else break;
    }
    return std::max(ell, 1);
}

AncestorProfile pssc_ancestor_profile(const SquareTables& t) {
    int n = t.n;
    AncestorProfile prof;
    prof.n = n;
    prof.j.assign(n + 2, n + 1);
    if (n == 0) return prof;
    RangeMin<int> mle(t.max_left_end);
    // (i, j) is an ancestor iff suffix completions from end j cross every q <= target,
    // which holds iff MaxLeftEnd[q] >= i on (j, target]
    auto least_end = [&](int i, int target) {
        auto q = mle.last_below(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(target), i);
        return q == RangeMin<int>::npos ? i : static_cast<int>(q);
    };
    prof.j[1] = least_end(1, n);
    for (int i = 2; i <= n; ++i) {
        if (prof.j[i - 1] > n) break;
        int target = std::max(prof.j[i - 1], t.min_right_end[i - 1]);
        if (target > n) break;
        prof.j[i] = least_end(i, target);
    }
    prof.shortest = {1, prof.j[1]};
    for (int i = 1; i <= n && prof.j[i] <= n; ++i) {
        prof.count += n - prof.j[i] + 1;
        if (prof.j[i] - i < prof.shortest.j - prof.shortest.i) prof.shortest = {i, prof.j[i]};
    }
    return prof;
}

AncestorProfile pssc_ancestor_profile(const Word& w) { return pssc_ancestor_profile(compute_square_tables(w)); }

bool pssc_membership(const Word& w, const Word& x) {
    int m = len(x);
    if (m == 0 || m > len(w)) return false;
    auto occ = occurrences(x, w);
    if (occ.empty()) return false;
    auto prof = pssc_ancestor_profile(w);
    for (int i : occ)
        if (prof.j[i] <= i + m - 1) return true;
    return false;
}

BoundedAncestors bpsd_ancestors(const Word& w, int k, AncestorQuery what) {
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    k = clamp_bound(k, n);
    auto tables = compute_square_tables(w);
    PrimSquareLists sq(tables.runs, n, k);
    auto f = sd_pd_flags(sq);
    BoundedAncestors out;

    auto long_ok = [&](int i, int j) { return j - i + 1 >= k && f.P[i] && f.S[j]; };
    // short[(i-1)*k + L] for L < k
    std::vector<char> shrt(static_cast<std::size_t>(n) * k + 1, 0);
    auto sidx = [&](int i, int L) { return static_cast<std::size_t>(i - 1) * k + L; };
    auto good = [&](int i, int j) {
        if (i == 1 && j == n) return true;
        int L = j - i + 1;
        return L >= k ? long_ok(i, j) : static_cast<bool>(shrt[sidx(i, L)]);
    };
    std::int64_t short_count = 0;
    for (int L = std::min(k - 1, n); L >= 1; --L)
        for (int i = 1; i + L - 1 <= n; ++i) {
            int j = i + L - 1;
            bool ok = i == 1 && j == n;
            if (!ok && j < n)
                for (int p : sq.centred_at(j + 1)) {
                    if (p > L || j + p > n) break;
                    if (good(i, j + p)) { ok = true; break; }
                }
            if (!ok)
                for (int p : sq.centred_at(i)) {
                    if (p > L) break;
                    if (good(i - p, j)) { ok = true; break; }
                }
            shrt[sidx(i, L)] = ok;
            short_count += ok;
        }

    // counts of P over prefixes and the last P position at or before each index
    std::vector<std::int64_t> pcount(n + 1, 0);
    std::vector<int> last_p(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        pcount[i] = pcount[i - 1] + f.P[i];
        last_p[i] = f.P[i] ? i : last_p[i - 1];
    }
    out.count = short_count;
    for (int j = k; j <= n; ++j)
        if (f.S[j]) out.count += pcount[j - k + 1];

    if (what == AncestorQuery::all) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (good(i, j)) out.all.push_back({i, j});
    }

    // shortest: short ones win whenever present
    out.shortest = {1, n};
    bool found = false;
    for (int L = 1; L < k && !found; ++L)
        for (int i = 1; i + L - 1 <= n; ++i)
            if (shrt[sidx(i, L)]) {
                out.shortest = {i, i + L - 1};
                found = true;
                break;
            }
    if (!found)
        for (int j = k; j <= n; ++j)
            if (f.S[j] && last_p[j - k + 1]) {
                Factor c{last_p[j - k + 1], j};
                if (c.length() < out.shortest.length() || (c.length() == out.shortest.length() && c.i < out.shortest.i))
                    out.shortest = c;
            }

    if (what == AncestorQuery::longest_primitive) {
        auto lk = bounded_left(tables, k);
        auto rk = bounded_right(tables, k);
        std::optional<Factor> best;
        auto offer = [&](Factor c) {
            if (!best || c.length() > best->length() || (c.length() == best->length() && c.i < best->i)) best = c;
        };
        for (int L = 1; L < k; ++L)
            for (int i = 1; i + L - 1 <= n; ++i)
                if (shrt[sidx(i, L)] && rk[i] > i + L - 1 && lk[i + L - 1] < i) offer({i, i + L - 1});
        // zero at j once S[j] holds and the shortest bounded square ending at j starts before i
        SegTree zeros(std::vector<std::int64_t>(n, 1));
        std::vector<std::vector<int>> wake(n + 2);
        for (int j = 1; j <= n; ++j)
            if (f.S[j]) wake[lk[j] + 1].push_back(j);
        for (int i = 1; i <= n; ++i) {
            for (int j : wake[i]) zeros.add(j, j, -1);
            int lo = i + k - 1, hi = std::min(n, rk[i] - 1);
            if (!f.P[i] || lo > hi) continue;
            int j = zeros.rightmost_zero(lo, hi);
            if (j) offer({i, j});
        }
        out.longest_primitive = best;
    }
    return out;
}

Factor primitive_root(const Word& w, const OpKind& op) {
    if (op.completion()) throw std::invalid_argument("primitive_root takes a duplication operation");
    int n = len(w);
    if (n == 0) throw std::invalid_argument("empty input");
    auto t = compute_square_tables(w);
    auto lft = op.k ? bounded_left(t, *op.k) : t.left;
    auto rgt = op.k ? bounded_right(t, *op.k) : t.right;
    int i = 1, j = n;
    if (op.suffix_side())
        while (lft[j] >= i) j -= (j - lft[j] + 1) / 2;
    if (op.prefix_side())
        while (rgt[i] <= j) i += (rgt[i] - i + 1) / 2;
    return {i, j};
}

bool is_primitive_factor(const SquareTables& t, int i, int j, const OpKind& op) {
    if (i < 1 || j > t.n || i > j) throw std::out_of_range("factor out of range");
    int k = op.bound_or(t.n);
    bool starts = t.right[i] <= j && (t.right[i] - i + 1) / 2 <= k;
    bool ends = t.left[j] >= i && (j - t.left[j] + 1) / 2 <= k;
    bool pre = op.prefix_side(), suf = op.suffix_side();
    return !(pre && starts) && !(suf && ends);
}

namespace {

std::optional<Word> common_psd(const Word& x, const Word& y, std::optional<int> k, CommonQuery what) {
    int nx = len(x), ny = len(y);
    auto ax = psd_ancestor_matrix(x, k);
    auto ay = psd_ancestor_matrix(y, k);
    // trie over the factors of x; a node is marked when its word is an ancestor of x
    std::unordered_map<std::uint64_t, int> child;
    std::vector<char> marked{0};
    auto edge = [](int node, Symbol c) { return (static_cast<std::uint64_t>(node) << 32) | c; };
    for (int i = 1; i <= nx; ++i) {
        int node = 0;
        for (int j = i; j <= nx; ++j) {
            auto [it, fresh] = child.try_emplace(edge(node, x[j - 1]), static_cast<int>(marked.size()));
            if (fresh) marked.push_back(0);
            node = it->second;
            if (ax[static_cast<std::size_t>(i - 1) * nx + (j - 1)]) marked[node] = 1;
        }
    }
    std::optional<Factor> best;
    for (int i = 1; i <= ny; ++i) {
        int node = 0;
        for (int j = i; j <= ny; ++j) {
            auto it = child.find(edge(node, y[j - 1]));
            if (it == child.end()) break;
            node = it->second;
            if (!marked[node] || !ay[static_cast<std::size_t>(i - 1) * ny + (j - 1)]) continue;
            Factor c{i, j};
            if (what == CommonQuery::any) return sub(y, i, j);
            bool better = !best || (what == CommonQuery::shortest ? c.length() < best->length() : c.length() > best->length());
            if (better) best = c;
        }
    }
    if (!best) return std::nullopt;
    return sub(y, best->i, best->j);
}

std::optional<Word> common_pssc(const Word& x, const Word& y, CommonQuery what) {
    int nx = len(x), ny = len(y);
    auto px = pssc_ancestor_profile(x), py = pssc_ancestor_profile(y);
    Symbol sep = static_cast<Symbol>(std::max(alphabet_size(x), alphabet_size(y)));
    Word z = x;
    z.push_back(sep);
    z.insert(z.end(), y.begin(), y.end());
    TextIndex idx(z);
    struct Item {
        int need;
        int pos;
        int side;
    };
    std::vector<Item> items;
    for (int i = 1; i <= nx && px.j[i] <= nx; ++i) items.push_back({px.j[i] - i + 1, i, 0});
    for (int i = 1; i <= ny && py.j[i] <= ny; ++i) items.push_back({py.j[i] - i + 1, nx + 1 + i, 1});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.need < b.need; });
    // a pair shares an ancestor iff their common prefix reaches both needs; each pair is
    // examined when its larger-need member arrives
    std::set<int> ranks[2];
    int best_len = 0, best_pos = 0;
    for (const auto& it : items) {
        int r = idx.rank(it.pos);
        ranks[it.side].insert(r);
        const auto& other = ranks[1 - it.side];
        int reach = 0;
        auto succ = other.lower_bound(r);
        if (succ != other.end()) reach = std::max(reach, idx.lcp(it.pos, idx.sa(*succ)));
        if (succ != other.begin()) reach = std::max(reach, idx.lcp(it.pos, idx.sa(*std::prev(succ))));
        if (reach < it.need) continue;
        if (what != CommonQuery::longest) return sub(z, it.pos, it.pos + it.need - 1);
        if (reach > best_len) {
            best_len = reach;
            best_pos = it.pos;
        }
    }
    if (!best_len) return std::nullopt;
    return sub(z, best_pos, best_pos + best_len - 1);
}

}  // namespace

std::optional<Word> common_ancestor(const Word& x, const Word& y, const OpKind& op, CommonQuery what) {
    if (x.empty() || y.empty()) return std::nullopt;
    if (op.family == Family::PSD) return common_psd(x, y, op.k, what);
    if (op.family == Family::PSSC) return common_pssc(x, y, what);
    throw std::invalid_argument("common ancestors are defined for PSD, PSD_k and PSSC");
}

}  // namespace sqdup
