#include "sqdup/ops_kernel.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sqdup/core_index.hpp"

namespace sqdup {

OpKind parse_op(std::string_view name, std::optional<int> k) {
    std::string s(name);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    OpKind op;
    if (s == "pd") op.family = Family::PD;
    else if (s == "sd") op.family = Family::SD;
    else if (s == "psd") op.family = Family::PSD;
    else if (s == "psc") op.family = Family::PSC;
    else if (s == "ssc") op.family = Family::SSC;
    else if (s == "pssc") op.family = Family::PSSC;
    else throw std::invalid_argument("unknown operation: " + s);
    if (k) {
        if (op.completion()) throw std::invalid_argument("completion operations take no bound");
        if (*k < 1) throw std::invalid_argument("bound must be positive");
        op.k = k;
    }
    return op;
}

std::string op_name(const OpKind& op) {
    static const char* names[] = {"PD", "SD", "PSD", "PSC", "SSC", "PSSC"};
    std::string s = names[static_cast<int>(op.family)];
    if (op.k) s += "_" + std::to_string(*op.k);
    return s;
}

namespace {

bool same(const Word& x, int a, int b, int len) {
    return std::equal(x.begin() + a, x.begin() + a + len, x.begin() + b);
}

template <class Emit>
void each_successor(const OpKind& op, const Word& x, Emit&& emit) {
    int n = len(x);
    int bound = op.bound_or(n);
    if (op.family == Family::PD || op.family == Family::PSD)
        for (int l = 1; l <= std::min(n, bound); ++l) emit(Side::prefix, l, 0);
    if (op.family == Family::SD || op.family == Family::PSD)
        for (int l = 1; l <= std::min(n, bound); ++l) emit(Side::suffix, l, 0);
    if (op.family == Family::PSC || op.family == Family::PSSC)
        for (int g = 0; 2 * g < n; ++g)
            for (int m = 1; 2 * g + m <= n; ++m)
                if (same(x, 0, g + m, g)) emit(Side::prefix, m, g);
    if (op.family == Family::SSC || op.family == Family::PSSC)
        for (int g = 0; 2 * g < n; ++g)
            for (int m = 1; 2 * g + m <= n; ++m)
                if (same(x, n - g, n - 2 * g - m, g)) emit(Side::suffix, m, g);
}

Word grow(const Word& x, Side side, int block, int gap) {
    int n = len(x);
    Word y;
    y.reserve(n + block);
    if (side == Side::prefix) {
        y.insert(y.end(), x.begin() + gap, x.begin() + gap + block);
        y.insert(y.end(), x.begin(), x.end());
    } else {
        y = x;
        int from = n - gap - block;
        y.insert(y.end(), x.begin() + from, x.begin() + from + block);
    }
    return y;
}

}  // namespace

std::vector<Word> step(const OpKind& op, const Word& x) {
    std::vector<Word> out;
    each_successor(op, x, [&](Side s, int b, int g) { out.push_back(grow(x, s, b, g)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> closure_upto(const OpKind& op, const Word& x, int maxlen, std::size_t budget) {
    std::set<Word> seen;
    if (len(x) > maxlen) return {};
    std::deque<Word> queue{x};
    seen.insert(x);
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        if (len(cur) == maxlen) continue;
        for (auto& y : step(op, cur)) {
            if (len(y) > maxlen) continue;
            if (seen.insert(y).second) {
                if (seen.size() > budget) throw BudgetExceeded("closure budget exceeded");
                queue.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<Word> apply_step(const OpKind& op, const Word& x, const DerivationStep& s) {
    int n = len(x);
    if (s.block < 1 || s.gap < 0 || 2 * s.gap + s.block > n) return std::nullopt;
    if (!op.completion()) {
        if (s.gap != 0) return std::nullopt;
        if (op.k && s.block > *op.k) return std::nullopt;
        if (s.side == Side::prefix && !op.prefix_side()) return std::nullopt;
        if (s.side == Side::suffix && !op.suffix_side()) return std::nullopt;
        return grow(x, s.side, s.block, 0);
    }
    if (s.side == Side::prefix) {
        if (!op.prefix_side() || !same(x, 0, s.gap + s.block, s.gap)) return std::nullopt;
    } else {
        if (!op.suffix_side() || !same(x, n - s.gap, n - 2 * s.gap - s.block, s.gap)) return std::nullopt;
    }
    return grow(x, s.side, s.block, s.gap);
}

Replay verify_derivation(const OpKind& op, const Derivation& d) {
    Replay r;
    r.word = d.start;
    for (int t = 0; t < static_cast<int>(d.steps.size()); ++t) {
        auto next = apply_step(op, r.word, d.steps[t]);
        if (!next) {
            r.ok = false;
            r.failed_at = t;
            return r;
        }
        r.word = std::move(*next);
    }
    return r;
}

namespace {

// Factor graph on coordinates (i, j). Edges extend a factor in place inside w.
class FactorGraph {
public:
    FactorGraph(const OpKind& op, const Word& w) : op_(op), n_(len(w)), lce_(w) {
        if (static_cast<std::size_t>(n_) * n_ > kNodeBudget) throw BudgetExceeded("factor graph budget exceeded");
    }
    int n() const { return n_; }
    int id(int i, int j) const { return (i - 1) * n_ + (j - 1); }

    // square w[s..s+2l-1]
    bool square(int s, int l) const { return s >= 1 && lce_.is_square(s, l); }

    template <class F>
    void successors(int i, int j, F&& f) const {
        int L = j - i + 1;
        int bound = op_.bound_or(n_);
        if (!op_.completion()) {
            for (int d = 1; d <= std::min(L, bound); ++d) {
                if (op_.suffix_side() && j + d <= n_ && square(j - d + 1, d)) f(i, j + d);
                if (op_.prefix_side() && i - d >= 1 && square(i - d, d)) f(i - d, j);
            }
            return;
        }
        for (int m = 1; m <= n_; ++m) {
            if (op_.suffix_side() && j + m <= n_) {
                // root l >= m, square ends at j+m, starts at or after i
                for (int l = m; j + m - 2 * l + 1 >= i; ++l)
                    if (square(j + m - 2 * l + 1, l)) {
                        f(i, j + m);
                        break;
                    }
            }
            if (op_.prefix_side() && i - m >= 1) {
                for (int l = m; i - m + 2 * l - 1 <= j; ++l)
                    if (square(i - m, l)) {
                        f(i - m, j);
                        break;
                    }
            }
        }
    }

    template <class F>
    void predecessors(int i, int j, F&& f) const {
        int bound = op_.bound_or(n_);
        if (!op_.completion()) {
            for (int d = 1; 2 * d <= j - i + 1 && d <= bound; ++d) {
                if (op_.suffix_side() && square(j - 2 * d + 1, d)) f(i, j - d);
                if (op_.prefix_side() && square(i, d)) f(i + d, j);
            }
            return;
        }
        for (int m = 1; m < j - i + 1; ++m) {
            if (op_.suffix_side())
                for (int l = m; j - 2 * l + 1 >= i; ++l)
                    if (square(j - 2 * l + 1, l)) {
                        f(i, j - m);
                        break;
                    }
            if (op_.prefix_side())
                for (int l = m; i + 2 * l - 1 <= j; ++l)
                    if (square(i, l)) {
                        f(i + m, j);
                        break;
                    }
        }
    }

private:
    OpKind op_;
    int n_;
    Lce lce_;
};

int bfs_to_whole(const FactorGraph& g, const std::vector<Factor>& sources) {
    int n = g.n();
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    std::deque<Factor> q;
    for (auto f : sources)
        if (dist[g.id(f.i, f.j)] < 0) {
            dist[g.id(f.i, f.j)] = 0;
            q.push_back(f);
        }
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        int d = dist[g.id(i, j)];
        if (i == 1 && j == n) return d;
        g.successors(i, j, [&](int a, int b) {
            int& slot = dist[g.id(a, b)];
            if (slot < 0) {
                slot = d + 1;
                q.push_back({a, b});
            }
        });
    }
    return kInf;
}

}  // namespace

int oracle_distance(const OpKind& op, const Word& x, const Word& w) {
    int n = len(w), m = len(x);
    if (m == 0 || m > n) return kInf;
    FactorGraph g(op, w);
    std::vector<Factor> src;
    for (int i = 1; i + m - 1 <= n; ++i)
        if (std::equal(x.begin(), x.end(), w.begin() + (i - 1))) src.push_back({i, i + m - 1});
    if (src.empty()) return kInf;
    return bfs_to_whole(g, src);
}

int oracle_distance_from(const OpKind& op, const Word& w, int i, int j) {
    FactorGraph g(op, w);
    return bfs_to_whole(g, {{i, j}});
}

std::vector<Factor> oracle_ancestors(const OpKind& op, const Word& w, AncestorScope scope) {
    int n = len(w);
    if (n == 0) return {};
    FactorGraph g(op, w);
    std::vector<char> mark(static_cast<std::size_t>(n) * n, 0);
    std::deque<Factor> q{{1, n}};
    mark[g.id(1, n)] = 1;
    std::vector<Factor> found;
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        found.push_back({i, j});
        g.predecessors(i, j, [&](int a, int b) {
            char& m = mark[g.id(a, b)];
            if (!m) {
                m = 1;
                q.push_back({a, b});
            }
        });
    }
    if (scope == AncestorScope::by_content) return close_by_content(w, found);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Factor> close_by_content(const Word& w, const std::vector<Factor>& factors) {
    int n = len(w);
    std::vector<Factor> out;
    if (n == 0 || factors.empty()) return out;
    TextIndex idx(w);
    std::vector<std::vector<int>> starts(n + 1);  // by length
    for (auto f : factors) starts[f.length()].push_back(f.i);
    std::vector<int> cls(n + 1);
    std::vector<char> hit;
    for (int L = 1; L <= n; ++L) {
        if (starts[L].empty()) continue;
        // equal factors of length L occupy maximal rank ranges with adjacent lcp >= L
        int c = 0;
        for (int r = 1; r <= n; ++r) {
            if (r > 1 && idx.lcp_adjacent(r) < L) ++c;
            cls[r] = c;
        }
        hit.assign(c + 1, 0);
        for (int i : starts[L]) hit[cls[idx.rank(i)]] = 1;
        for (int i = 1; i + L - 1 <= n; ++i)
            if (hit[cls[idx.rank(i)]]) out.push_back({i, i + L - 1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sqdup
