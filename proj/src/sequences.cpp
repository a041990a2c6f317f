#include "sqdup/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqdup/core_index.hpp"
#include "sqdup/square_tables.hpp"

namespace sqdup {

Sequence parse_sequence(std::string_view name) {
    if (name == "fibonacci") return Sequence::fibonacci;
    if (name == "thue_morse" || name == "thue-morse") return Sequence::thue_morse;
    if (name == "period_doubling" || name == "period-doubling") return Sequence::period_doubling;
    if (name == "stewart") return Sequence::stewart;
    throw std::invalid_argument("unknown sequence: " + std::string(name));
}

std::string sequence_name(Sequence s) {
    switch (s) {
        case Sequence::fibonacci: return "fibonacci";
        case Sequence::thue_morse: return "thue_morse";
        case Sequence::period_doubling: return "period_doubling";
        case Sequence::stewart: return "stewart";
    }
    return "?";
}

namespace {

// iterate a two-letter morphism from 0
Word fixed_point(int n, Word img0, Word img1) {
    Word w{0};
    while (len(w) < n) {
        Word next;
        for (auto c : w) {
            const Word& img = c ? img1 : img0;
            next.insert(next.end(), img.begin(), img.end());
        }
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

}  // namespace

Word generate(Sequence s, int n) {
    if (n < 1) throw std::invalid_argument("length must be positive");
    switch (s) {
        case Sequence::thue_morse: return fixed_point(n, {0, 1}, {1, 0});
        case Sequence::fibonacci: return fixed_point(n, {0, 1}, {0});
        case Sequence::period_doubling: return fixed_point(n, {0, 1}, {0, 0});
        case Sequence::stewart: {
            Word w{0};
            while (len(w) < n) {
                Word star = w;
                star[w.size() / 2] ^= 1;
                Word next = w;
                next.insert(next.end(), w.begin(), w.end());
                next.insert(next.end(), star.begin(), star.end());
                w = std::move(next);
            }
            w.resize(n);
            return w;
        }
    }
    throw std::invalid_argument("unknown sequence");
}

namespace {

struct Edge {
    int from = 0;
    DerivationStep step{Side::suffix, 0, 0};
};

// Prefix graph over lengths 1..M of text; edges only lengthen, so one
// increasing sweep settles reachability. pred[m] is a reachable source.
class PrefixGraph {
public:
    PrefixGraph(const OpKind& op, const Word& text) : op_(op), n_(len(text)), lce_(text) {
        if (op.completion()) {
            if (op.suffix_side()) max_sq_end_ = compute_square_tables(lce_).max_sq_end;
            if (op.prefix_side()) {
                // longest square prefix with root <= r
                best_prefix_root_.assign(n_ / 2 + 2, 0);
                for (int r = 1; r <= n_ / 2; ++r) best_prefix_root_[r] = lce_.is_square(1, r) ? r : best_prefix_root_[r - 1];
            }
        } else if (op.suffix_side()) {
            squares_.emplace(compute_runs(lce_), n_, op.bound_or(n_));
        }
        if (!op.completion() && op.prefix_side() && static_cast<long long>(n_) * std::min(n_, op.bound_or(n_)) > (1LL << 30))
            throw BudgetExceeded("prefix graph budget exceeded");
        if (op.completion() && op.prefix_side() && static_cast<long long>(n_) * n_ > (1LL << 30))
            throw BudgetExceeded("prefix graph budget exceeded");
    }

    // Reachability from all seeds; pred[m].from == 0 for seeds and unreached.
    std::vector<char> sweep(const std::vector<int>& seeds, std::vector<Edge>& pred) const {
        std::vector<char> reach(n_ + 1, 0);
        pred.assign(n_ + 1, Edge{});
        for (int s : seeds)
            if (s >= 1 && s <= n_) reach[s] = 1;
        int last = 0;  // latest reachable length so far
        for (int m = 1; m <= n_; ++m) {
            if (!reach[m]) {
                if (auto e = incoming(m, reach, last)) {
                    reach[m] = 1;
                    pred[m] = *e;
                }
            }
            if (reach[m]) last = m;
        }
        return reach;
    }

private:
    OpKind op_;
    int n_;
    Lce lce_;
    std::vector<int> max_sq_end_, best_prefix_root_;
    std::optional<PrimSquareLists> squares_;

    std::optional<Edge> incoming(int m, const std::vector<char>& reach, int last) const {
        int bound = op_.bound_or(n_);
        if (op_.completion()) {
            if (op_.suffix_side() && max_sq_end_[m]) {
                // text[1..m] completes a square of root l ending at m from any
                // source in [m-l, m-1]; the latest reachable source is enough
                int l = max_sq_end_[m] / 2;
                if (last >= m - l) return Edge{last, {Side::suffix, m - last, l - (m - last)}};
            }
            if (op_.prefix_side()) {
                // source text[1..s] must reappear as the suffix of text[1..m]
                int top = best_prefix_root_[m / 2];
                for (int s = std::max(1, m - top); s < m; ++s) {
                    if (!reach[s] || lce_.ext(1, m - s + 1) < s) continue;
                    int l = top;  // any square prefix with root >= m-s works; use the longest
                    return Edge{s, {Side::prefix, m - s, l - (m - s)}};
                }
            }
            return std::nullopt;
        }
        if (op_.suffix_side())
            for (int p : squares_->ending_at(m))
                for (int d = p; d <= bound && 2 * d <= m && lce_.is_square(m - 2 * d + 1, d); d += p)
                    if (reach[m - d]) return Edge{m - d, {Side::suffix, d, 0}};
        if (op_.prefix_side())
            for (int d = 1; d <= std::min(bound, m / 2); ++d)
                if (reach[m - d] && lce_.ext(1, d + 1) >= m - d) return Edge{m - d, {Side::prefix, d, 0}};
        return std::nullopt;
    }
};

}  // namespace

std::optional<Derivation> verify_omega(const OpKind& op, Sequence s, int target_len, int max_seed) {
    if (target_len < 1 || max_seed < 1) throw std::invalid_argument("lengths must be positive");
    // a step at most doubles the word, so twice the target bounds the landing point
    Word text = generate(s, 2 * target_len);
    PrefixGraph graph(op, text);
    // smallest seed first; one sweep per seed is cheap next to building the graph
    std::vector<Edge> pred;
    int end = 0;
    for (int seed = 1; seed <= std::min(max_seed, target_len) && !end; ++seed) {
        auto reach = graph.sweep({seed}, pred);
        for (int m = target_len; m <= len(text) && !end; ++m)
            if (reach[m]) end = m;
    }
    if (!end) return std::nullopt;
    Derivation d;
    int m = end;
    while (pred[m].from) {
        d.steps.push_back(pred[m].step);
        m = pred[m].from;
    }
    std::reverse(d.steps.begin(), d.steps.end());
    d.start = Word(text.begin(), text.begin() + m);
    return d;
}

std::vector<int> reachable_prefix_lengths(const OpKind& op, const Word& text, int start) {
    if (start < 1 || start > len(text)) throw std::out_of_range("start out of range");
    PrefixGraph graph(op, text);
    std::vector<Edge> pred;
    auto reach = graph.sweep({start}, pred);
    std::vector<int> out;
    for (int m = start; m <= len(text); ++m)
        if (reach[m]) out.push_back(m);
    return out;
}

int longest_reachable_prefix(const OpKind& op, const Word& text, int start) { return reachable_prefix_lengths(op, text, start).back(); }

std::vector<BoundRow> thue_morse_psd_bounds(int max_n) {
    std::vector<BoundRow> rows;
    OpKind psd{Family::PSD, {}};
    for (int n = 0; n <= max_n; ++n) {
        int bound = (1 << (n + 1)) + (n >= 1 ? 1 << (n - 1) : 0);
        Word text = generate(Sequence::thue_morse, 2 * bound + 2);
        int worst = 0;
        for (int start = 1; start <= (1 << n); ++start) worst = std::max(worst, longest_reachable_prefix(psd, text, start));
        rows.push_back({n, bound, worst, worst <= bound});
    }
    return rows;
}

}  // namespace sqdup
