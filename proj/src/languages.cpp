#include "sqdup/languages.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace sqdup {

// ---------------------------------------------------------------- TupleTrie

TupleTrie::TupleTrie(int sigma, int k) : sigma_(sigma), k_(k) {
    if (sigma < 0 || k < 0) throw std::invalid_argument("bad trie shape");
    pow_.assign(k + 1, 1);
    for (int l = 1; l <= k; ++l) {
        pow_[l] = pow_[l - 1] * static_cast<std::size_t>(sigma);
        if (pow_[l] > kContextBudget) throw BudgetExceeded("alphabet^k exceeds the context budget");
    }
    leaves_ = pow_[k];
    offset_.assign(k + 2, 0);
    for (int l = 0; l <= k; ++l) offset_[l + 1] = offset_[l] + pow_[l];
    len_.resize(offset_[k + 1]);
    for (int l = 0; l <= k; ++l)
        for (std::size_t v = 0; v < pow_[l]; ++v) len_[offset_[l] + v] = l;
}

int TupleTrie::letter_at(int id, int pos) const {
    int l = len_[id];
    return static_cast<int>((value(id) / pow_[l - 1 - pos]) % sigma_);
}

int TupleTrie::append(int id, int a) const {
    int l = len_[id];
    return static_cast<int>(offset_[l + 1] + value(id) * sigma_ + a);
}

int TupleTrie::prepend(int id, int a) const {
    int l = len_[id];
    return static_cast<int>(offset_[l + 1] + a * pow_[l] + value(id));
}

int TupleTrie::suffix_link(int id) const {
    int l = len_[id];
    return static_cast<int>(offset_[l - 1] + value(id) % pow_[l - 1]);
}

int TupleTrie::parent(int id) const {
    int l = len_[id];
    return static_cast<int>(offset_[l - 1] + value(id) / sigma_);
}

std::size_t TupleTrie::slot(int w1, int w2) const {
    if (w1 == w2) return static_cast<std::size_t>(w1);
    return static_cast<std::size_t>(nodes()) + value(w1) * leaves_ + value(w2);
}

std::pair<int, int> TupleTrie::unslot(std::size_t s) const {
    if (s < static_cast<std::size_t>(nodes())) return {static_cast<int>(s), static_cast<int>(s)};
    s -= nodes();
    return {static_cast<int>(offset_[k_] + s / leaves_), static_cast<int>(offset_[k_] + s % leaves_)};
}

int TupleTrie::node_of(const std::vector<int>& letters) const {
    int id = root();
    for (int a : letters) id = append(id, a);
    return id;
}

// ---------------------------------------------------------------- Dfa basics

int Dfa::letter(Symbol c) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), c);
    return it != alphabet.end() && *it == c ? static_cast<int>(it - alphabet.begin()) : -1;
}

bool Dfa::accepts(const Word& w) const {
    int q = start;
    for (Symbol c : w) {
        int a = letter(c);
        if (a < 0) return false;
        q = next(q, a);
    }
    return final[q];
}

namespace {

std::vector<Symbol> normalized(std::vector<Symbol> alphabet) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return alphabet;
}

std::vector<Symbol> merged(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::vector<Symbol> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return normalized(out);
}

using NState = std::uint64_t;

// Subset construction driven by a successor callback; the empty set becomes
// the dead state when it shows up.
template <class Succ, class Accept>
Dfa determinize(const std::vector<Symbol>& alphabet, std::vector<NState> start, Succ succ, Accept accept) {
    Dfa d;
    d.alphabet = alphabet;
    int sigma = d.sigma();
    std::map<std::vector<NState>, int> ids;
    std::vector<std::vector<NState>> sets;
    auto intern = [&](std::vector<NState> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        auto [it, fresh] = ids.try_emplace(s, static_cast<int>(sets.size()));
        if (fresh) {
            if (sets.size() >= kDfaStateBudget) throw BudgetExceeded("automaton state budget exceeded");
            d.final.push_back(std::any_of(s.begin(), s.end(), accept));
            sets.push_back(std::move(s));
        }
        return it->second;
    };
    d.start = intern(std::move(start));
    std::vector<NState> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        d.delta.resize((i + 1) * sigma);
        for (int a = 0; a < sigma; ++a) {
            out.clear();
            for (NState st : sets[i]) succ(st, a, out);
            d.delta[i * sigma + a] = intern(out);
        }
    }
    return d;
}

Dfa same_alphabet_product(const Dfa& a, const Dfa& b, bool (*keep)(bool, bool)) {
    Dfa d;
    d.alphabet = a.alphabet;
    int sigma = d.sigma();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int p, int q) {
        auto [it, fresh] = ids.try_emplace({p, q}, static_cast<int>(pairs.size()));
        if (fresh) {
            if (pairs.size() >= kDfaStateBudget) throw BudgetExceeded("automaton state budget exceeded");
            pairs.push_back({p, q});
            d.final.push_back(keep(a.final[p], b.final[q]));
        }
        return it->second;
    };
    d.start = intern(a.start, b.start);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        d.delta.resize((i + 1) * sigma);
        for (int c = 0; c < sigma; ++c) {
            auto [p, q] = pairs[i];
            d.delta[i * sigma + c] = intern(a.next(p, c), b.next(q, c));
        }
    }
    return d;
}

Dfa product(const Dfa& a, const Dfa& b, bool (*keep)(bool, bool)) {
    if (a.alphabet == b.alphabet) return same_alphabet_product(a, b, keep);
    auto all = merged(a.alphabet, b.alphabet);
    return same_alphabet_product(with_alphabet(a, all), with_alphabet(b, all), keep);
}

std::vector<char> reachable(const Dfa& d) {
    std::vector<char> seen(d.states(), 0);
    std::vector<int> todo{d.start};
    seen[d.start] = 1;
    while (!todo.empty()) {
        int q = todo.back();
        todo.pop_back();
        for (int a = 0; a < d.sigma(); ++a)
            if (!seen[d.next(q, a)]) {
                seen[d.next(q, a)] = 1;
                todo.push_back(d.next(q, a));
            }
    }
    return seen;
}

// shortest distance from each state to a final state, kInf if none
std::vector<int> distance_to_final(const Dfa& d) {
    int n = d.states();
    std::vector<std::vector<int>> back(n);
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < d.sigma(); ++a) back[d.next(q, a)].push_back(q);
    std::vector<int> dist(n, kInf), todo;
    for (int q = 0; q < n; ++q)
        if (d.final[q]) {
            dist[q] = 0;
            todo.push_back(q);
        }
    for (std::size_t h = 0; h < todo.size(); ++h)
        for (int p : back[todo[h]])
            if (dist[p] == kInf) {
                dist[p] = dist[todo[h]] + 1;
                todo.push_back(p);
            }
    return dist;
}

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("bound k must be positive");
}

// Suffix duplication NFA over a regular language: read a word of the
// language, then blocks that each repeat the last l <= k symbols. With star
// unset exactly one block is read.
Dfa sd_image(const Dfa& lang, int k, bool star) {
    require_k(k);
    TupleTrie ctx(lang.sigma(), k);
    if (lang.states() >= (1 << 30)) throw BudgetExceeded("automaton too large");
    constexpr NState kReading = NState{1} << 63;
    auto reading = [&](int q, int c) { return kReading | (NState(q) << 32) | NState(c); };
    auto block = [&](int l, int rem, int c) { return (NState(l) << 48) | (NState(rem) << 32) | NState(c); };
    auto open_blocks = [&](int c, int a, std::vector<NState>& out) {
        int m = ctx.length(c), nc = ctx.suf_after_append(c, a);
        for (int l = 1; l <= std::min(k, m); ++l)
            if (ctx.letter_at(c, m - l) == a) out.push_back(block(l, l - 1, nc));
    };
    auto succ = [&](NState st, int a, std::vector<NState>& out) {
        int c = static_cast<int>(st & 0xffffffffu);
        if (st & kReading) {
            int q = static_cast<int>((st >> 32) & 0x7fffffffu);
            out.push_back(reading(lang.next(q, a), ctx.suf_after_append(c, a)));
            if (lang.final[q]) open_blocks(c, a, out);
            return;
        }
        int l = static_cast<int>(st >> 48), rem = static_cast<int>((st >> 32) & 0xffffu);
        if (rem > 0) {
            if (ctx.letter_at(c, ctx.length(c) - l) == a) out.push_back(block(l, rem - 1, ctx.suf_after_append(c, a)));
        } else if (star) {
            open_blocks(c, a, out);
        }
    };
    auto accept = [&](NState st) {
        if (st & kReading) return star && lang.final[(st >> 32) & 0x7fffffffu] != 0;
        return ((st >> 32) & 0xffffu) == 0;
    };
    return minimize(determinize(lang.alphabet, {reading(lang.start, ctx.root())}, succ, accept));
}

}  // namespace

Dfa dfa_from_words(const std::vector<Word>& words, std::vector<Symbol> alphabet) {
    Dfa d;
    d.alphabet = normalized(std::move(alphabet));
    int sigma = d.sigma();
    // state 0 is dead, 1 is the root
    d.delta.assign(2 * sigma, 0);
    d.final.assign(2, 0);
    d.start = 1;
    for (const Word& w : words) {
        int q = 1;
        for (Symbol c : w) {
            int a = d.letter(c);
            if (a < 0) throw std::invalid_argument("word uses a letter outside the alphabet");
            if (!d.next(q, a)) {
                d.delta[q * sigma + a] = d.states();
                d.final.push_back(0);
                d.delta.resize(d.delta.size() + sigma, 0);
            }
            q = d.next(q, a);
        }
        d.final[q] = 1;
    }
    return d;
}

Dfa empty_language(std::vector<Symbol> alphabet) { return dfa_from_words({}, std::move(alphabet)); }

Dfa universal_language(std::vector<Symbol> alphabet) {
    Dfa d;
    d.alphabet = normalized(std::move(alphabet));
    d.delta.assign(d.sigma(), 0);
    d.final = {1};
    return d;
}

Dfa min_length_language(std::vector<Symbol> alphabet, int m) {
    Dfa d;
    d.alphabet = normalized(std::move(alphabet));
    m = std::max(m, 0);
    for (int q = 0; q <= m; ++q) {
        d.final.push_back(q == m);
        for (int a = 0; a < d.sigma(); ++a) d.delta.push_back(std::min(q + 1, m));
    }
    return d;
}

Dfa with_alphabet(const Dfa& d, const std::vector<Symbol>& alphabet) {
    Dfa r;
    r.alphabet = normalized(alphabet);
    for (Symbol c : d.alphabet)
        if (r.letter(c) < 0) throw std::invalid_argument("alphabet must contain the old one");
    int dead = d.states();
    r.start = d.start;
    r.final = d.final;
    r.final.push_back(0);
    for (int q = 0; q <= dead; ++q)
        for (Symbol c : r.alphabet) {
            int a = d.letter(c);
            r.delta.push_back(q < dead && a >= 0 ? d.next(q, a) : dead);
        }
    return r;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}
Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}
Dfa subtract(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa reverse(const Dfa& d) {
    std::vector<std::vector<int>> back(static_cast<std::size_t>(d.states()) * d.sigma());
    for (int q = 0; q < d.states(); ++q)
        for (int a = 0; a < d.sigma(); ++a) back[static_cast<std::size_t>(d.next(q, a)) * d.sigma() + a].push_back(q);
    std::vector<NState> start;
    for (int q = 0; q < d.states(); ++q)
        if (d.final[q]) start.push_back(q);
    auto succ = [&](NState q, int a, std::vector<NState>& out) {
        for (int p : back[q * d.sigma() + a]) out.push_back(p);
    };
    auto accept = [&](NState q) { return static_cast<int>(q) == d.start; };
    return minimize(determinize(d.alphabet, start, succ, accept));
}

Dfa minimize(const Dfa& d) {
    auto live = reachable(d);
    std::vector<int> keep;
    for (int q = 0; q < d.states(); ++q)
        if (live[q]) keep.push_back(q);
    int sigma = d.sigma();
    std::vector<int> cls(d.states(), 0);
    for (int q : keep) cls[q] = d.final[q] ? 1 : 0;
    int count = 0;
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next_cls(d.states(), 0);
        std::vector<int> key(sigma + 1);
        for (int q : keep) {
            key[0] = cls[q];
            for (int a = 0; a < sigma; ++a) key[a + 1] = cls[d.next(q, a)];
            next_cls[q] = sig.try_emplace(key, static_cast<int>(sig.size())).first->second;
        }
        int now = static_cast<int>(sig.size());
        cls.swap(next_cls);
        if (now == count) break;
        count = now;
    }
    // renumber so the start state is 0 and states follow first appearance
    std::vector<int> id(count, -1), order;
    std::vector<int> rep(count, -1);
    for (int q : keep)
        if (rep[cls[q]] < 0) rep[cls[q]] = q;
    std::vector<int> todo{cls[d.start]};
    id[cls[d.start]] = 0;
    order.push_back(cls[d.start]);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int q = rep[order[h]];
        for (int a = 0; a < sigma; ++a) {
            int c = cls[d.next(q, a)];
            if (id[c] < 0) {
                id[c] = static_cast<int>(order.size());
                order.push_back(c);
            }
        }
    }
    Dfa r;
    r.alphabet = d.alphabet;
    r.start = 0;
    for (int c : order) {
        int q = rep[c];
        r.final.push_back(d.final[q]);
        for (int a = 0; a < sigma; ++a) r.delta.push_back(id[cls[d.next(q, a)]]);
    }
    return r;
}

bool is_empty(const Dfa& d) {
    auto live = reachable(d);
    for (int q = 0; q < d.states(); ++q)
        if (live[q] && d.final[q]) return false;
    return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    return is_empty(product(a, b, [](bool x, bool y) { return x != y; }));
}

bool is_finite(const Dfa& d) {
    auto live = reachable(d);
    auto dist = distance_to_final(d);
    auto useful = [&](int q) { return live[q] && dist[q] != kInf; };
    // a cycle through useful states means infinitely many accepted words
    std::vector<char> color(d.states(), 0);
    for (int root = 0; root < d.states(); ++root) {
        if (!useful(root) || color[root]) continue;
        std::vector<std::pair<int, int>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [q, a] = stack.back();
            if (a == d.sigma()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int r = d.next(q, a++);
            if (!useful(r)) continue;
            if (color[r] == 1) return false;
            if (!color[r]) {
                color[r] = 1;
                stack.push_back({r, 0});
            }
        }
    }
    return true;
}

std::vector<Word> words_upto(const Dfa& d, int maxlen, std::size_t budget) {
    auto dist = distance_to_final(d);
    std::vector<Word> out;
    Word cur;
    auto walk = [&](auto&& self, int q) -> void {
        if (d.final[q]) {
            if (out.size() >= budget) throw BudgetExceeded("too many words");
            out.push_back(cur);
        }
        if (len(cur) == maxlen) return;
        for (int a = 0; a < d.sigma(); ++a) {
            int r = d.next(q, a);
            if (dist[r] == kInf || dist[r] > maxlen - len(cur) - 1) continue;
            cur.push_back(d.alphabet[a]);
            self(self, r);
            cur.pop_back();
        }
    };
    if (dist[d.start] <= maxlen) walk(walk, d.start);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- text forms

Dfa read_dfa(std::istream& in) {
    auto fail = [](const std::string& why) { throw std::invalid_argument("bad automaton: " + why); };
    std::string line;
    if (!std::getline(in, line)) fail("missing header");
    std::istringstream head(line);
    int n = 0, start = 0;
    std::string letters;
    if (!(head >> n >> letters >> start) || n < 1 || start < 0 || start >= n) fail("header");
    if (letters == "-") letters.clear();
    Dfa d;
    for (unsigned char c : letters) d.alphabet.push_back(c);
    d.alphabet = normalized(d.alphabet);
    if (d.alphabet.size() != letters.size()) fail("repeated letter");
    d.start = start;
    d.final.assign(n, 0);
    if (!std::getline(in, line)) fail("missing final states");
    std::istringstream fin(line);
    for (int q; fin >> q;) {
        if (q < 0 || q >= n) fail("final state out of range");
        d.final[q] = 1;
    }
    if (!fin.eof()) fail("final states");
    d.delta.assign(static_cast<std::size_t>(n) * d.sigma(), -1);
    while (std::getline(in, line)) {
        std::istringstream tr(line);
        std::vector<std::string> tok;
        for (std::string t; tr >> t;)
            if (t != "->" && t != "\xe2\x86\x92") tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 3 || tok[1].size() != 1) fail("transition line '" + line + "'");
        int q = std::stoi(tok[0]), r = std::stoi(tok[2]);
        int a = d.letter(static_cast<unsigned char>(tok[1][0]));
        if (q < 0 || q >= n || r < 0 || r >= n || a < 0) fail("transition out of range");
        d.delta[static_cast<std::size_t>(q) * d.sigma() + a] = r;
    }
    if (std::find(d.delta.begin(), d.delta.end(), -1) != d.delta.end()) fail("transition function is not total");
    return d;
}

void write_dfa(std::ostream& out, const Dfa& d) {
    std::string letters;
    for (Symbol c : d.alphabet) {
        if (c < 33 || c > 126) throw std::invalid_argument("letter has no single-character form");
        letters.push_back(static_cast<char>(c));
    }
    out << d.states() << ' ' << (letters.empty() ? "-" : letters) << ' ' << d.start << '\n';
    bool first = true;
    for (int q = 0; q < d.states(); ++q)
        if (d.final[q]) {
            out << (first ? "" : " ") << q;
            first = false;
        }
    out << '\n';
    for (int q = 0; q < d.states(); ++q)
        for (int a = 0; a < d.sigma(); ++a) out << q << ' ' << letters[a] << ' ' << d.next(q, a) << '\n';
}

std::string to_dot(const Dfa& d) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
    for (int q = 0; q < d.states(); ++q) out << "  q" << q << " [shape=" << (d.final[q] ? "doublecircle" : "circle") << "];\n";
    out << "  init -> q" << d.start << ";\n";
    for (int q = 0; q < d.states(); ++q) {
        std::map<int, std::string> labels;
        for (int a = 0; a < d.sigma(); ++a) {
            auto& l = labels[d.next(q, a)];
            if (!l.empty()) l += ",";
            Symbol c = d.alphabet[a];
            l += c >= 33 && c <= 126 && c != '"' && c != '\\' ? std::string(1, static_cast<char>(c)) : std::to_string(c);
        }
        for (auto& [r, l] : labels) out << "  q" << q << " -> q" << r << " [label=\"" << l << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------- closures

Dfa sd_closure(const Dfa& lang, int k) { return sd_image(lang, k, true); }

Dfa pd_closure(const Dfa& lang, int k) { return reverse(sd_image(reverse(lang), k, true)); }

Dfa psd_closure(const Dfa& lang, int k) {
    require_k(k);
    // Below length k the two sides interact, so those words are searched
    // directly. From length k on a prefix step never changes the last k
    // symbols and a suffix step never changes the first k, so suffix steps
    // can be moved first.
    OpKind op{Family::PSD, k};
    std::set<Word> shorts, frontier;
    std::vector<Word> todo;
    for (auto& w : words_upto(lang, k - 1))
        if (shorts.insert(w).second) todo.push_back(w);
    while (!todo.empty()) {
        Word w = std::move(todo.back());
        todo.pop_back();
        for (auto& y : step(op, w)) {
            if (len(y) >= k) {
                frontier.insert(y);
            } else if (shorts.insert(y).second) {
                todo.push_back(y);
            }
        }
    }
    Dfa longer = unite(intersect(lang, min_length_language(lang.alphabet, k)),
                       dfa_from_words({frontier.begin(), frontier.end()}, lang.alphabet));
    Dfa both = pd_closure(sd_closure(minimize(longer), k), k);
    return minimize(unite(both, dfa_from_words({shorts.begin(), shorts.end()}, lang.alphabet)));
}

Dfa closure_automaton(const Word& x, int k, Family family, std::optional<std::vector<Symbol>> alphabet) {
    require_k(k);
    auto letters = normalized(alphabet ? *alphabet : x);
    Dfa single = dfa_from_words({x}, letters);
    switch (family) {
        case Family::SD: return sd_closure(single, k);
        case Family::PD: return pd_closure(single, k);
        case Family::PSD: return psd_closure(single, k);
        default: throw std::invalid_argument("closure automata exist for PD, SD and PSD only");
    }
}

Dfa one_step_image(const Dfa& lang, int k) {
    require_k(k);
    return minimize(unite(sd_image(lang, k, false), reverse(sd_image(reverse(lang), k, false))));
}

Dfa minimal_generator(const Dfa& lang, int k) {
    if (!equivalent(lang, psd_closure(lang, k))) throw NotDuplicationClosed();
    return minimize(subtract(lang, one_step_image(lang, k)));
}

// ---------------------------------------------------------------- distance

namespace {

// Fewest steps taking a word of `from` to a word of `to`; kInf if never.
// Tuples (s1, s2, w1, w2) stand for a derived word w with pref_k(w) = w1,
// suf_k(w) = w2 and w leading `to` from s1 to s2.
int directed_distance(const Dfa& from, const Dfa& to, const TupleTrie& trie) {
    const int S = to.states(), Q = from.states(), N = trie.nodes();
    const std::size_t P = trie.slots();
    // state after reading node x from s, and its inverse
    std::vector<int> fwd(static_cast<std::size_t>(S) * N);
    for (int s = 0; s < S; ++s) {
        fwd[static_cast<std::size_t>(s) * N] = s;
        for (int x = 1; x < N; ++x) fwd[static_cast<std::size_t>(s) * N + x] = to.next(fwd[static_cast<std::size_t>(s) * N + trie.parent(x)], trie.last(x));
    }
    std::vector<int> inv_start(static_cast<std::size_t>(S) * N + 1, 0), inv(static_cast<std::size_t>(S) * N);
    for (int s = 0; s < S; ++s)
        for (int x = 0; x < N; ++x) ++inv_start[static_cast<std::size_t>(fwd[static_cast<std::size_t>(s) * N + x]) * N + x + 1];
    for (std::size_t i = 1; i < inv_start.size(); ++i) inv_start[i] += inv_start[i - 1];
    {
        auto fill = inv_start;
        for (int s = 0; s < S; ++s)
            for (int x = 0; x < N; ++x) inv[fill[static_cast<std::size_t>(fwd[static_cast<std::size_t>(s) * N + x]) * N + x]++] = s;
    }

    struct Tuple {
        int s1, s2;
        std::size_t slot;
    };
    std::vector<char> seen(static_cast<std::size_t>(S) * S * P, 0);
    auto index = [&](int s1, int s2, std::size_t slot) { return (static_cast<std::size_t>(s1) * S + s2) * P + slot; };
    std::vector<Tuple> layer;
    auto offer = [&](int s1, int s2, int w1, int w2, std::vector<Tuple>& into) {
        std::size_t sl = trie.slot(w1, w2);
        auto& bit = seen[index(s1, s2, sl)];
        if (!bit) {
            bit = 1;
            into.push_back({s1, s2, sl});
        }
    };

    // R_0: read words of `from` alongside `to` started in every state
    {
        struct Walk {
            int q, s2;
            std::size_t slot;
        };
        std::vector<char> walked(static_cast<std::size_t>(Q) * S * P);
        for (int s = 0; s < S; ++s) {
            std::fill(walked.begin(), walked.end(), 0);
            std::vector<Walk> todo{{from.start, s, trie.slot(trie.root(), trie.root())}};
            walked[(static_cast<std::size_t>(from.start) * S + s) * P + todo[0].slot] = 1;
            for (std::size_t h = 0; h < todo.size(); ++h) {
                auto [q, s2, sl] = todo[h];
                auto [w1, w2] = trie.unslot(sl);
                if (from.final[q]) offer(s, s2, w1, w2, layer);
                for (int a = 0; a < from.sigma(); ++a) {
                    Walk nx{from.next(q, a), to.next(s2, a), trie.slot(trie.pref_after_append(w1, a), trie.suf_after_append(w2, a))};
                    auto& bit = walked[(static_cast<std::size_t>(nx.q) * S + nx.s2) * P + nx.slot];
                    if (!bit) {
                        bit = 1;
                        todo.push_back(nx);
                    }
                }
            }
        }
    }

    for (int j = 0; !layer.empty(); ++j) {
        for (const auto& t : layer)
            if (t.s1 == to.start && to.final[t.s2]) return j;
        std::vector<Tuple> next;
        for (const auto& t : layer) {
            auto [w1, w2] = trie.unslot(t.slot);
            // suffix step: repeat a suffix x of w2
            for (int m = trie.length(w2), l = 1; l <= m; ++l) {
                int x = w2;
                for (int c = 0; c < m - l; ++c) x = trie.suffix_link(x);
                int n1 = w1, n2 = w2;
                for (int p = 0; p < l; ++p) {
                    int a = trie.letter_at(x, p);
                    n1 = trie.pref_after_append(n1, a);
                    n2 = trie.suf_after_append(n2, a);
                }
                offer(t.s1, fwd[static_cast<std::size_t>(t.s2) * N + x], n1, n2, next);
            }
            // prefix step: repeat a prefix x of w1
            for (int m = trie.length(w1), l = 1; l <= m; ++l) {
                int x = w1;
                for (int c = 0; c < m - l; ++c) x = trie.parent(x);
                int n1 = w1, n2 = w2;
                for (int p = l - 1; p >= 0; --p) {
                    int a = trie.letter_at(x, p);
                    n1 = trie.pref_after_prepend(n1, a);
                    n2 = trie.suf_after_prepend(n2, a);
                }
                std::size_t key = static_cast<std::size_t>(t.s1) * N + x;
                for (int i = inv_start[key]; i < inv_start[key + 1]; ++i) offer(inv[i], t.s2, n1, n2, next);
            }
        }
        layer.swap(next);
    }
    return kInf;
}

}  // namespace

int language_distance(const Dfa& l1, const Dfa& l2, int k) {
    require_k(k);
    auto all = merged(l1.alphabet, l2.alphabet);
    Dfa a = minimize(with_alphabet(l1, all)), b = minimize(with_alphabet(l2, all));
    TupleTrie trie(static_cast<int>(all.size()), k);
    std::size_t big = static_cast<std::size_t>(std::max(a.states(), b.states()));
    if (big * big * trie.slots() > kTupleBudget) throw BudgetExceeded("tuple budget exceeded");
    return std::min(directed_distance(a, b, trie), directed_distance(b, a, trie));
}

}  // namespace sqdup
