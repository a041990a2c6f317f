#pragma once
// Finite automata for bounded prefix/suffix duplication languages: closures,
// one-step images, minimal generators and the bounded distance between two
// regular languages.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqdup/ops_kernel.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

inline constexpr std::size_t kContextBudget = std::size_t{1} << 18;   // |V|^k
inline constexpr std::size_t kDfaStateBudget = std::size_t{1} << 20;  // subset construction
inline constexpr std::size_t kTupleBudget = std::size_t{1} << 26;     // distance tuple slots

// Complete DFA; letters are positions in the sorted alphabet.
struct Dfa {
    std::vector<Symbol> alphabet;
    int start = 0;
    std::vector<int> delta;  // delta[q * sigma + a]
    std::vector<char> final;

    int states() const { return static_cast<int>(final.size()); }
    int sigma() const { return static_cast<int>(alphabet.size()); }
    int next(int q, int a) const { return delta[static_cast<std::size_t>(q) * alphabet.size() + a]; }
    int letter(Symbol c) const;  // -1 when c is not in the alphabet
    bool accepts(const Word& w) const;
};

Dfa dfa_from_words(const std::vector<Word>& words, std::vector<Symbol> alphabet);
Dfa empty_language(std::vector<Symbol> alphabet);
Dfa universal_language(std::vector<Symbol> alphabet);
// words of length >= m
Dfa min_length_language(std::vector<Symbol> alphabet, int m);

// Same language over a larger alphabet.
Dfa with_alphabet(const Dfa& d, const std::vector<Symbol>& alphabet);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa subtract(const Dfa& a, const Dfa& b);
Dfa reverse(const Dfa& d);
Dfa minimize(const Dfa& d);  // also drops unreachable states
bool is_empty(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);
bool is_finite(const Dfa& d);
// Accepted words of length <= maxlen, sorted.
std::vector<Word> words_upto(const Dfa& d, int maxlen, std::size_t budget = kClosureBudget);

// Text form: "states alphabet start", the final states, then "q a r" lines.
// Symbols are single printable characters.
Dfa read_dfa(std::istream& in);
void write_dfa(std::ostream& out, const Dfa& d);
std::string to_dot(const Dfa& d);

// SD_k^*, PD_k^*, PSD_k^* of a regular language.
Dfa sd_closure(const Dfa& lang, int k);
Dfa pd_closure(const Dfa& lang, int k);
Dfa psd_closure(const Dfa& lang, int k);

// Automaton for the closure of x; family is PD, SD or PSD. The alphabet
// defaults to the letters of x.
Dfa closure_automaton(const Word& x, int k, Family family, std::optional<std::vector<Symbol>> alphabet = std::nullopt);

// PSD_k(L): words one bounded duplication away from L.
Dfa one_step_image(const Dfa& lang, int k);

class NotDuplicationClosed : public std::invalid_argument {
public:
    NotDuplicationClosed() : std::invalid_argument("not duplication-closed") {}
};

// L minus PSD_k(L); requires L = PSD_k^*(L).
Dfa minimal_generator(const Dfa& lang, int k);

// min over x in L1, y in L2 of the k-bounded duplication distance between x
// and y in either direction; kInf when no pair is related.
int language_distance(const Dfa& l1, const Dfa& l2, int k);

// Every word of V^{<=k} as a node. Ids grow with length and then with the
// base-|V| value. Pairs (w, w) map to the node, pairs of distinct
// length-k words to a connecting-edge slot after the nodes.
class TupleTrie {
public:
    TupleTrie(int sigma, int k);

    int k() const { return k_; }
    int nodes() const { return static_cast<int>(offset_[k_ + 1]); }
    std::size_t slots() const { return static_cast<std::size_t>(nodes()) + leaves_ * leaves_; }

    int root() const { return 0; }
    int length(int id) const { return len_[id]; }
    int letter_at(int id, int pos) const;  // 0-based position
    int first(int id) const { return letter_at(id, 0); }
    int last(int id) const { return letter_at(id, length(id) - 1); }

    int append(int id, int a) const;   // wa, requires |w| < k
    int prepend(int id, int a) const;  // aw, requires |w| < k
    int suffix_link(int id) const;     // w without its first letter
    int parent(int id) const;          // w without its last letter

    // pref_k / suf_k after adding a letter on either side
    int pref_after_append(int id, int a) const { return length(id) < k_ ? append(id, a) : id; }
    int suf_after_append(int id, int a) const { return length(id) < k_ ? append(id, a) : append(suffix_link(id), a); }
    int pref_after_prepend(int id, int a) const { return length(id) < k_ ? prepend(id, a) : prepend(parent(id), a); }
    int suf_after_prepend(int id, int a) const { return length(id) < k_ ? prepend(id, a) : id; }

    std::size_t slot(int w1, int w2) const;
    std::pair<int, int> unslot(std::size_t s) const;

    int node_of(const std::vector<int>& letters) const;  // length <= k

private:
    int sigma_, k_;
    std::size_t leaves_;
    std::vector<std::size_t> offset_, pow_;
    std::vector<int> len_;
    std::size_t value(int id) const { return static_cast<std::size_t>(id) - offset_[len_[id]]; }
};

}  // namespace sqdup
