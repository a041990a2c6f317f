#pragma once
// Basic vocabulary shared by every module: symbols, words, 1-based positions.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqdup {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Largest supported alphabet; one extra value stays free for separators.
inline constexpr std::size_t kMaxAlphabet = 1u << 16;

// Step counts and distances use this as "unreachable".
inline constexpr int kInf = std::numeric_limits<int>::max();

struct Factor {
    int i = 0;  // 1-based start
    int j = 0;  // 1-based end, inclusive
    int length() const { return j - i + 1; }
    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

inline Word word_from(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (unsigned char c : s) w.push_back(c);
    return w;
}

// Inverse of word_from for byte alphabets.
inline std::string to_text(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w) s.push_back(static_cast<char>(c));
    return s;
}

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word sub(const Word& w, int i, int j) {
    if (i < 1 || j > static_cast<int>(w.size()) || i > j + 1)
        throw std::out_of_range("factor out of range");
    return Word(w.begin() + (i - 1), w.begin() + j);
}

inline Word concat(const Word& a, const Word& b) {
    Word r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::size_t alphabet_size(const Word& w) {
    Symbol m = 0;
    for (Symbol c : w) m = std::max(m, c);
    return w.empty() ? 0 : static_cast<std::size_t>(m) + 1;
}

// Relabel symbols to 0..sigma-1 preserving order; returns sigma.
std::size_t compact_alphabet(const Word& w, std::vector<int>& out);

inline int len(const Word& w) { return static_cast<int>(w.size()); }

}  // namespace sqdup
