#pragma once
// Factors free of square prefixes and/or suffixes, and square-related factorizations.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sqdup/core_index.hpp"
#include "sqdup/square_tables.hpp"
#include "sqdup/word.hpp"

namespace sqdup {

// p: no square prefix; s: no square suffix; ps: neither
enum class PsfKind { p, s, ps };

class PsfIndex {
public:
    explicit PsfIndex(const Word& w);
    explicit PsfIndex(SquareTables t);
    int n() const { return t_.n; }
    bool query(int i, int j, PsfKind kind) const;
    const SquareTables& tables() const { return t_; }
    const RangeMin<int>& left_min() const { return left_min_; }

private:
    SquareTables t_;
    RangeMin<int> left_min_;
};

// Emits factors ordered by start, then end.
void enumerate_pssf(const PsfIndex& idx, PsfKind kind, const std::function<void(int, int)>& emit);
std::vector<Factor> enumerate_pssf(const Word& w, PsfKind kind = PsfKind::ps);

std::int64_t count_pssf(const Word& w);
Factor longest_pssf(const Word& w);
// longest factor that derives w by completions and has no square prefix or suffix
Factor longest_primitive_pssc_ancestor(const Word& w);

enum class PartTag { square, run, plain };

struct Factorization {
    std::vector<Factor> parts;
    std::vector<PartTag> tags;
    int count(PartTag t) const;
};

std::optional<Factorization> factor_into_squares(const Word& w);
Factorization max_square_factorization(const Word& w);
std::optional<Factorization> factor_into_runs(const Word& w);

}  // namespace sqdup
