#pragma once
// Single-step semantics of the duplication and completion operations, bounded
// closures, derivation replay, and factor-graph search used as ground truth.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqdup/word.hpp"

namespace sqdup {

enum class Family { PD, SD, PSD, PSC, SSC, PSSC };

struct OpKind {
    Family family = Family::PSD;
    std::optional<int> k;  // only for PD, SD, PSD

    bool prefix_side() const { return family == Family::PD || family == Family::PSD || family == Family::PSC || family == Family::PSSC; }
    bool suffix_side() const { return family == Family::SD || family == Family::PSD || family == Family::SSC || family == Family::PSSC; }
    bool completion() const { return family == Family::PSC || family == Family::SSC || family == Family::PSSC; }
    int bound_or(int fallback) const { return k ? *k : fallback; }
};

// "pd", "sd", "psd", "psc", "ssc", "pssc"; k attaches a bound to duplication families
OpKind parse_op(std::string_view name, std::optional<int> k = std::nullopt);
std::string op_name(const OpKind& op);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kClosureBudget = std::size_t{1} << 22;

// Exact one-step image, sorted and deduplicated.
std::vector<Word> step(const OpKind& op, const Word& x);

// Every word of the closure of x with length <= maxlen, sorted.
std::vector<Word> closure_upto(const OpKind& op, const Word& x, int maxlen, std::size_t budget = kClosureBudget);

enum class Side { prefix, suffix };

// One application: block is |u| for duplications or |x| of the completed yxy;
// gap is |y| (always 0 for duplications).
struct DerivationStep {
    Side side;
    int block;
    int gap = 0;
    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Derivation {
    Word start;
    std::vector<DerivationStep> steps;
};

struct Replay {
    bool ok = true;
    Word word;           // final word when ok, last legal word otherwise
    int failed_at = -1;  // index of the first illegal step
};

// Apply a single step if legal.
std::optional<Word> apply_step(const OpKind& op, const Word& x, const DerivationStep& s);
Replay verify_derivation(const OpKind& op, const Derivation& d);

// Fewest steps from some occurrence of x in w to w itself; kInf if none.
int oracle_distance(const OpKind& op, const Word& x, const Word& w);
// Same, from the factor w[i..j].
int oracle_distance_from(const OpKind& op, const Word& w, int i, int j);
// in_place: w derives from w[i..j] with that occurrence kept in position.
// by_content: w derives from the word w[i..j] (any occurrence).
enum class AncestorScope { in_place, by_content };

// All ancestor coordinates (i, j), sorted.
std::vector<Factor> oracle_ancestors(const OpKind& op, const Word& w, AncestorScope scope = AncestorScope::by_content);

// Every (i, j) whose content equals the content of some listed factor; sorted.
std::vector<Factor> close_by_content(const Word& w, const std::vector<Factor>& factors);

inline constexpr std::size_t kNodeBudget = std::size_t{1} << 22;

}  // namespace sqdup
