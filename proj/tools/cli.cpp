#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "sqdup/core_index.hpp"
#include "sqdup/distances.hpp"
#include "sqdup/gapped_tables.hpp"
#include "sqdup/languages.hpp"
#include "sqdup/membership_ancestors.hpp"
#include "sqdup/ops_kernel.hpp"
#include "sqdup/sequences.hpp"
#include "sqdup/square_tables.hpp"
#include "sqdup/squarefree.hpp"

namespace sqdup::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultBudget = 20000;

struct Settings {
    bool brute = false;
    std::string alphabet = "bytes";
    std::string format = "tsv";
    std::size_t budget = kDefaultBudget;  // longest word for superlinear routes
    // brute-force routes are cubic or worse
    int brute_cap() const { return static_cast<int>(std::max<std::size_t>(1, budget / 40)); }
};

std::string show_int(long long v) { return v == kInf ? "inf" : std::to_string(v); }

class Io {
public:
    Io(const Settings& s, std::ostream& out) : s_(s), out_(out) {}

    Word parse(const std::string& text) const {
        if (s_.alphabet == "bytes") return word_from(text);
        Word w;
        std::string t = text;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        for (std::string tok; in >> tok;) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                throw UsageError("not an integer symbol: " + tok);
            }
            if (used != tok.size() || v >= kMaxAlphabet) throw UsageError("bad integer symbol: " + tok);
            w.push_back(static_cast<Symbol>(v));
        }
        return w;
    }

    std::string show(const Word& w) const {
        if (s_.alphabet == "bytes") return to_text(w);
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
        return s;
    }

    void comment(const std::string& c) { out_ << "# " << c << '\n'; }

    void row(long long index, const std::vector<std::string>& cols) {
        out_ << index;
        for (const auto& c : cols) out_ << (tsv() ? "\t" : " ") << c;
        out_ << '\n';
    }
    void row(long long index, long long v) { row(index, std::vector<std::string>{show_int(v)}); }

    void scalar(const std::string& key, const std::string& value) {
        if (tsv())
            out_ << value << '\n';
        else
            out_ << key << ": " << value << '\n';
    }

    void pair(const std::string& key, const std::string& value) { out_ << key << (tsv() ? "\t" : ": ") << value << '\n'; }

    void factor(const Factor& f) { out_ << f.i << (tsv() ? "\t" : " ") << f.j << '\n'; }
    void line(const std::string& s) { out_ << s << '\n'; }
    std::ostream& raw() { return out_; }

private:
    bool tsv() const { return s_.format == "tsv"; }
    const Settings& s_;
    std::ostream& out_;
};

std::string slurp(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string read_file(const std::string& path) {
    if (path == "-") return slurp(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return slurp(in);
}

// Positional words, optionally completed by one word from a file or stdin.
struct Source {
    std::vector<std::string> words;
    std::string file;
    bool from_stdin = false;

    void attach(CLI::App* app, const std::string& what) {
        app->add_option("words", words, what);
        app->add_option("--file", file, "read the last word from a file");
        app->add_flag("--stdin", from_stdin, "read the last word from standard input");
    }

    std::vector<Word> read(const Io& io, std::size_t expected) const {
        if (!file.empty() && from_stdin) throw UsageError("give --file or --stdin, not both");
        std::vector<std::string> texts = words;
        if (!file.empty()) texts.push_back(read_file(file));
        if (from_stdin) texts.push_back(slurp(std::cin));
        if (texts.size() != expected) throw UsageError("expected " + std::to_string(expected) + " input word(s), got " + std::to_string(texts.size()));
        std::vector<Word> out;
        for (const auto& t : texts) {
            out.push_back(io.parse(t));
            if (out.back().empty()) throw UsageError("empty word");
        }
        return out;
    }
};

OpKind make_op(const std::string& name, int k) { return parse_op(name, k > 0 ? std::optional<int>(k) : std::nullopt); }

void guard_brute(const Settings& st, const Word& w) {
    if (len(w) > st.brute_cap()) throw BudgetExceeded("word too long for the brute-force route (raise SQDUP_BUDGET)");
}
void guard_fast(const Settings& st, const Word& w) {
    if (static_cast<std::size_t>(len(w)) > std::max<std::size_t>(st.budget, 1u << 24)) throw BudgetExceeded("word exceeds the budget");
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
    std::string which;
    Source src;
    int g = -1, G = -1;
    std::string gfile, route = "runs";
    bool sources = false;
};

int cmd_tables(const Settings& st, Io& io, const TablesArgs& a) {
    Word w = a.src.read(io, 1)[0];
    int n = len(w);
    if (st.brute) guard_brute(st, w);
    const std::string none = "sentinel-none=";
    auto per_position = [&](const std::vector<int>& t, const std::string& sentinel) {
        io.comment(none + sentinel);
        for (int i = 1; i <= n; ++i) io.row(i, t[i]);
    };
    auto tables = [&] { return st.brute ? brute::square_tables(w) : compute_square_tables(w, a.route == "lz" ? TableRoute::lz : TableRoute::runs); };

    if (a.which == "sa") {
        auto sa = st.brute ? brute::suffix_array(w) : TextIndex(w).sa_vector();
        for (int r = 1; r <= n; ++r) io.row(r, sa[r - 1]);
    } else if (a.which == "lcp") {
        std::vector<int> lcp(n + 2, 0);
        if (st.brute) {
            lcp = brute::lcp_array(w);
        } else {
            TextIndex idx(w);
            for (int r = 2; r <= n; ++r) lcp[r] = idx.lcp_adjacent(r);
        }
        for (int r = 1; r <= n; ++r) io.row(r, lcp[r]);
    } else if (a.which == "runs") {
        auto runs = st.brute ? brute::runs(w) : compute_runs(w);
        std::sort(runs.begin(), runs.end());
        io.comment("columns=start,end,period");
        for (const auto& r : runs) io.row(r.i, {std::to_string(r.j), std::to_string(r.p)});
    } else if (a.which == "left-right") {
        auto t = tables();
        io.comment(none + "0," + std::to_string(n + 1));
        for (int i = 1; i <= n; ++i) io.row(i, {std::to_string(t.left[i]), std::to_string(t.right[i])});
    } else if (a.which == "sc") {
        per_position(tables().sc, "0");
    } else if (a.which == "maxsqend") {
        per_position(tables().max_sq_end, "0");
    } else if (a.which == "minrightend") {
        per_position(tables().min_right_end, std::to_string(n + 1));
    } else if (a.which == "maxleftend") {
        per_position(tables().max_left_end, "0");
    } else if (a.which == "lpf" || a.which == "lprf") {
        bool bounded = a.g >= 0 || a.G >= 0;
        if (bounded == !a.gfile.empty()) throw UsageError("give --g and --G, or --gfile");
        std::vector<int> lo(n + 1, 0), hi(n + 1, kInf), gf;
        if (bounded) {
            if (a.g < 0 || a.G < 0 || a.g >= a.G || a.G > n) throw UsageError("need 0 <= g < G <= n");
            std::fill(lo.begin(), lo.end(), a.g);
            std::fill(hi.begin(), hi.end(), a.G - 1);
        } else {
            std::istringstream in(read_file(a.gfile));
            gf.assign(n + 1, 0);
            for (int i = 1; i <= n; ++i)
                if (!(in >> gf[i]) || gf[i] < 0 || gf[i] > n) throw UsageError("gap file needs n values in 0..n");
            std::copy(gf.begin(), gf.end(), lo.begin());
        }
        io.comment(none + "0");
        if (st.brute) {
            if (a.sources) throw UsageError("--sources has no brute-force route");
            auto t = a.which == "lpf" ? brute::lpf(w, lo, hi) : brute::lprf(w, lo, hi);
            for (int i = 1; i <= n; ++i) io.row(i, t[i]);
        } else {
            GapTable t = bounded ? (a.which == "lpf" ? lpf_bounded(w, a.g, a.G) : lprf_bounded(w, a.g, a.G))
                                 : (a.which == "lpf" ? lpf_func(w, gf) : lprf_func(w, gf));
            for (int i = 1; i <= n; ++i) {
                if (a.sources)
                    io.row(i, {std::to_string(t.arm[i]), std::to_string(t.source[i])});
                else
                    io.row(i, t.arm[i]);
            }
        }
    } else if (a.which == "lpal" || a.which == "lrep") {
        ArmKind kind = a.which == "lpal" ? ArmKind::palindrome : ArmKind::repeat;
        if (!st.brute && static_cast<std::size_t>(n) > st.budget) throw BudgetExceeded("word exceeds the budget");
        per_position(st.brute ? brute::lpal_lrep(w, kind) : lpal_lrep(w, kind), "0");
    } else {
        throw UsageError("unknown table " + a.which);
    }
    return 0;
}

// ---------------------------------------------------------------- member / dist

std::vector<int> sd_table(const Word& w, const OpKind& op) { return dup_distance_table(w, std::min(op.bound_or(len(w)), len(w)), DupSide::suffix); }
std::vector<int> pd_table(const Word& w, const OpKind& op) { return dup_distance_table(w, std::min(op.bound_or(len(w)), len(w)), DupSide::prefix); }

bool is_prefix(const Word& x, const Word& w) { return len(x) <= len(w) && std::equal(x.begin(), x.end(), w.begin()); }
bool is_suffix(const Word& x, const Word& w) { return len(x) <= len(w) && std::equal(x.rbegin(), x.rend(), w.rbegin()); }

int fast_distance(const Settings& st, const OpKind& op, const Word& x, const Word& w) {
    int n = len(w), m = len(x);
    if (m > n) return kInf;
    switch (op.family) {
        case Family::PSD: return bpsd_distance(x, w, std::min(op.bound_or(n), n));
        case Family::PSSC: return pssc_distance(x, w, static_cast<int>(std::min<std::size_t>(st.budget, kInf)));
        case Family::SD: return is_prefix(x, w) ? sd_table(w, op)[m] : kInf;
        case Family::PD: return is_suffix(x, w) ? pd_table(w, op)[n - m + 1] : kInf;
        case Family::SSC: return is_prefix(x, w) ? sscd_table(w)[m] : kInf;
        case Family::PSC: return is_suffix(x, w) ? pscd_table(w)[n - m + 1] : kInf;
    }
    return kInf;
}

// distance from the occurrence w[i..j] kept in place
int fast_distance_from(const Settings& st, const OpKind& op, const Word& w, int i, int j) {
    int n = len(w);
    switch (op.family) {
        case Family::PSSC: return pssc_distance_from(w, i, j, static_cast<int>(std::min<std::size_t>(st.budget, kInf)));
        case Family::SD: return i == 1 ? sd_table(w, op)[j] : kInf;
        case Family::PD: return j == n ? pd_table(w, op)[i] : kInf;
        case Family::SSC: return i == 1 ? sscd_table(w)[j] : kInf;
        case Family::PSC: return j == n ? pscd_table(w)[i] : kInf;
        case Family::PSD:
            if (op.k && j - i + 1 >= *op.k) {
                // both ends evolve independently once the factor is at least k long
                int s = sd_table(w, op)[j], p = pd_table(w, op)[i];
                return s == kInf || p == kInf ? kInf : s + p;
            }
            guard_brute(st, w);
            return oracle_distance_from(op, w, i, j);
    }
    return kInf;
}

bool fast_member(const Settings& st, const OpKind& op, const Word& x, const Word& w) {
    if (len(x) > len(w)) return false;
    switch (op.family) {
        case Family::PSD: return op.k ? psdk_membership(w, x, *op.k) : psd_membership(w, x);
        case Family::PSSC: return pssc_membership(w, x);
        default: return fast_distance(st, op, x, w) != kInf;
    }
}

std::pair<int, int> parse_range(const std::string& r) {
    auto colon = r.find(':');
    if (colon == std::string::npos) throw UsageError("range must look like i:j");
    try {
        return {std::stoi(r.substr(0, colon)), std::stoi(r.substr(colon + 1))};
    } catch (const std::exception&) {
        throw UsageError("range must look like i:j");
    }
}

struct PairArgs {
    std::string op;
    int k = 0;
    std::string range;
    Source src;
};

int cmd_member(const Settings& st, Io& io, const PairArgs& a) {
    OpKind op = make_op(a.op, a.k);
    auto words = a.src.read(io, 2);
    const Word &x = words[0], &w = words[1];
    bool yes;
    if (st.brute) {
        guard_brute(st, w);
        yes = oracle_distance(op, x, w) != kInf;
    } else {
        guard_fast(st, w);
        yes = fast_member(st, op, x, w);
    }
    io.scalar("member", yes ? "yes" : "no");
    return yes ? 0 : 1;
}

int cmd_dist(const Settings& st, Io& io, const PairArgs& a) {
    OpKind op = make_op(a.op, a.k);
    int d;
    if (!a.range.empty()) {
        Word w = a.src.read(io, 1)[0];
        auto [i, j] = parse_range(a.range);
        if (i < 1 || j < i || j > len(w)) throw UsageError("range outside the word");
        if (st.brute) {
            guard_brute(st, w);
            d = oracle_distance_from(op, w, i, j);
        } else {
            guard_fast(st, w);
            d = fast_distance_from(st, op, w, i, j);
        }
    } else {
        auto words = a.src.read(io, 2);
        if (st.brute) {
            guard_brute(st, words[1]);
            d = oracle_distance(op, words[0], words[1]);
        } else {
            guard_fast(st, words[1]);
            d = fast_distance(st, op, words[0], words[1]);
        }
    }
    io.scalar("distance", show_int(d));
    return 0;
}

// ---------------------------------------------------------------- ancestors

struct AncArgs {
    std::string op, what = "all";
    int k = 0;
    Source src;
};

bool table_primitive(const SquareTables& t, int i, int j, const OpKind& op) {
    // completions have the same predecessors as unbounded duplications on that side
    OpKind dup = op;
    if (op.family == Family::SSC) dup = OpKind{Family::SD, std::nullopt};
    if (op.family == Family::PSC) dup = OpKind{Family::PD, std::nullopt};
    if (op.family == Family::PSSC) dup = OpKind{Family::PSD, std::nullopt};
    return is_primitive_factor(t, i, j, dup);
}

int cmd_anc(const Settings& st, Io& io, const AncArgs& a) {
    OpKind op = make_op(a.op, a.k);
    Word w = a.src.read(io, 1)[0];
    int n = len(w);
    std::vector<Factor> all;
    std::int64_t count = 0;
    std::optional<Factor> shortest, longest_prim;
    bool want_all = a.what == "all";
    if (a.what != "all" && a.what != "count" && a.what != "shortest" && a.what != "longest-primitive") throw UsageError("unknown --what " + a.what);

    auto finish_from_list = [&](auto primitive) {
        count = static_cast<std::int64_t>(all.size());
        for (auto f : all) {
            if (!shortest || f.length() < shortest->length() || (f.length() == shortest->length() && f.i < shortest->i)) shortest = f;
            if (primitive(f) && (!longest_prim || f.length() > longest_prim->length() || (f.length() == longest_prim->length() && f.i < longest_prim->i)))
                longest_prim = f;
        }
    };

    if (st.brute) {
        guard_brute(st, w);
        all = oracle_ancestors(op, w, AncestorScope::in_place);
        finish_from_list([&](Factor f) { return brute::primitive(w, f.i, f.j, op); });
    } else if (op.family == Family::PSD) {
        guard_fast(st, w);
        AncestorQuery q = want_all ? AncestorQuery::all
                          : a.what == "count" ? AncestorQuery::count
                          : a.what == "shortest" ? AncestorQuery::shortest
                                                 : AncestorQuery::longest_primitive;
        auto r = bpsd_ancestors(w, std::min(op.bound_or(n), n), q);
        all = r.all;
        count = r.count;
        shortest = r.shortest;
        longest_prim = r.longest_primitive;
    } else if (op.family == Family::PSSC) {
        guard_fast(st, w);
        auto prof = pssc_ancestor_profile(w);
        count = prof.count;
        shortest = prof.shortest;
        if (want_all)
            for (int i = 1; i <= n; ++i)
                for (int j = prof.j[i]; j <= n; ++j) all.push_back({i, j});
        if (a.what == "longest-primitive") longest_prim = longest_primitive_pssc_ancestor(w);
    } else {
        guard_fast(st, w);
        std::vector<int> t;
        bool prefixes = op.family == Family::SD || op.family == Family::SSC;
        if (op.family == Family::SD) t = sd_table(w, op);
        if (op.family == Family::PD) t = pd_table(w, op);
        if (op.family == Family::SSC) t = sscd_table(w);
        if (op.family == Family::PSC) t = pscd_table(w);
        for (int i = 1; i <= n; ++i)
            if (t[i] != kInf) all.push_back(prefixes ? Factor{1, i} : Factor{i, n});
        std::sort(all.begin(), all.end());
        auto sq = compute_square_tables(w);
        finish_from_list([&](Factor f) { return table_primitive(sq, f.i, f.j, op); });
    }

    if (want_all) {
        std::sort(all.begin(), all.end());
        for (auto f : all) io.factor(f);
    } else if (a.what == "count") {
        io.scalar("count", std::to_string(count));
    } else {
        auto f = a.what == "shortest" ? shortest : longest_prim;
        if (!f) {
            io.scalar(a.what, "none");
            return 1;
        }
        io.scalar("length", std::to_string(f->length()));
        io.factor(*f);
    }
    return 0;
}

struct CommonArgs {
    std::string op, what = "shortest";
    int k = 0;
    Source src;
};

int cmd_common(const Settings& st, Io& io, const CommonArgs& a) {
    OpKind op = make_op(a.op, a.k);
    auto words = a.src.read(io, 2);
    CommonQuery q = a.what == "any" ? CommonQuery::any : a.what == "shortest" ? CommonQuery::shortest : a.what == "longest" ? CommonQuery::longest : throw UsageError("unknown --what " + a.what);
    std::optional<Word> found;
    if (st.brute) {
        for (auto& w : words) guard_brute(st, w);
        auto content = [&](const Word& w) {
            std::set<Word> s;
            for (auto f : oracle_ancestors(op, w, AncestorScope::by_content)) s.insert(sub(w, f.i, f.j));
            return s;
        };
        auto ax = content(words[0]), ay = content(words[1]);
        for (auto& u : ax) {
            if (!ay.count(u)) continue;
            bool better = !found || (q == CommonQuery::longest ? len(u) > len(*found) : len(u) < len(*found));
            if (better) found = u;
        }
    } else {
        for (auto& w : words) guard_fast(st, w);
        found = common_ancestor(words[0], words[1], op, q);
    }
    if (!found) {
        io.scalar("common", "none");
        return 1;
    }
    io.scalar(q == CommonQuery::any ? "common" : "length", q == CommonQuery::any ? "yes" : std::to_string(len(*found)));
    io.line(io.show(*found));
    return 0;
}

// ---------------------------------------------------------------- squarefree / factorize

struct SqfreeArgs {
    std::string what = "enum", kind = "ps";
    Source src;
};

int cmd_sqfree(const Settings& st, Io& io, const SqfreeArgs& a) {
    Word w = a.src.read(io, 1)[0];
    PsfKind kind = a.kind == "p" ? PsfKind::p : a.kind == "s" ? PsfKind::s : a.kind == "ps" ? PsfKind::ps : throw UsageError("unknown --kind " + a.kind);
    if (st.brute) guard_brute(st, w);
    else guard_fast(st, w);
    auto listing = [&] { return st.brute ? brute::free_factors(w, kind) : enumerate_pssf(w, kind); };
    if (a.what == "enum") {
        for (auto f : listing()) io.factor(f);
    } else if (a.what == "count") {
        std::int64_t c = !st.brute && kind == PsfKind::ps ? count_pssf(w) : static_cast<std::int64_t>(listing().size());
        io.scalar("count", std::to_string(c));
    } else if (a.what == "longest") {
        Factor best{1, 0};
        if (!st.brute && kind == PsfKind::ps) {
            best = longest_pssf(w);
        } else {
            for (auto f : listing())
                if (f.length() > best.length()) best = f;
        }
        io.scalar("length", std::to_string(best.length()));
        io.factor(best);
    } else {
        throw UsageError("unknown --what " + a.what);
    }
    return 0;
}

struct FactorArgs {
    std::string into = "squares";
    Source src;
};

int cmd_factorize(const Settings& st, Io& io, const FactorArgs& a) {
    Word w = a.src.read(io, 1)[0];
    if (a.into != "squares" && a.into != "runs" && a.into != "max-squares") throw UsageError("unknown --into " + a.into);
    auto tag_name = [](PartTag t) { return t == PartTag::square ? "square" : t == PartTag::run ? "run" : "plain"; };
    auto parts = [&](const Factorization& f) {
        for (std::size_t p = 0; p < f.parts.size(); ++p) io.row(f.parts[p].i, {std::to_string(f.parts[p].j), tag_name(f.tags[p])});
    };
    if (st.brute) {
        guard_brute(st, w);
        if (a.into == "max-squares") {
            io.scalar("squares", std::to_string(brute::max_square_parts(w)));
            return 0;
        }
        bool ok = brute::factorizable(w, a.into == "runs");
        io.scalar("factorizable", ok ? "yes" : "none");
        return ok ? 0 : 1;
    }
    guard_fast(st, w);
    if (a.into == "max-squares") {
        auto f = max_square_factorization(w);
        io.scalar("squares", std::to_string(f.count(PartTag::square)));
        parts(f);
        return 0;
    }
    auto f = a.into == "squares" ? factor_into_squares(w) : factor_into_runs(w);
    io.scalar("factorizable", f ? "yes" : "none");
    if (!f) return 1;
    parts(*f);
    return 0;
}

// ---------------------------------------------------------------- lang

Dfa load_dfa(const std::string& path) {
    std::istringstream in(read_file(path));
    return read_dfa(in);
}

struct LangArgs {
    std::string action, op = "psd", letters;
    int k = 0, max_len = 8;
    bool dot = false;
    std::vector<std::string> inputs;
};

void emit_dfa(Io& io, const Dfa& d, bool dot) {
    if (dot)
        io.raw() << to_dot(d);
    else
        write_dfa(io.raw(), d);
}

int cmd_lang(const Settings& st, Io& io, const LangArgs& a) {
    if (st.brute) throw UsageError("lang has no brute-force route");
    auto need = [&](std::size_t count) {
        if (a.inputs.size() != count) throw UsageError("lang " + a.action + " expects " + std::to_string(count) + " argument(s)");
    };
    auto need_k = [&] {
        if (a.k < 1) throw UsageError("lang " + a.action + " needs --k");
    };
    if (a.action == "closure") {
        need(1);
        need_k();
        Word x = io.parse(a.inputs[0]);
        std::optional<std::vector<Symbol>> letters;
        if (!a.letters.empty()) letters = word_from(a.letters);
        OpKind op = parse_op(a.op);
        emit_dfa(io, closure_automaton(x, a.k, op.family, letters), a.dot);
    } else if (a.action == "image") {
        need(1);
        need_k();
        emit_dfa(io, one_step_image(load_dfa(a.inputs[0]), a.k), a.dot);
    } else if (a.action == "mingen") {
        need(1);
        need_k();
        try {
            emit_dfa(io, minimal_generator(load_dfa(a.inputs[0]), a.k), a.dot);
        } catch (const NotDuplicationClosed& e) {
            io.scalar("mingen", e.what());
            return 1;
        }
    } else if (a.action == "finite") {
        need(1);
        bool fin = is_finite(load_dfa(a.inputs[0]));
        io.scalar("finite", fin ? "finite" : "infinite");
        return fin ? 0 : 1;
    } else if (a.action == "dist") {
        need(2);
        need_k();
        io.scalar("distance", show_int(language_distance(load_dfa(a.inputs[0]), load_dfa(a.inputs[1]), a.k)));
    } else if (a.action == "words") {
        need(1);
        for (auto& w : words_upto(load_dfa(a.inputs[0]), a.max_len)) io.line(io.show(w));
    } else {
        throw UsageError("unknown lang action " + a.action);
    }
    return 0;
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
    std::string action;
    std::vector<std::string> inputs;
    int k = 0, max_seed = 16, max_n = 6;
    bool chain = false;
};

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("not an integer: " + s);
}

std::string digits(const Word& w) {
    std::string s;
    for (auto c : w) s += static_cast<char>('0' + c);
    return s;
}

int cmd_seq(const Settings& st, Io& io, const SeqArgs& a) {
    if (st.brute) throw UsageError("seq has no brute-force route");
    auto need = [&](std::size_t count) {
        if (a.inputs.size() != count) throw UsageError("seq " + a.action + " expects " + std::to_string(count) + " argument(s)");
    };
    if (a.action == "gen") {
        need(2);
        io.line(digits(generate(parse_sequence(a.inputs[0]), to_int(a.inputs[1]))));
    } else if (a.action == "verify") {
        need(3);
        OpKind op = make_op(a.inputs[0], a.k);
        int target = to_int(a.inputs[2]);
        if (static_cast<std::size_t>(target) > st.budget) throw BudgetExceeded("target exceeds the budget");
        auto chain = verify_omega(op, parse_sequence(a.inputs[1]), target, a.max_seed);
        if (!chain) {
            io.scalar("omega", "fail");
            return 1;
        }
        Replay r = verify_derivation(op, *chain);
        io.pair("start", std::to_string(len(chain->start)));
        io.pair("steps", std::to_string(chain->steps.size()));
        io.pair("reached", std::to_string(len(r.word)));
        io.pair("replay", r.ok ? "ok" : "failed");
        if (a.chain)
            for (std::size_t s = 0; s < chain->steps.size(); ++s) {
                const auto& step = chain->steps[s];
                io.row(static_cast<long long>(s + 1), {step.side == Side::suffix ? "suffix" : "prefix", std::to_string(step.block), std::to_string(step.gap)});
            }
        return r.ok ? 0 : 1;
    } else if (a.action == "bounds") {
        need(0);
        bool all = true;
        io.comment("columns=n,bound,worst,holds");
        for (const auto& row : thue_morse_psd_bounds(a.max_n)) {
            io.row(row.n, {std::to_string(row.bound), std::to_string(row.worst), row.holds ? "yes" : "no"});
            all = all && row.holds;
        }
        return all ? 0 : 1;
    } else if (a.action == "reach") {
        // experiment: reachable prefix lengths, asserts nothing
        need(4);
        OpKind op = make_op(a.inputs[0], a.k);
        int length = to_int(a.inputs[2]);
        if (static_cast<std::size_t>(length) > st.budget) throw BudgetExceeded("length exceeds the budget");
        Word text = generate(parse_sequence(a.inputs[1]), length);
        for (int m : reachable_prefix_lengths(op, text, to_int(a.inputs[3]))) io.line(std::to_string(m));
    } else {
        throw UsageError("unknown seq action " + a.action);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args = args_in;
    Settings st;
    if (!args.empty() && args[0] == "oracle") {
        st.brute = true;
        args.erase(args.begin());
    }
    if (const char* env = std::getenv("SQDUP_BUDGET")) {
        try {
            st.budget = std::stoul(env);
        } catch (const std::exception&) {
            err << "error: SQDUP_BUDGET must be a positive integer\n";
            return 2;
        }
    }

    CLI::App app{"Squares, duplications and completions on words. Prefix any command with `oracle` for the brute-force route."};
    app.name("sqdup");
    app.require_subcommand(1);
    app.add_option("--alphabet", st.alphabet, "bytes or ints (space-separated integer symbols)")->check(CLI::IsMember({"bytes", "ints"}));
    app.add_option("--format", st.format, "tsv or text")->check(CLI::IsMember({"tsv", "text"}));
    std::size_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "longest word for superlinear routes (also SQDUP_BUDGET)")->check(CLI::PositiveNumber);

    TablesArgs ta;
    auto* tables = app.add_subcommand("tables", "per-position tables");
    tables->add_option("which", ta.which, "sa|lcp|runs|left-right|sc|minrightend|maxleftend|maxsqend|lpf|lprf|lpal|lrep")->required();
    tables->add_option("--g", ta.g, "lower gap bound");
    tables->add_option("--G", ta.G, "upper gap bound (exclusive)");
    tables->add_option("--gfile", ta.gfile, "file with n per-position gap lower bounds");
    tables->add_option("--route", ta.route, "runs or lz")->check(CLI::IsMember({"runs", "lz"}));
    tables->add_flag("--sources", ta.sources, "also print the source position of each arm");
    ta.src.attach(tables, "word");

    PairArgs ma, da;
    auto* member = app.add_subcommand("member", "is w derivable from x");
    member->add_option("op", ma.op, "pd|sd|psd|psc|ssc|pssc")->required();
    member->add_option("--k", ma.k, "block bound for duplications");
    ma.src.attach(member, "x w");

    auto* dist = app.add_subcommand("dist", "fewest steps from x to w");
    dist->add_option("op", da.op, "pd|sd|psd|psc|ssc|pssc")->required();
    dist->add_option("--k", da.k, "block bound for duplications");
    dist->add_option("--x-range", da.range, "i:j, start from the factor w[i..j] in place");
    da.src.attach(dist, "x w, or w with --x-range");

    AncArgs aa;
    auto* anc = app.add_subcommand("anc", "ancestors of w, in place");
    anc->add_option("op", aa.op, "pd|sd|psd|psc|ssc|pssc")->required();
    anc->add_option("--k", aa.k, "block bound for duplications");
    anc->add_option("--what", aa.what, "all|count|shortest|longest-primitive");
    aa.src.attach(anc, "word");

    CommonArgs ca;
    auto* common = app.add_subcommand("common-anc", "common ancestor of x and y");
    common->add_option("op", ca.op, "pd|sd|psd|psc|ssc|pssc")->required();
    common->add_option("--k", ca.k, "block bound for duplications");
    common->add_option("--what", ca.what, "any|shortest|longest");
    ca.src.attach(common, "x y");

    SqfreeArgs sa;
    auto* sqfree = app.add_subcommand("sqfree", "factors without square prefix and/or suffix");
    sqfree->add_option("--what", sa.what, "enum|count|longest");
    sqfree->add_option("--kind", sa.kind, "p|s|ps");
    sa.src.attach(sqfree, "word");

    FactorArgs fa;
    auto* factorize = app.add_subcommand("factorize", "factorizations into squares or runs");
    factorize->add_option("--into", fa.into, "squares|runs|max-squares");
    fa.src.attach(factorize, "word");

    LangArgs la;
    auto* lang = app.add_subcommand("lang", "automata for bounded duplication languages");
    lang->add_option("action", la.action, "closure|image|mingen|finite|dist|words")->required();
    lang->add_option("inputs", la.inputs, "seed word, or DFA files ('-' for stdin)");
    lang->add_option("--op", la.op, "pd|sd|psd for closure");
    lang->add_option("--k", la.k, "block bound");
    lang->add_option("--letters", la.letters, "alphabet for closure (defaults to the seed's letters)");
    lang->add_option("--max", la.max_len, "longest word for words");
    lang->add_flag("--dot", la.dot, "graph description instead of the text form");

    SeqArgs qa;
    auto* seq = app.add_subcommand("seq", "infinite-word prefixes and generation chains");
    seq->add_option("action", qa.action, "gen <name> <n> | verify <op> <name> <target> | bounds | reach <op> <name> <len> <start>")->required();
    seq->add_option("inputs", qa.inputs, "arguments of the action");
    seq->add_option("--k", qa.k, "block bound");
    seq->add_option("--max-seed", qa.max_seed, "longest seed prefix for verify");
    seq->add_option("--max-n", qa.max_n, "largest block index for bounds");
    seq->add_flag("--chain", qa.chain, "print the steps found by verify");

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (budget_flag) st.budget = budget_flag;

    Io io(st, out);
    try {
        if (*tables) return cmd_tables(st, io, ta);
        if (*member) return cmd_member(st, io, ma);
        if (*dist) return cmd_dist(st, io, da);
        if (*anc) return cmd_anc(st, io, aa);
        if (*common) return cmd_common(st, io, ca);
        if (*sqfree) return cmd_sqfree(st, io, sa);
        if (*factorize) return cmd_factorize(st, io, fa);
        if (*lang) return cmd_lang(st, io, la);
        if (*seq) return cmd_seq(st, io, qa);
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace sqdup::cli
