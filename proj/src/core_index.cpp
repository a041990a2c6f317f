#include "sqdup/core_index.hpp"

#include <numeric>
#include <stdexcept>

namespace sqdup {

std::size_t compact_alphabet(const Word& w, std::vector<int>& out) {
    out.resize(w.size());
    Symbol top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    if (top <= 4 * w.size() + 256) {
        // small symbols: a rank table instead of sorting the text
        std::vector<int> rank(static_cast<std::size_t>(top) + 1, 0);
        for (auto c : w) rank[c] = 1;
        int next = 0;
        for (auto& r : rank) r = r ? next++ : -1;
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = rank[w[i]];
        return static_cast<std::size_t>(next);
    }
    std::vector<Symbol> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(letters.begin(), letters.end(), w[i]) - letters.begin());
    return letters.size();
}

namespace {

// SA-IS (induced sorting); s values in [0, upper].
std::vector<int> sa_is(const std::vector<int>& s, int upper) {
    int n = static_cast<int>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return s[0] < s[1] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};

    std::vector<int> sa(n);
    std::vector<char> ls(n, 0);  // true = S-type
    for (int i = n - 2; i >= 0; --i) ls[i] = s[i] == s[i + 1] ? ls[i + 1] : (s[i] < s[i + 1]);

    std::vector<int> sum_l(upper + 1, 0), sum_s(upper + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (!ls[i]) ++sum_s[s[i]];
        else ++sum_l[s[i] + 1];
    }
    for (int c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) sum_l[c + 1] += sum_s[c];
    }

    auto induce = [&](const std::vector<int>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<int> buf(sum_s);
        for (int d : lms)
            if (d != n) sa[buf[s[d]]++] = d;
        buf = sum_l;
        sa[buf[s[n - 1]]++] = n - 1;
        for (int i = 0; i < n; ++i) {
            int v = sa[i];
            if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        buf = sum_l;
        for (int i = n - 1; i >= 0; --i) {
            int v = sa[i];
            if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<int> lms_map(n + 1, -1), lms;
    for (int i = 1; i < n; ++i)
        if (!ls[i - 1] && ls[i]) {
            lms_map[i] = static_cast<int>(lms.size());
            lms.push_back(i);
        }
    int m = static_cast<int>(lms.size());
    induce(lms);

    if (m) {
        std::vector<int> sorted_lms;
        sorted_lms.reserve(m);
        for (int v : sa)
            if (lms_map[v] != -1) sorted_lms.push_back(v);
        std::vector<int> rec(m);
        int rec_upper = 0;
        rec[lms_map[sorted_lms[0]]] = 0;
        for (int t = 1; t < m; ++t) {
            int l = sorted_lms[t - 1], r = sorted_lms[t];
            int end_l = lms_map[l] + 1 < m ? lms[lms_map[l] + 1] : n;
            int end_r = lms_map[r] + 1 < m ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) ++l, ++r;
                if (l == n || s[l] != s[r]) same = false;
            }
            if (!same) ++rec_upper;
            rec[lms_map[sorted_lms[t]]] = rec_upper;
        }
        auto rec_sa = sa_is(rec, rec_upper);
        for (int t = 0; t < m; ++t) sorted_lms[t] = lms[rec_sa[t]];
        induce(sorted_lms);
    }
    return sa;
}

}  // namespace

std::vector<int> suffix_array(std::span<const int> s, int upper) {
    return sa_is(std::vector<int>(s.begin(), s.end()), upper);
}

TextIndex::TextIndex(const Word& w) : w_(w), n_(len(w)) {
    if (n_ == 0) throw std::invalid_argument("empty input");
    std::vector<int> s;
    int sigma = static_cast<int>(compact_alphabet(w, s));
    auto sa0 = sa_is(s, std::max(sigma - 1, 0));
    std::vector<int> sa(n_ + 1, 0);
    rank_.assign(n_ + 2, 0);
    for (int r = 1; r <= n_; ++r) {
        sa[r] = sa0[r - 1] + 1;
        rank_[sa[r]] = r;
    }
    sa0 = {};
    // Kasai, in 0-based text coordinates
    std::vector<int> lcp(n_ + 1, 0);
    int h = 0;
    for (int i = 0; i < n_; ++i) {
        int r = rank_[i + 1];
        if (r > 1) {
            int j = sa[r - 1] - 1;
            while (i + h < n_ && j + h < n_ && s[i + h] == s[j + h]) ++h;
            lcp[r] = h;
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    // the range-minimum structures own the arrays
    lcp_min_ = RangeMin<int>(std::move(lcp));
    sa_min_ = RangeMin<int>(std::move(sa));
}

namespace {
constexpr int kDirectScan = 64;
}

int TextIndex::lcp(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("position out of range");
    if (i == j) return n_ - i + 1;
    // short extensions are the common case; the scan avoids two cache misses
    int reach = std::min({kDirectScan, n_ - i + 1, n_ - j + 1});
    for (int l = 0; l < reach; ++l)
        if (w_[i + l - 1] != w_[j + l - 1]) return l;
    int a = rank_[i], b = rank_[j];
    if (a > b) std::swap(a, b);
    return lcp_min_.min(a + 1, b);
}

std::pair<int, int> TextIndex::rank_interval(int i, int len) const {
    int r = rank_[i];
    if (len <= 0) return {1, n_};
    // extend left while lcp_[lo] >= len
    int lo = r, hi = r;
    {
        int a = 1, b = r;  // smallest lo in [1, r] with min(lcp_[lo+1..r]) >= len
        while (a < b) {
            int mid = (a + b) / 2;
            if (lcp_min_.min(mid + 1, r) >= len) b = mid;
            else a = mid + 1;
        }
        lo = a;
    }
    {
        int a = r, b = n_;  // largest hi with min(lcp_[r+1..hi]) >= len
        while (a < b) {
            int mid = (a + b + 1) / 2;
            if (lcp_min_.min(r + 1, mid) >= len) a = mid;
            else b = mid - 1;
        }
        hi = a;
    }
    return {lo, hi};
}

int TextIndex::min_start_sharing(int i, int len) const {
    auto [lo, hi] = rank_interval(i, len);
    return sa_min_.min(lo, hi);
}

Lce::Lce(const Word& w) : fwd_(w), bwd_(reversed(w)) {}

Word BidiIndex::joined(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty input");
    if (alphabet_size(w) >= kMaxAlphabet) throw std::invalid_argument("no separator symbol available");
    // shift letters up by one so the separator (0) sorts below all of them
    Word j;
    j.reserve(2 * w.size() + 1);
    for (Symbol c : w) j.push_back(c + 1);
    j.push_back(0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) j.push_back(*it + 1);
    return j;
}

BidiIndex::BidiIndex(const Word& w) : n_(len(w)), idx_(joined(w)) {}

int BidiIndex::slot_owner(int r) const {
    int p = idx_.sa(r);
    if (p <= n_) return p;
    if (p == n_ + 1) return 0;
    return -(2 * n_ + 2 - p);
}

std::vector<LzFactor> lz_factorize(const Word& w, bool allow_overlap) {
    TextIndex idx(w);
    int n = idx.n();
    std::vector<LzFactor> out;
    int k = 1;
    while (k <= n) {
        auto fits = [&](int L) {
            int s = idx.min_start_sharing(k, L);
            return allow_overlap ? s < k : s <= k - L;
        };
        int lo = 0, hi = n - k + 1;
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            if (fits(mid)) lo = mid;
            else hi = mid - 1;
        }
        if (lo == 0) {
            out.push_back({k, 1, 0});
            ++k;
        } else {
            out.push_back({k, lo, idx.min_start_sharing(k, lo)});
            k += lo;
        }
    }
    return out;
}

Dbf::Dbf(const Word& w, int window_factor) : n_(len(w)), c_(window_factor) {
    TextIndex idx(w);
    for (int k = 0; (1 << k) <= n_; ++k) {
        int span = 1 << k;
        std::vector<int> lab(n_, -1);
        int g = 0;
        for (int r = 1; r <= n_; ++r) {
            if (r > 1 && idx.lcp_adjacent(r) < span) ++g;
            int p = idx.sa(r);
            if (p + span - 1 <= n_) lab[p - 1] = g;
        }
        std::unordered_map<std::uint64_t, Slot> blocks;
        blocks.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i + span - 1 <= n_; ++i) {
            std::uint64_t key = (static_cast<std::uint64_t>(lab[i - 1]) << 32) | static_cast<std::uint32_t>((i - 1) >> k);
            auto [it, fresh] = blocks.try_emplace(key, Slot{i, i, 1});
            if (!fresh) {
                it->second.last = i;
                ++it->second.count;
            }
        }
        label_.push_back(std::move(lab));
        blocks_.push_back(std::move(blocks));
    }
}

std::vector<Progression> Dbf::occurrences(int i, int k, int a, int b) const {
    if (k < 0 || k >= levels()) throw std::out_of_range("level out of range");
    int span = 1 << k;
    if (i < 1 || i + span - 1 > n_) throw std::out_of_range("position out of range");
    if (static_cast<long long>(b) - a + 1 > static_cast<long long>(c_) * span)
        throw std::invalid_argument("window exceeds c·2^k");
    std::vector<Progression> out;
    a = std::max(a, 1);
    b = std::min(b, n_) - span + 1;  // occurrences must lie inside [a, b]
    if (a > b) return out;
    std::uint64_t lab = static_cast<std::uint64_t>(label_[k][i - 1]) << 32;
    for (int blk = (a - 1) >> k; blk <= (b - 1) >> k; ++blk) {
        auto it = blocks_[k].find(lab | static_cast<std::uint32_t>(blk));
        if (it == blocks_[k].end()) continue;
        const Slot& sl = it->second;
        int step = sl.count > 1 ? (sl.last - sl.first) / (sl.count - 1) : 0;
        int first = sl.first, last = sl.last;
        if (step > 0) {
            if (first < a) first += (a - first + step - 1) / step * step;
            if (last > b) last -= (last - b + step - 1) / step * step;
        } else if (first < a || first > b) {
            continue;
        }
        if (first > last) continue;
        Progression cur{first, step, step ? (last - first) / step + 1 : 1};
        if (cur.count == 1) cur.step = 0;
        if (!out.empty()) {
            Progression& prev = out.back();
            int gap = cur.start - prev.last();
            int s = prev.count > 1 ? prev.step : (cur.count > 1 ? cur.step : gap);
            bool ok = gap == s && gap < span && (prev.count == 1 || prev.step == s) && (cur.count == 1 || cur.step == s);
            if (ok) {
                prev.step = s;
                prev.count += cur.count;
                continue;
            }
        }
        out.push_back(cur);
    }
    return out;
}

std::vector<int> occurrences(const Word& x, const Word& w) {
    std::vector<int> out;
    int m = len(x), n = len(w);
    if (m == 0 || m > n) return out;
    std::vector<int> fail(m, 0);  // prefix function of x
    for (int q = 1, k = 0; q < m; ++q) {
        while (k && x[q] != x[k]) k = fail[k - 1];
        if (x[q] == x[k]) ++k;
        fail[q] = k;
    }
    for (int q = 0, k = 0; q < n; ++q) {
        while (k && w[q] != x[k]) k = fail[k - 1];
        if (w[q] == x[k]) ++k;
        if (k == m) {
            out.push_back(q - m + 2);
            k = fail[k - 1];
        }
    }
    return out;
}

std::vector<int> expand(const std::vector<Progression>& ps) {
    std::vector<int> out;
    for (const auto& p : ps)
        for (int t = 0; t < p.count; ++t) out.push_back(p.start + p.step * t);
    return out;
}

}  // namespace sqdup
