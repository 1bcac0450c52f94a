#include "sturmlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sturmlab {

std::string Pattern::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) os << ',';
        os << ranks[i];
    }
    return os.str();
}

Pattern Pattern::parse(const std::string& text) {
    Pattern p;
    std::istringstream is(text);
    std::string tok;
    if (text.empty()) throw SyntaxError("empty pattern");
    while (std::getline(is, tok, ',')) {
        try {
            p.ranks.push_back((std::uint32_t)std::stoul(tok));
        } catch (const std::exception&) {
            throw SyntaxError("bad pattern rank: '" + tok + "'");
        }
    }
    std::vector<std::uint32_t> sorted = p.ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i + 1) throw SyntaxError("ranks are not a permutation of 1..n");
    }
    return p;
}

Representative::Representative(std::vector<ExactReal> values) : values_(std::move(values)) {
    std::vector<std::uint32_t> idx(values_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t i, std::uint32_t j) { return values_[i].cmp(values_[j]) < 0; });
    ranks_.resize(values_.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && values_[idx[r - 1]].cmp(values_[idx[r]]) == 0)
            throw DuplicateValue("representative values must be pairwise distinct");
        ranks_[idx[r]] = (std::uint32_t)r;
    }
}

const std::vector<std::uint32_t>& Representative::global_ranks() const { return ranks_; }

Pattern pattern_of(std::span<const ExactReal> values) {
    std::vector<std::uint32_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t i, std::uint32_t j) { return values[i].cmp(values[j]) < 0; });
    Pattern p;
    p.ranks.resize(values.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && values[idx[r - 1]].cmp(values[idx[r]]) == 0)
            throw DuplicateValue("window values must be pairwise distinct");
        p.ranks[idx[r]] = (std::uint32_t)(r + 1);
    }
    return p;
}

namespace {

Pattern window_pattern(const std::vector<std::uint32_t>& ranks, std::size_t start, std::size_t n) {
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t i, std::uint32_t j) {
        return ranks[start + i] < ranks[start + j];
    });
    Pattern p;
    p.ranks.resize(n);
    for (std::size_t r = 0; r < n; ++r) p.ranks[idx[r]] = (std::uint32_t)(r + 1);
    return p;
}

struct RankVecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PatternSet = std::unordered_set<std::vector<std::uint32_t>, RankVecHash>;

std::size_t distinct_patterns_serial(const std::vector<std::uint32_t>& ranks, std::size_t n) {
    PatternSet seen;
    for (std::size_t i = 0; i + n <= ranks.size(); ++i)
        seen.insert(window_pattern(ranks, i, n).ranks);
    return seen.size();
}

std::size_t distinct_patterns_parallel(const std::vector<std::uint32_t>& ranks, std::size_t n) {
    const std::size_t windows = ranks.size() - n + 1;
    PatternSet merged;
#pragma omp parallel
    {
        PatternSet local;
#pragma omp for schedule(static) nowait
        for (long i = 0; i < (long)windows; ++i)
            local.insert(window_pattern(ranks, (std::size_t)i, n).ranks);
#pragma omp critical
        merged.insert(local.begin(), local.end());
    }
    return merged.size();
}

}  // namespace

Pattern pattern_of(const Representative& rep, std::size_t start, std::size_t n) {
    if (start + n > rep.size()) throw LengthOutOfRange("window exceeds representative");
    return window_pattern(rep.global_ranks(), start, n);
}

ComplexityProfile perm_complexity_profile_serial(const Representative& rep, std::size_t n_max) {
    if (n_max == 0 || n_max > rep.size()) throw LengthOutOfRange("n_max out of range");
    ComplexityProfile p;
    for (std::size_t n = 1; n <= n_max; ++n)
        p[n] = distinct_patterns_serial(rep.global_ranks(), n);
    return p;
}

ComplexityProfile perm_complexity_profile(const Representative& rep, std::size_t n_max) {
    if (n_max == 0 || n_max > rep.size()) throw LengthOutOfRange("n_max out of range");
    ComplexityProfile p;
    for (std::size_t n = 1; n <= n_max; ++n)
        p[n] = distinct_patterns_parallel(rep.global_ranks(), n);
    return p;
}

Word underlying_word(const Representative& rep) {
    if (rep.size() < 2) throw LengthOutOfRange("need at least two values");
    const auto& r = rep.global_ranks();
    std::string s;
    s.reserve(rep.size() - 1);
    for (std::size_t i = 0; i + 1 < rep.size(); ++i) s += (r[i] < r[i + 1]) ? '0' : '1';
    return Word(std::move(s));
}

GreedyChain greedy_monotone_chain(const Representative& rep, std::size_t N, Direction dir) {
    GreedyChain chain;
    if (N < 1 || rep.size() <= N) return chain;
    const auto& r = rep.global_ranks();
    // decreasing chains pick the greatest of the next N elements, increasing
    // chains the least
    auto better = [&](std::size_t i, std::size_t j) {
        return dir == Direction::decreasing ? r[i] > r[j] : r[i] < r[j];
    };
    std::size_t cur = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (better(i, cur)) cur = i;
    chain.indices.push_back(cur);
    chain.monotone = true;
    while (cur + N < rep.size()) {
        std::size_t next = cur + 1;
        for (std::size_t i = cur + 2; i <= cur + N; ++i)
            if (better(i, next)) next = i;
        // greedy invariant: each new element continues the monotone run
        bool ok = dir == Direction::decreasing ? r[next] < r[cur] : r[next] > r[cur];
        if (!ok) chain.monotone = false;
        chain.indices.push_back(next);
        cur = next;
    }
    return chain;
}

std::size_t longest_monotone_chain(const Representative& rep, std::size_t N, Direction dir) {
    if (N < 1) throw LengthOutOfRange("N must be >= 1");
    const auto& r = rep.global_ranks();
    const std::size_t L = rep.size();
    std::vector<std::size_t> dp(L, 1);
    std::size_t best = L ? 1 : 0;
    for (std::size_t i = 1; i < L; ++i) {
        std::size_t lo = i > N ? i - N : 0;
        for (std::size_t j = lo; j < i; ++j) {
            bool ok = dir == Direction::decreasing ? r[j] > r[i] : r[j] < r[i];
            if (ok && dp[j] + 1 > dp[i]) dp[i] = dp[j] + 1;
        }
        best = std::max(best, dp[i]);
    }
    return best;
}

ExtremalElements find_N_extremal(const Representative& rep, std::size_t N) {
    if (rep.size() < 2 * N + 1) throw LengthOutOfRange("representative too short for this N");
    const auto& r = rep.global_ranks();
    ExtremalElements out;
    for (std::size_t i = N; i + N < rep.size(); ++i) {
        bool ismax = true, ismin = true;
        for (std::size_t j = i - N; j <= i + N; ++j) {
            if (j == i) continue;
            if (r[j] > r[i]) ismax = false;
            if (r[j] < r[i]) ismin = false;
            if (!ismax && !ismin) break;
        }
        if (ismax) out.maximal.push_back(i);
        if (ismin) out.minimal.push_back(i);
    }
    return out;
}

mpq_class canonical_estimate(const Representative& rep, std::size_t i) {
    if (i >= rep.size()) throw IndexOutOfRange("index out of range");
    mpq_class q((long)rep.global_ranks()[i], (long)rep.size());
    q.canonicalize();
    return q;
}

std::optional<PeriodInfo> detect_perm_period(const Representative& rep, std::size_t t_max) {
    if (t_max > rep.size() / 4) throw LengthOutOfRange("t_max must be at most |rep|/4");
    const auto& r = rep.global_ranks();
    const std::size_t L = rep.size();
    for (std::size_t t = 1; t <= t_max; ++t) {
        const std::size_t m = L - t;  // compare pairs within [0, m)
        long worst = -1;              // largest min-index of a violating pair
#pragma omp parallel for schedule(dynamic, 64) reduction(max : worst)
        for (long i = 0; i < (long)m; ++i) {
            if (i <= worst) continue;
            for (std::size_t j = (std::size_t)i + 1; j < m; ++j) {
                if ((r[(std::size_t)i] < r[j]) != (r[(std::size_t)i + t] < r[j + t])) {
                    worst = std::max(worst, i);
                    break;
                }
            }
        }
        std::size_t pre = (std::size_t)(worst + 1);
        if (pre <= L / 2) return PeriodInfo{pre, t};
    }
    return std::nullopt;
}

bool equivalent(const Representative& a, const Representative& b) {
    if (a.size() != b.size()) throw LengthMismatch("representatives differ in length");
    return a.global_ranks() == b.global_ranks();
}

}  // namespace sturmlab
