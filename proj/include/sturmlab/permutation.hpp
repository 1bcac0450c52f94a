#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sturmlab/exactreal.hpp"
#include "sturmlab/word.hpp"

namespace sturmlab {

/// Rank vector of a finite permutation: ranks[i] is 1 + (number of window
/// entries smaller than entry i), a bijection onto 1..n.
struct Pattern {
    std::vector<std::uint32_t> ranks;

    bool operator==(const Pattern&) const = default;
    auto operator<=>(const Pattern&) const = default;
    std::string to_string() const;  // comma-separated ranks, e.g. "4,1,3,2"
    static Pattern parse(const std::string& text);
};

/// Finite prefix of a representative sequence: pairwise-distinct exact reals.
class Representative {
public:
    explicit Representative(std::vector<ExactReal> values);

    std::size_t size() const { return values_.size(); }
    const ExactReal& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<ExactReal>& values() const { return values_; }

    /// Global ranks (0-based) of all values; computed once, cached.
    const std::vector<std::uint32_t>& global_ranks() const;

private:
    std::vector<ExactReal> values_;
    mutable std::vector<std::uint32_t> ranks_;
};

Pattern pattern_of(std::span<const ExactReal> values);
Pattern pattern_of(const Representative& rep, std::size_t start, std::size_t n);

ComplexityProfile perm_complexity_profile(const Representative& rep, std::size_t n_max);
ComplexityProfile perm_complexity_profile_serial(const Representative& rep, std::size_t n_max);

/// Ascent/descent word: letter i is 0 iff values[i] < values[i+1].
Word underlying_word(const Representative& rep);

enum class Direction { increasing, decreasing };

struct GreedyChain {
    std::vector<std::size_t> indices;
    bool monotone = false;  // whether the greedy invariant held throughout
};
/// The greedy extremal-of-the-next-N-positions construction; gaps <= N.
GreedyChain greedy_monotone_chain(const Representative& rep, std::size_t N, Direction dir);

/// Exact longest value-monotone chain with consecutive index gaps <= N.
std::size_t longest_monotone_chain(const Representative& rep, std::size_t N, Direction dir);

struct ExtremalElements {
    std::vector<std::size_t> maximal;
    std::vector<std::size_t> minimal;
};
/// Indices i in [N, |rep|-1-N] beating every neighbour within distance N.
ExtremalElements find_N_extremal(const Representative& rep, std::size_t N);

/// Finite truncation of the canonical-representative limit:
/// (#j with values[j] < values[i]) / |rep|.
mpq_class canonical_estimate(const Representative& rep, std::size_t i);

/// Smallest t <= t_max such that the order conditions at i and i+t agree for
/// all i,j past a preperiod covering at most half the data.
std::optional<PeriodInfo> detect_perm_period(const Representative& rep, std::size_t t_max);

bool equivalent(const Representative& a, const Representative& b);

}  // namespace sturmlab
