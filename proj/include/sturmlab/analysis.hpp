#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmlab/constructions.hpp"
#include "sturmlab/permutation.hpp"
#include "sturmlab/sturmian.hpp"

namespace sturmlab {

struct Check {
    std::string name;
    std::string params;
    bool passed = false;
    std::string witness;       // concrete witness on failure, summary on success
    std::size_t instances = 0; // number of instances examined; zero fails
};

struct VerificationReport {
    std::vector<Check> checks;

    void add(std::string name, std::string params, bool passed, std::string witness,
             std::size_t instances);
    bool all_passed() const;  // a zero-instance check never counts as passed
    std::size_t passed_count() const;
    std::string to_text() const;
    std::string to_jsonl() const;  // one JSON record per check
};

/// Exact star discrepancy D*_N of points in [0,1]:
/// max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted values.
ExactReal star_discrepancy(const std::vector<ExactReal>& values);

/// D*_N along a window schedule; empirical only, cannot certify the limit.
VerificationReport equidistribution_report(const Representative& rep,
                                           const std::vector<std::size_t>& schedule);

VerificationReport verify_sturmian_word(const ExactReal& sigma, std::size_t depth);

VerificationReport verify_sturmian_permutation(const ExactReal& sigma, const ExactReal& rho,
                                               std::size_t depth, std::size_t L,
                                               std::uint64_t seed = 20240915);

VerificationReport verify_decomposition(const ExactReal& sigma, std::size_t levels,
                                        std::size_t L);

VerificationReport monotone_diagnostics(const Representative& rep, std::size_t N_max);

}  // namespace sturmlab
