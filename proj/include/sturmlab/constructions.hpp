#pragma once

#include <set>
#include <utility>
#include <vector>

#include "sturmlab/permutation.hpp"
#include "sturmlab/sturmian.hpp"

namespace sturmlab {

/// values[n] = {rho + n*sigma}; requires irrational sigma.
Representative sturmian_representative(const ExactReal& sigma, const ExactReal& rho,
                                       std::size_t L);

/// Fixed point of the two-branch halving morphism from seed 1/2; dyadic
/// rationals in [0,1].
Representative thue_morse_representative(std::size_t L);

enum class Example1Variant { a, b };
/// a[n] = (-1/2)^n, or b[n] = 1000 + (-1/3)^n.
Representative example1_representative(std::size_t L, Example1Variant variant);

/// Aperiodic permutation of slowly growing complexity: even position 2n gets
/// n/(n+1), odd position 2k-1 gets the midpoint of (e_{n_k - 1}, e_{n_k}).
Representative slow_complexity_representative(const std::vector<mpz_class>& nk, std::size_t L);

/// Strict partial order on indices 0..size-1; pair (i,j) means value_i < value_j.
struct OrderConstraintSet {
    std::size_t size = 0;
    std::set<std::pair<std::size_t, std::size_t>> less;
};

/// Rational values in (0,1) realizing every constraint: indices placed in
/// topological order (lowest index first), each above everything placed so
/// far, at interval midpoints toward 1.
Representative realize(const OrderConstraintSet& constraints);

}  // namespace sturmlab
