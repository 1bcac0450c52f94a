#pragma once

#include <utility>
#include <vector>

#include "sturmlab/exactreal.hpp"
#include "sturmlab/word.hpp"

namespace sturmlab {

enum class Convention { lower, upper };

/// Rotation coding parameters. Rational slopes are permitted (the coding is
/// then periodic) but rejected by the operations that require irrationality.
struct SturmianSpec {
    ExactReal sigma;  // slope, in (0,1)
    ExactReal rho;    // intercept
    Convention convention = Convention::lower;

    SturmianSpec(ExactReal s, ExactReal r, Convention c = Convention::lower);
    bool irrational() const { return !sigma.is_rational(); }
};

/// Letter i is 0 iff {rho + i*sigma} lands in the 0-interval of the chosen
/// convention: [0, 1-sigma) lower, (0, 1-sigma] upper (with {x} in (0,1]).
Word generate(const SturmianSpec& spec, std::size_t n);

/// All length-n factors of the slope-sigma word, via the exact circle
/// partition by the points {-i*sigma}, i = 0..n. Exactly n+1 factors.
FactorSet enumerate_factors_exact(const ExactReal& sigma, std::size_t n);

enum class WeightClass { light, heavy };
WeightClass weight_class(const Word& v, const ExactReal& sigma);

/// s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}. The quotients are the
/// d_n of the slope's expansion sigma = [0, 1+d_1, d_2, ...].
class StandardWordTower {
public:
    StandardWordTower(std::vector<mpz_class> quotients, std::size_t m);

    std::size_t levels() const { return words_.size() - 2; }  // highest n with s_n built
    const Word& s(long n) const;                              // n >= -1
    const mpz_class& d(std::size_t n) const;                  // n >= 1
    std::size_t num_quotients() const { return quotients_.size(); }

private:
    std::vector<mpz_class> quotients_;
    std::vector<Word> words_;  // words_[k] = s_{k-1}
};

/// Tower for an irrational slope, deep enough that |s_m| >= min_length
/// (or the requested quotient budget runs out first).
StandardWordTower tower_from_slope(const ExactReal& sigma, std::size_t min_length,
                                   std::size_t max_quotients = 64);

/// The words s_n^k s_{n-1} with their last two letters erased, k = 1..max_k.
std::vector<Word> bispecial_candidates(const StandardWordTower& tower, std::size_t n,
                                       std::size_t max_k);

/// (0b1, 1b0) for a bispecial factor b; the two are conjugate.
std::pair<Word, Word> christoffel_pair(const Word& b);

/// All n <= n_max where {n*sigma} is a strict running minimum or maximum
/// over 1..n; each such prefix of s_{sigma,0} is a Christoffel word.
std::vector<std::size_t> christoffel_lengths(const ExactReal& sigma, std::size_t n_max);

/// Lengths |s_n^k s_{n-1}| <= max_len, 0 < k <= d_{n+1}, over all tower
/// levels, plus the trivial length 1 (the single-letter prefix).
std::set<std::size_t> tower_block_lengths(const StandardWordTower& tower, std::size_t max_len);

struct Factorization {
    Word prefix;
    std::vector<std::size_t> exponents;  // k_i of the complete blocks s_n^{k_i} s_{n-1}
    Word residue;                        // incomplete final block
};

/// Greedy left-to-right parse of a prefix as p . prod s_n^{k_i} s_{n-1},
/// complete k_i in {d_{n+1}, d_{n+1}+1}, plus an explicit residue.
Factorization factorize(const Word& s_prefix, const StandardWordTower& tower, std::size_t level);

/// Exact ones-density of a finite word.
mpq_class frequency_report(const Word& w);

}  // namespace sturmlab
