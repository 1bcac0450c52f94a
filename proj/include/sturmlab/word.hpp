#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sturmlab/errors.hpp"

namespace sturmlab {

/// Finite binary word over {0,1}, stored as an ASCII string of '0'/'1'.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    const std::string& str() const { return letters_; }

    Word substr(std::size_t pos, std::size_t len) const {
        return Word(letters_.substr(pos, len));
    }
    Word operator+(const Word& o) const { return Word(letters_ + o.letters_); }
    std::size_t ones() const;

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;

private:
    std::string letters_;
};

struct FactorSet {
    std::size_t length = 0;
    std::set<Word> members;
};

/// n -> number of distinct length-n factors observed in a finite prefix.
/// A lower bound on the infinite word's complexity (window semantics).
using ComplexityProfile = std::map<std::size_t, std::size_t>;

FactorSet factors(const Word& w, std::size_t n);

ComplexityProfile complexity_profile(const Word& w, std::size_t n_max);
ComplexityProfile complexity_profile_serial(const Word& w, std::size_t n_max);

struct SpecialFactors {
    std::set<Word> right_special;
    std::set<Word> left_special;
    std::set<Word> bispecial;
};
SpecialFactors special_factors(const FactorSet& fs_n, const FactorSet& fs_n1);

std::set<Word> conjugates(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

struct PeriodInfo {
    std::size_t preperiod = 0;
    std::size_t period = 0;
};
/// Smallest period t <= t_max with w[i] == w[i+t] for all preperiod <= i < |w|-t.
/// The periodic tail must cover at least half the word, otherwise absent.
std::optional<PeriodInfo> detect_period(const Word& w, std::size_t t_max);

std::vector<std::size_t> occurrences(const Word& w, const Word& v);

}  // namespace sturmlab
