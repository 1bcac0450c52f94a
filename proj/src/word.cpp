#include "sturmlab/word.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sturmlab {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (c != '0' && c != '1') throw SyntaxError("word letters must be 0 or 1");
    }
}

std::size_t Word::ones() const {
    return (std::size_t)std::count(letters_.begin(), letters_.end(), '1');
}

FactorSet factors(const Word& w, std::size_t n) {
    if (n == 0 || n > w.size()) throw LengthOutOfRange("factor length out of range");
    FactorSet fs;
    fs.length = n;
    for (std::size_t i = 0; i + n <= w.size(); ++i) fs.members.insert(w.substr(i, n));
    return fs;
}

namespace {

std::size_t distinct_factor_count(const std::string& s, std::size_t n) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(s.size() - n + 2);
    for (std::size_t i = 0; i + n <= s.size(); ++i)
        seen.insert(std::string_view(s).substr(i, n));
    return seen.size();
}

}  // namespace

ComplexityProfile complexity_profile_serial(const Word& w, std::size_t n_max) {
    if (n_max == 0 || n_max > w.size()) throw LengthOutOfRange("n_max out of range");
    ComplexityProfile p;
    for (std::size_t n = 1; n <= n_max; ++n) p[n] = distinct_factor_count(w.str(), n);
    return p;
}

ComplexityProfile complexity_profile(const Word& w, std::size_t n_max) {
    if (n_max == 0 || n_max > w.size()) throw LengthOutOfRange("n_max out of range");
    std::vector<std::size_t> counts(n_max + 1, 0);
#pragma omp parallel for schedule(dynamic)
    for (long n = 1; n <= (long)n_max; ++n)
        counts[(std::size_t)n] = distinct_factor_count(w.str(), (std::size_t)n);
    ComplexityProfile p;
    for (std::size_t n = 1; n <= n_max; ++n) p[n] = counts[n];
    return p;
}

SpecialFactors special_factors(const FactorSet& fs_n, const FactorSet& fs_n1) {
    if (fs_n1.length != fs_n.length + 1)
        throw LengthMismatch("second factor set must have length n+1");
    SpecialFactors out;
    auto has = [&](const std::string& s) { return fs_n1.members.count(Word(s)) != 0; };
    for (const Word& s : fs_n.members) {
        bool right = has(s.str() + "0") && has(s.str() + "1");
        bool left = has("0" + s.str()) && has("1" + s.str());
        if (right) out.right_special.insert(s);
        if (left) out.left_special.insert(s);
        if (right && left) out.bispecial.insert(s);
    }
    return out;
}

std::set<Word> conjugates(const Word& w) {
    std::set<Word> out;
    if (w.empty()) {
        out.insert(w);
        return out;
    }
    std::string dbl = w.str() + w.str();
    for (std::size_t i = 0; i < w.size(); ++i) out.insert(Word(dbl.substr(i, w.size())));
    return out;
}

bool is_conjugate(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    return (u.str() + u.str()).find(v.str()) != std::string::npos;
}

std::optional<PeriodInfo> detect_period(const Word& w, std::size_t t_max) {
    if (t_max > w.size() / 2) throw LengthOutOfRange("t_max must be at most |w|/2");
    for (std::size_t t = 1; t <= t_max; ++t) {
        // smallest preperiod: one past the last mismatch w[i] != w[i+t]
        std::size_t pre = 0;
        for (std::size_t i = w.size() - t; i-- > 0;) {
            if (w[i] != w[i + t]) {
                pre = i + 1;
                break;
            }
        }
        if (pre <= w.size() / 2) return PeriodInfo{pre, t};
    }
    return std::nullopt;
}

std::vector<std::size_t> occurrences(const Word& w, const Word& v) {
    if (v.empty()) throw LengthOutOfRange("pattern must be non-empty");
    std::vector<std::size_t> out;
    if (v.size() > w.size()) return out;
    for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
        if (w.str().compare(i, v.size(), v.str()) == 0) out.push_back(i);
    }
    return out;
}

}  // namespace sturmlab
