#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "sturmlab/errors.hpp"

namespace sturmlab {

/// An element (a + b*sqrt(d))/c of a real quadratic field, with arbitrary
/// precision integer components. Normal form: c >= 1, gcd(a,b,c) = 1,
/// d square-free, and b = 0 <=> d = 0 (rationals carry d = 0).
///
/// All comparisons and arithmetic are exact; two values in different
/// quadratic fields (both with b != 0 and different d) cannot be mixed.
class ExactReal {
public:
    ExactReal() : a_(0), b_(0), c_(1), d_(0) {}
    ExactReal(long v) : a_(v), b_(0), c_(1), d_(0) {}  // NOLINT: implicit on purpose
    ExactReal(const mpz_class& num, const mpz_class& den);
    ExactReal(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    static ExactReal rational(const mpq_class& q);
    static ExactReal sqrt_of(const mpz_class& d);  // sqrt(d), d >= 0

    const mpz_class& num() const { return a_; }
    const mpz_class& surd_coeff() const { return b_; }
    const mpz_class& den() const { return c_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Exact rational value; only valid when is_rational().
    mpq_class as_rational() const;

    /// -1, 0, +1 for the exact sign of *this - other. Throws MixedRadicands.
    int cmp(const ExactReal& other) const;
    int sign() const;

    bool operator==(const ExactReal& o) const { return cmp(o) == 0; }
    std::strong_ordering operator<=>(const ExactReal& o) const {
        int c = cmp(o);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator-() const;
    ExactReal scale(const mpq_class& q) const;
    ExactReal reciprocal() const;  // throws on zero

    mpz_class floor() const;
    ExactReal frac() const;        // in [0,1)
    ExactReal frac_upper() const;  // in (0,1]; 0 maps to 1
    ExactReal abs() const;

    /// Double approximation; for display only, never used in decisions.
    double to_double() const;

    std::string format() const;
    static ExactReal parse(const std::string& text);

    struct CfExpansion {
        std::vector<mpz_class> quotients;
        bool terminated = false;  // full finite expansion of a rational
    };
    /// First m partial quotients of x = [0; a1, a2, ...], for x in (0,1).
    static CfExpansion cf_expansion(const ExactReal& x, std::size_t m);

private:
    void normalize();
    // shared radicand of two operands, or throws MixedRadicands
    static mpz_class common_radicand(const ExactReal& x, const ExactReal& y);

    mpz_class a_, b_, c_, d_;
};

}  // namespace sturmlab
