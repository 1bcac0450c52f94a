#include "sturmlab/exactreal.hpp"

#include <cmath>
#include <regex>

namespace sturmlab {

namespace {

int sgn(const mpz_class& z) { return mpz_sgn(z.get_mpz_t()); }

// exact sign of A + B*sqrt(d), d square-free (or 0)
int surd_sign(const mpz_class& A, const mpz_class& B, const mpz_class& d) {
    if (B == 0 || d == 0) return sgn(A);
    if (A == 0) return sgn(B);
    if (sgn(A) == sgn(B)) return sgn(A);
    mpz_class lhs = A * A;
    mpz_class rhs = B * B * d;
    int t = cmp(lhs, rhs);
    if (t == 0) return 0;  // unreachable for square-free d > 1
    return sgn(A) > 0 ? t : -t;
}

}  // namespace

ExactReal::ExactReal(const mpz_class& num, const mpz_class& den) : a_(num), b_(0), c_(den), d_(0) {
    normalize();
}

ExactReal::ExactReal(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
}

ExactReal ExactReal::rational(const mpq_class& q) {
    return ExactReal(q.get_num(), q.get_den());
}

ExactReal ExactReal::sqrt_of(const mpz_class& d) { return ExactReal(0, 1, 1, d); }

void ExactReal::normalize() {
    if (c_ == 0) throw OutOfRange("zero denominator");
    if (d_ < 0) throw OutOfRange("negative radicand");
    if (b_ == 0) d_ = 0;
    if (d_ == 0) b_ = 0;
    if (d_ > 1) {
        // pull square factors out of the radicand into the coefficient
        mpz_class f = 2, sq;
        while (true) {
            sq = f * f;
            if (sq > d_) break;
            while (d_ % sq == 0) {
                d_ /= sq;
                b_ *= f;
            }
            ++f;
        }
    }
    if (d_ == 1) {  // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

mpz_class ExactReal::common_radicand(const ExactReal& x, const ExactReal& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) throw MixedRadicands();
    return x.d_;
}

mpq_class ExactReal::as_rational() const {
    mpq_class q(a_, c_);
    q.canonicalize();
    return q;
}

int ExactReal::cmp(const ExactReal& other) const {
    mpz_class d = common_radicand(*this, other);
    mpz_class A = a_ * other.c_ - other.a_ * c_;
    mpz_class B = b_ * other.c_ - other.b_ * c_;
    return surd_sign(A, B, d);
}

int ExactReal::sign() const { return surd_sign(a_, b_, d_); }

ExactReal ExactReal::operator+(const ExactReal& o) const {
    mpz_class d = common_radicand(*this, o);
    return ExactReal(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d);
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator-() const {
    ExactReal r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

ExactReal ExactReal::scale(const mpq_class& q) const {
    return ExactReal(a_ * q.get_num(), b_ * q.get_num(), c_ * q.get_den(), d_);
}

ExactReal ExactReal::reciprocal() const {
    if (is_zero()) throw OutOfRange("reciprocal of zero");
    if (b_ == 0) return ExactReal(c_, a_);
    mpz_class den = a_ * a_ - b_ * b_ * d_;
    return ExactReal(c_ * a_, -(c_ * b_), den, d_);
}

mpz_class ExactReal::floor() const {
    mpz_class fl_surd = 0;
    if (b_ != 0) {
        mpz_class t = b_ * b_ * d_, r;
        mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
        if (b_ >= 0) {
            fl_surd = r;
        } else {
            fl_surd = -r;
            if (r * r != t) fl_surd -= 1;
        }
    }
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), mpz_class(a_ + fl_surd).get_mpz_t(), c_.get_mpz_t());
    // fl_surd underestimates b*sqrt(d) by < 1, so n is off by at most 1
    while (cmp(ExactReal(n, 0, 1, 0)) < 0) n -= 1;
    while (cmp(ExactReal(n + 1, 0, 1, 0)) >= 0) n += 1;
    return n;
}

ExactReal ExactReal::frac() const { return *this - ExactReal(floor(), 0, 1, 0); }

ExactReal ExactReal::frac_upper() const {
    ExactReal f = frac();
    if (f.is_zero()) return ExactReal(1);
    return f;
}

ExactReal ExactReal::abs() const { return sign() < 0 ? -*this : *this; }

double ExactReal::to_double() const {
    return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
}

ExactReal::CfExpansion ExactReal::cf_expansion(const ExactReal& x, std::size_t m) {
    if (m < 1) throw OutOfRange("cf_expansion needs m >= 1");
    if (x.sign() <= 0 || x.cmp(ExactReal(1)) >= 0) throw OutOfRange("cf_expansion needs x in (0,1)");
    CfExpansion out;
    ExactReal cur = x;
    for (std::size_t i = 0; i < m; ++i) {
        ExactReal y = cur.reciprocal();
        mpz_class q = y.floor();
        out.quotients.push_back(q);
        cur = y - ExactReal(q, 0, 1, 0);
        if (cur.is_zero()) {
            out.terminated = true;
            break;
        }
    }
    return out;
}

std::string ExactReal::format() const {
    if (b_ == 0) {
        if (c_ == 1) return a_.get_str();
        return a_.get_str() + "/" + c_.get_str();
    }
    mpz_class babs = ::abs(b_);
    std::string op = b_ < 0 ? "-" : "+";
    return "(" + a_.get_str() + op + babs.get_str() + "*sqrt(" + d_.get_str() + "))/" +
           c_.get_str();
}

ExactReal ExactReal::parse(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = text[i];
        if (std::isspace(ch)) continue;
        // U+2212 minus sign -> '-'
        if (ch == 0xE2 && i + 2 < text.size() && (unsigned char)text[i + 1] == 0x88 &&
            (unsigned char)text[i + 2] == 0x92) {
            t += '-';
            i += 2;
            continue;
        }
        t += (char)ch;
    }
    static const std::regex surd_re(
        R"(^\(([+-]?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)/([+-]?\d+)$)");
    static const std::regex frac_re(R"(^([+-]?\d+)/([+-]?\d+)$)");
    static const std::regex int_re(R"(^([+-]?\d+)$)");
    std::smatch m;
    if (std::regex_match(t, m, surd_re)) {
        mpz_class a(m[1].str()), b(m[3].str()), d(m[4].str()), c(m[5].str());
        if (m[2].str() == "-") b = -b;
        return ExactReal(a, b, c, d);
    }
    if (std::regex_match(t, m, frac_re)) {
        return ExactReal(mpz_class(m[1].str()), mpz_class(m[2].str()));
    }
    if (std::regex_match(t, m, int_re)) {
        return ExactReal(mpz_class(m[1].str()), 1);
    }
    throw SyntaxError("not an exact real: '" + text + "'");
}

}  // namespace sturmlab
