#include "sturmlab/sturmian.hpp"

#include <algorithm>

namespace sturmlab {

SturmianSpec::SturmianSpec(ExactReal s, ExactReal r, Convention c)
    : sigma(std::move(s)), rho(std::move(r)), convention(c) {
    if (sigma.sign() <= 0 || sigma.cmp(ExactReal(1)) >= 0)
        throw OutOfRange("slope must lie in (0,1)");
}

Word generate(const SturmianSpec& spec, std::size_t n) {
    if (n < 1) throw LengthOutOfRange("length must be positive");
    ExactReal threshold = ExactReal(1) - spec.sigma;
    ExactReal p = spec.rho.frac();
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool zero;
        if (spec.convention == Convention::lower) {
            zero = p.cmp(threshold) < 0;  // {x} in [0, 1-sigma)
        } else {
            ExactReal pu = p.is_zero() ? ExactReal(1) : p;
            zero = pu.cmp(threshold) <= 0;  // {x}' in (0, 1-sigma]
        }
        out += zero ? '0' : '1';
        p = (p + spec.sigma).frac();
    }
    return Word(std::move(out));
}

FactorSet enumerate_factors_exact(const ExactReal& sigma, std::size_t n) {
    if (sigma.is_rational()) throw RationalSlope();
    if (n < 1) throw LengthOutOfRange("factor length must be positive");
    // circle partition points {-i*sigma}, i = 0..n
    std::vector<ExactReal> pts;
    pts.reserve(n + 1);
    ExactReal p = ExactReal(0);
    for (std::size_t i = 0; i <= n; ++i) {
        pts.push_back(p);
        p = (p - sigma).frac();
    }
    std::sort(pts.begin(), pts.end());
    FactorSet fs;
    fs.length = n;
    mpq_class half(1, 2);
    for (std::size_t i = 0; i <= n; ++i) {
        // interior sample of the arc [pts[i], next); the last arc wraps to 1
        ExactReal hi = (i + 1 <= n) ? pts[i + 1] : ExactReal(1);
        ExactReal mid = (pts[i] + hi).scale(half);
        fs.members.insert(generate(SturmianSpec(sigma, mid), n));
    }
    return fs;
}

WeightClass weight_class(const Word& v, const ExactReal& sigma) {
    mpq_class len((long)v.size());
    ExactReal x = sigma.scale(len);
    mpz_class fl = x.floor();
    mpz_class ones((long)v.ones());
    if (ones == fl) return WeightClass::light;
    mpz_class ceil = fl;
    if (!(x - ExactReal(fl, 1)).is_zero()) ceil = fl + 1;
    if (ones == ceil && ceil != fl) return WeightClass::heavy;
    throw NotAFactorWeight("ones count " + ones.get_str() + " matches neither floor nor ceil of n*sigma");
}

StandardWordTower::StandardWordTower(std::vector<mpz_class> quotients, std::size_t m)
    : quotients_(std::move(quotients)) {
    if (m > quotients_.size()) throw InvalidQuotient("tower level exceeds quotient count");
    if (!quotients_.empty() && quotients_[0] < 0) throw InvalidQuotient("d_1 must be >= 0");
    for (std::size_t i = 1; i < quotients_.size(); ++i) {
        if (quotients_[i] < 1) throw InvalidQuotient("d_n must be >= 1 for n >= 2");
    }
    words_.emplace_back(Word("1"));  // s_{-1}
    words_.emplace_back(Word("0"));  // s_0
    constexpr std::size_t kMaxLen = 100'000'000;
    for (std::size_t n = 1; n <= m; ++n) {
        const mpz_class& dn = quotients_[n - 1];
        if (!dn.fits_ulong_p()) throw InvalidQuotient("quotient too large to build words");
        const Word& prev = words_[words_.size() - 1];
        const Word& prev2 = words_[words_.size() - 2];
        unsigned long k = dn.get_ui();
        if (prev.size() * k + prev2.size() > kMaxLen)
            throw InvalidQuotient("tower word would be too long");
        std::string s;
        s.reserve(prev.size() * k + prev2.size());
        for (unsigned long i = 0; i < k; ++i) s += prev.str();
        s += prev2.str();
        words_.emplace_back(Word(std::move(s)));
    }
}

const Word& StandardWordTower::s(long n) const {
    if (n < -1 || (std::size_t)(n + 1) >= words_.size())
        throw InvalidQuotient("tower level not built");
    return words_[(std::size_t)(n + 1)];
}

const mpz_class& StandardWordTower::d(std::size_t n) const {
    if (n < 1 || n > quotients_.size()) throw InvalidQuotient("quotient index out of range");
    return quotients_[n - 1];
}

StandardWordTower tower_from_slope(const ExactReal& sigma, std::size_t min_length,
                                   std::size_t max_quotients) {
    if (sigma.is_rational()) throw RationalSlope();
    if (sigma.sign() <= 0 || sigma.cmp(ExactReal(1)) >= 0)
        throw OutOfRange("slope must lie in (0,1)");
    auto cf = ExactReal::cf_expansion(sigma, max_quotients);
    std::vector<mpz_class> ds;
    ds.reserve(cf.quotients.size());
    ds.push_back(cf.quotients[0] - 1);  // sigma = [0, 1+d_1, d_2, ...]
    for (std::size_t i = 1; i < cf.quotients.size(); ++i) ds.push_back(cf.quotients[i]);
    // build only as deep as needed; keep the full quotient list so that
    // d_{n+1} is known one past the highest built level
    std::size_t m = 0;
    {
        std::size_t len1 = 1, len2 = 1;  // |s_0|, |s_{-1}|
        while (m + 1 < ds.size() && len1 < min_length) {
            unsigned long k = ds[m].fits_ulong_p() ? ds[m].get_ui() : 0;
            std::size_t next = len1 * k + len2;
            len2 = len1;
            len1 = next;
            ++m;
        }
    }
    return StandardWordTower(std::move(ds), m);
}

std::vector<Word> bispecial_candidates(const StandardWordTower& tower, std::size_t n,
                                       std::size_t max_k) {
    if (max_k < 1) throw InvalidQuotient("max_k must be >= 1");
    if (n + 1 <= tower.num_quotients() && mpz_class((long)max_k) > tower.d(n + 1))
        throw InvalidQuotient("max_k exceeds d_{n+1}");
    const Word& sn = tower.s((long)n);
    const Word& sn1 = tower.s((long)n - 1);
    std::vector<Word> out;
    std::string block;
    for (std::size_t k = 1; k <= max_k; ++k) {
        block += sn.str();
        std::string full = block + sn1.str();
        if (full.size() < 2) throw TooShort("block shorter than two letters");
        out.emplace_back(Word(full.substr(0, full.size() - 2)));
    }
    return out;
}

std::pair<Word, Word> christoffel_pair(const Word& b) {
    return {Word("0" + b.str() + "1"), Word("1" + b.str() + "0")};
}

std::vector<std::size_t> christoffel_lengths(const ExactReal& sigma, std::size_t n_max) {
    if (sigma.is_rational()) throw RationalSlope();
    if (n_max < 1) throw LengthOutOfRange("n_max must be >= 1");
    std::vector<std::size_t> out;
    ExactReal p = sigma.frac();
    ExactReal lo = p, hi = p;
    out.push_back(1);  // vacuous condition at n = 1
    for (std::size_t n = 2; n <= n_max; ++n) {
        p = (p + sigma).frac();
        if (p.cmp(lo) < 0) {
            lo = p;
            out.push_back(n);
        } else if (p.cmp(hi) > 0) {
            hi = p;
            out.push_back(n);
        }
    }
    return out;
}

std::set<std::size_t> tower_block_lengths(const StandardWordTower& tower, std::size_t max_len) {
    std::set<std::size_t> out;
    out.insert(1);  // the single-letter prefix, the degenerate Christoffel case
    for (std::size_t n = 0; n <= tower.levels() && n + 1 <= tower.num_quotients(); ++n) {
        std::size_t sn = tower.s((long)n).size();
        std::size_t sn1 = tower.s((long)n - 1).size();
        const mpz_class& dmax = tower.d(n + 1);
        mpz_class k = 1;
        while (k <= dmax) {
            mpz_class len = k * (long)sn + (long)sn1;
            if (len > (long)max_len) break;
            out.insert(len.get_ui());
            ++k;
        }
    }
    return out;
}

Factorization factorize(const Word& s_prefix, const StandardWordTower& tower, std::size_t level) {
    const std::string& s = s_prefix.str();
    const Word& sn = tower.s((long)level);
    const Word& sn1 = tower.s((long)level - 1);
    const mpz_class& dq = tower.d(level + 1);
    if (!dq.fits_ulong_p()) throw InvalidQuotient("quotient too large");
    std::size_t dv = dq.get_ui();

    std::string b_lo, b_hi;  // s_n^d s_{n-1} and s_n^{d+1} s_{n-1}
    for (std::size_t i = 0; i < dv; ++i) b_lo += sn.str();
    b_lo += sn1.str();
    b_hi = sn.str() + b_lo;

    const std::size_t len = s.size();
    auto matches = [&](std::size_t pos, const std::string& blk) {
        return pos + blk.size() <= len && s.compare(pos, blk.size(), blk) == 0;
    };
    auto residue_ok = [&](std::size_t pos) {
        std::size_t rem = len - pos;
        if (rem < b_lo.size() && b_lo.compare(0, rem, s, pos, rem) == 0) return true;
        if (rem < b_hi.size() && b_hi.compare(0, rem, s, pos, rem) == 0) return true;
        return false;
    };

    std::vector<char> ok(len + 1, 0);
    ok[len] = 1;
    for (std::size_t pos = len; pos-- > 0;) {
        if (residue_ok(pos)) {
            ok[pos] = 1;
        } else if (matches(pos, b_hi) && ok[pos + b_hi.size()]) {
            ok[pos] = 1;
        } else if (matches(pos, b_lo) && ok[pos + b_lo.size()]) {
            ok[pos] = 1;
        }
    }

    std::size_t p_len = len + 1;
    for (std::size_t cand = 0; cand <= std::min(b_hi.size(), len); ++cand) {
        if (ok[cand]) {
            p_len = cand;
            break;
        }
    }
    if (p_len > len) throw ParseFailure("prefix does not admit the block decomposition");

    Factorization f;
    f.prefix = Word(s.substr(0, p_len));
    std::size_t pos = p_len;
    while (pos < len) {
        if (matches(pos, b_hi) && ok[pos + b_hi.size()]) {  // greedy: longest run of s_n
            f.exponents.push_back(dv + 1);
            pos += b_hi.size();
        } else if (matches(pos, b_lo) && ok[pos + b_lo.size()]) {
            f.exponents.push_back(dv);
            pos += b_lo.size();
        } else {
            break;
        }
    }
    f.residue = Word(s.substr(pos));
    return f;
}

mpq_class frequency_report(const Word& w) {
    if (w.empty()) throw LengthOutOfRange("word must be non-empty");
    mpq_class q((long)w.ones(), (long)w.size());
    q.canonicalize();
    return q;
}

}  // namespace sturmlab
