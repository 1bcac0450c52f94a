#include "sturmlab/constructions.hpp"

#include <queue>

namespace sturmlab {

Representative sturmian_representative(const ExactReal& sigma, const ExactReal& rho,
                                       std::size_t L) {
    if (sigma.is_rational()) throw RationalSlope();
    if (L < 1) throw LengthOutOfRange("L must be >= 1");
    SturmianSpec spec(sigma, rho);  // range check on sigma
    std::vector<ExactReal> vals;
    vals.reserve(L);
    ExactReal p = rho.frac();
    for (std::size_t n = 0; n < L; ++n) {
        vals.push_back(p);
        p = (p + sigma).frac();
    }
    return Representative(std::move(vals));
}

Representative thue_morse_representative(std::size_t L) {
    if (L < 1) throw LengthOutOfRange("L must be >= 1");
    mpq_class half(1, 2), quarter(1, 4), three_quarters(3, 4);
    std::vector<mpq_class> seq{half};
    while (seq.size() < L) {
        std::vector<mpq_class> next;
        next.reserve(2 * seq.size());
        for (const mpq_class& x : seq) {
            mpq_class h = x / 2;
            next.push_back(h + quarter);
            next.push_back(x <= half ? mpq_class(h + three_quarters) : mpq_class(h - quarter));
        }
        seq = std::move(next);
    }
    seq.resize(L);
    std::vector<ExactReal> vals;
    vals.reserve(L);
    for (const mpq_class& q : seq) vals.push_back(ExactReal::rational(q));
    return Representative(std::move(vals));
}

Representative example1_representative(std::size_t L, Example1Variant variant) {
    if (L < 1) throw LengthOutOfRange("L must be >= 1");
    mpq_class ratio = variant == Example1Variant::a ? mpq_class(-1, 2) : mpq_class(-1, 3);
    mpq_class offset = variant == Example1Variant::a ? mpq_class(0) : mpq_class(1000);
    std::vector<ExactReal> vals;
    vals.reserve(L);
    mpq_class pw(1);
    for (std::size_t n = 0; n < L; ++n) {
        vals.push_back(ExactReal::rational(offset + pw));
        pw *= ratio;
    }
    return Representative(std::move(vals));
}

namespace {
mpq_class stair(const mpz_class& n) {  // e_n = n/(n+1)
    mpq_class q(n, n + 1);
    q.canonicalize();
    return q;
}
}  // namespace

Representative slow_complexity_representative(const std::vector<mpz_class>& nk, std::size_t L) {
    if (L < 1) throw LengthOutOfRange("L must be >= 1");
    for (std::size_t i = 0; i < nk.size(); ++i) {
        if (nk[i] < 1 || (i > 0 && nk[i] <= nk[i - 1])) throw NotStrictlyIncreasing();
    }
    std::vector<ExactReal> vals;
    vals.reserve(L);
    for (std::size_t pos = 0; pos < L; ++pos) {
        if (pos % 2 == 0) {
            vals.push_back(ExactReal::rational(stair(mpz_class((long)(pos / 2)))));
        } else {
            std::size_t k = (pos + 1) / 2;  // pos = 2k-1
            if (k > nk.size()) throw OutOfRange("nk sequence too short for requested length");
            mpq_class lo = stair(nk[k - 1] - 1), hi = stair(nk[k - 1]);
            vals.push_back(ExactReal::rational((lo + hi) / 2));
        }
    }
    return Representative(std::move(vals));
}

Representative realize(const OrderConstraintSet& constraints) {
    const std::size_t n = constraints.size;
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& [i, j] : constraints.less) {
        if (i >= n || j >= n || i == j) throw CycleDetected();
        succ[i].push_back(j);
        indeg[j]++;
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<mpq_class> vals(n);
    mpq_class last(0);
    std::size_t placed = 0;
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        last = (last + 1) / 2;  // above everything placed so far
        vals[i] = last;
        ++placed;
        for (std::size_t j : succ[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (placed != n) throw CycleDetected();
    std::vector<ExactReal> out;
    out.reserve(n);
    for (const mpq_class& q : vals) out.push_back(ExactReal::rational(q));
    return Representative(std::move(out));
}

}  // namespace sturmlab
