#include "sturmlab/permutation.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturmlab/constructions.hpp"

using namespace sturmlab;

namespace {
ExactReal rat(long n, long d = 1) { return ExactReal(mpz_class(n), mpz_class(d)); }

Representative rep_of(std::initializer_list<std::pair<long, long>> fracs) {
    std::vector<ExactReal> v;
    for (auto [n, d] : fracs) v.push_back(rat(n, d));
    return Representative(std::move(v));
}
}  // namespace

TEST_CASE("pattern of a value window") {
    Representative r = rep_of({{1, 10}, {-1, 2}, {0, 1}, {-1, 10}});
    CHECK(pattern_of(r.values()) == Pattern{{4, 1, 3, 2}});
    CHECK(pattern_of(r, 1, 3) == Pattern{{1, 3, 2}});
    CHECK(pattern_of(r, 0, 1) == Pattern{{1}});
}

TEST_CASE("pattern string round trip") {
    Pattern p{{4, 1, 3, 2}};
    CHECK(p.to_string() == "4,1,3,2");
    CHECK(Pattern::parse("4,1,3,2") == p);
    CHECK(Pattern::parse(" 2 , 1 ") == Pattern{{2, 1}});
    CHECK_THROWS_AS(Pattern::parse("1,x"), SyntaxError);
    CHECK_THROWS_AS(Pattern::parse(""), SyntaxError);
    CHECK_THROWS_AS(Pattern::parse("1,3"), SyntaxError);  // not a bijection onto 1..n
    CHECK_THROWS_AS(Pattern::parse("1,1"), SyntaxError);
}

TEST_CASE("representative rejects repeated values") {
    CHECK_THROWS_AS(rep_of({{1, 2}, {2, 4}}), DuplicateValue);
    CHECK_NOTHROW(rep_of({{1, 2}, {1, 3}}));
}

TEST_CASE("patterns are invariant under order-preserving maps") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<ExactReal> a, b;
        std::set<long> seen;
        for (int i = 0; i < 12; ++i) {
            long x = (long)(rng() % 4096);
            while (seen.count(x)) x = (long)(rng() % 4096);
            seen.insert(x);
            a.push_back(rat(x, 4096));
            b.push_back(rat(3 * 4096 * 1000 + x, 3 * 4096));  // x -> 1000 + x/3
        }
        CHECK(pattern_of(a) == pattern_of(b));
    }
}

TEST_CASE("window complexity agrees with all-pairs brute force") {
    std::mt19937_64 rng(5);
    std::vector<ExactReal> v;
    std::set<long> seen;
    for (int i = 0; i < 300; ++i) {
        long x = (long)(rng() % 100000);
        while (seen.count(x)) x = (long)(rng() % 100000);
        seen.insert(x);
        v.push_back(rat(x, 100000));
    }
    Representative r(std::move(v));
    ComplexityProfile p = perm_complexity_profile(r, 6);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(p[n] == oracle::brute_pattern_count(r.global_ranks(), n));
    CHECK(p == perm_complexity_profile_serial(r, 6));
}

TEST_CASE("sturmian permutation has complexity n") {
    Representative r =
        sturmian_representative(ExactReal::parse("(-1+1*sqrt(5))/2"), ExactReal(0), 3000);
    ComplexityProfile p = perm_complexity_profile(r, 30);
    for (std::size_t n = 2; n <= 30; ++n) CHECK(p[n] == n);
}

TEST_CASE("underlying word flags descents") {
    Representative r = rep_of({{1, 10}, {-1, 2}, {0, 1}, {-1, 10}});
    CHECK(underlying_word(r) == Word("101"));
    CHECK_THROWS_AS(underlying_word(rep_of({{1, 2}})), LengthOutOfRange);
}

TEST_CASE("greedy chain picks extremes of the next N positions") {
    // 0.9 0.1 0.8 0.2 0.7 0.3 : greedy decreasing with N=2 takes 0,2,4
    Representative r = rep_of({{9, 10}, {1, 10}, {8, 10}, {2, 10}, {7, 10}, {3, 10}});
    GreedyChain g = greedy_monotone_chain(r, 2, Direction::decreasing);
    CHECK(g.indices == std::vector<std::size_t>{0, 2, 4});
    CHECK(g.monotone);
    GreedyChain inc = greedy_monotone_chain(r, 2, Direction::increasing);
    CHECK(inc.indices == std::vector<std::size_t>{1, 3, 5});
    CHECK(inc.monotone);
}

TEST_CASE("longest chain DP agrees with quadratic brute force") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<ExactReal> v;
        std::set<long> seen;
        std::size_t len = 20 + rng() % 120;
        for (std::size_t i = 0; i < len; ++i) {
            long x = (long)(rng() % 100000);
            while (seen.count(x)) x = (long)(rng() % 100000);
            seen.insert(x);
            v.push_back(rat(x, 100000));
        }
        Representative r(std::move(v));
        for (std::size_t N : {1, 2, 3, 5}) {
            CHECK(longest_monotone_chain(r, N, Direction::increasing) ==
                  oracle::brute_chain(r.global_ranks(), N, true));
            CHECK(longest_monotone_chain(r, N, Direction::decreasing) ==
                  oracle::brute_chain(r.global_ranks(), N, false));
        }
    }
}

TEST_CASE("N-extremal elements") {
    Representative r = rep_of({{0, 1}, {1, 1}, {1, 2}});
    ExtremalElements e = find_N_extremal(r, 1);
    CHECK(e.maximal == std::vector<std::size_t>{1});
    CHECK(e.minimal.empty());

    // 0.5 0.9 0.1 0.8 0.2 : with N=2 index 2 is not 2-minimal (0.1 < all within 2? yes)
    Representative r2 = rep_of({{5, 10}, {9, 10}, {1, 10}, {8, 10}, {2, 10}});
    ExtremalElements e2 = find_N_extremal(r2, 2);
    CHECK(e2.minimal == std::vector<std::size_t>{2});
    CHECK(e2.maximal.empty());
}

TEST_CASE("canonical estimate is the normalized global rank") {
    Representative r = rep_of({{1, 2}, {1, 4}, {3, 4}});
    CHECK(canonical_estimate(r, 0) == mpq_class(1, 3));
    CHECK(canonical_estimate(r, 1) == mpq_class(0));
    CHECK(canonical_estimate(r, 2) == mpq_class(2, 3));
    CHECK_THROWS_AS(canonical_estimate(r, 3), IndexOutOfRange);
}

TEST_CASE("permutation period detection") {
    // alternating sign-decay sequence: order structure has period 2
    Representative alt = example1_representative(400, Example1Variant::a);
    auto p = detect_perm_period(alt, 5);
    REQUIRE(p.has_value());
    CHECK(p->period == 2);
    CHECK(p->preperiod == 0);

    Representative sturm =
        sturmian_representative(ExactReal::parse("(0+1*sqrt(2))/4"), ExactReal(0), 400);
    CHECK_FALSE(detect_perm_period(sturm, 20).has_value());
}

TEST_CASE("equivalence compares order structure only") {
    Representative a = example1_representative(200, Example1Variant::a);
    Representative b = example1_representative(200, Example1Variant::b);
    CHECK(equivalent(a, b));
    CHECK_FALSE(equivalent(rep_of({{1, 2}, {1, 3}}), rep_of({{1, 3}, {1, 2}})));
    CHECK_THROWS_AS(equivalent(a, rep_of({{1, 2}, {1, 3}})), LengthMismatch);
}
