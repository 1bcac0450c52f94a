#include "sturmlab/exactreal.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using sturmlab::ExactReal;

namespace {
ExactReal surd(long a, long b, long c, long d) {
    return ExactReal(mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d));
}
}  // namespace

TEST_CASE("comparison against hand-derived signs") {
    // 3*sqrt(2) vs 4: 18 > 16
    CHECK(surd(0, 1, 4, 2).cmp(ExactReal(mpz_class(1), mpz_class(3))) > 0);
    CHECK(ExactReal(mpz_class(1), mpz_class(2)) == ExactReal(mpz_class(1), mpz_class(2)));
    // 3*sqrt(5) vs 7: 45 < 49
    CHECK(surd(-1, 1, 2, 5).cmp(ExactReal(mpz_class(2), mpz_class(3))) < 0);
}

TEST_CASE("trichotomy on same-field pairs") {
    ExactReal x = surd(1, 2, 3, 5), y = surd(2, 1, 2, 5);
    int c1 = x.cmp(y), c2 = y.cmp(x);
    CHECK(c1 == -c2);
    CHECK(x.cmp(x) == 0);
}

TEST_CASE("mixed radicands rejected, rationals mix freely") {
    CHECK_THROWS_AS(surd(0, 1, 1, 2).cmp(surd(0, 1, 1, 3)), sturmlab::MixedRadicands);
    CHECK(surd(0, 1, 2, 2).cmp(ExactReal(0)) > 0);
}

TEST_CASE("floor and frac") {
    // frac((1+sqrt5)/2) = (sqrt5-1)/2
    ExactReal golden = surd(1, 1, 2, 5);
    CHECK(golden.floor() == 1);
    CHECK(golden.frac() == surd(-1, 1, 2, 5));
    CHECK(ExactReal(mpz_class(3), mpz_class(4)).frac() == ExactReal(mpz_class(3), mpz_class(4)));
    CHECK(ExactReal(mpz_class(-1), mpz_class(4)).floor() == -1);
    CHECK(ExactReal(mpz_class(-1), mpz_class(4)).frac() == ExactReal(mpz_class(3), mpz_class(4)));
}

TEST_CASE("frac_upper convention: zero maps to one") {
    CHECK(ExactReal(2).frac_upper() == ExactReal(1));
    CHECK(surd(0, 1, 4, 2).frac_upper() == surd(0, 1, 4, 2));
    CHECK(ExactReal(mpz_class(-1), mpz_class(4)).frac_upper() ==
          ExactReal(mpz_class(3), mpz_class(4)));
}

TEST_CASE("frac idempotence and shift invariance") {
    ExactReal xs[] = {surd(7, -3, 5, 2), ExactReal(mpz_class(-9), mpz_class(4)), surd(0, 2, 3, 5)};
    for (const ExactReal& x : xs) {
        CHECK(x.frac().frac() == x.frac());
        CHECK((x + ExactReal(1)).frac() == x.frac());
        CHECK((x - ExactReal(x.floor(), mpz_class(1))) == x.frac());
    }
}

TEST_CASE("arithmetic stays exact and normalized") {
    CHECK(ExactReal(mpz_class(1), mpz_class(3)) + ExactReal(mpz_class(1), mpz_class(6)) ==
          ExactReal(mpz_class(1), mpz_class(2)));
    ExactReal g = surd(-1, 1, 2, 5);
    CHECK(g + g == surd(-1, 1, 1, 5));
    CHECK(surd(0, 1, 4, 2) + ExactReal(mpz_class(1), mpz_class(2)) == surd(2, 1, 4, 2));
    CHECK(g.scale(mpq_class(2)) == surd(-1, 1, 1, 5));
}

TEST_CASE("continued fraction expansions") {
    auto cf = ExactReal::cf_expansion(surd(-1, 1, 2, 5), 5);
    REQUIRE(cf.quotients.size() == 5);
    for (const auto& q : cf.quotients) CHECK(q == 1);
    CHECK_FALSE(cf.terminated);

    auto third = ExactReal::cf_expansion(ExactReal(mpz_class(1), mpz_class(3)), 5);
    REQUIRE(third.quotients.size() == 1);
    CHECK(third.quotients[0] == 3);
    CHECK(third.terminated);

    auto rt = ExactReal::cf_expansion(surd(0, 1, 4, 2), 4);
    REQUIRE(rt.quotients.size() == 4);
    CHECK(rt.quotients[0] == 2);
    CHECK(rt.quotients[1] == 1);
    CHECK(rt.quotients[2] == 4);
    CHECK(rt.quotients[3] == 1);
}

TEST_CASE("parse and format round trips") {
    ExactReal golden = ExactReal::parse("(1+1*sqrt(5))/2");
    CHECK(golden == surd(1, 1, 2, 5));
    CHECK(ExactReal::parse("3/4") == ExactReal(mpz_class(3), mpz_class(4)));
    CHECK(ExactReal::parse(ExactReal::parse("(2+2*sqrt(8))/4").format()).format() ==
          "(1+2*sqrt(2))/2");
    CHECK(ExactReal::parse("(-1+1*sqrt(5))/2") == surd(-1, 1, 2, 5));
    CHECK(ExactReal::parse(" ( -1 + 1*sqrt(5) ) / 2 ") == surd(-1, 1, 2, 5));
    CHECK_THROWS_AS(ExactReal::parse("sqrt(2)"), sturmlab::SyntaxError);
    CHECK_THROWS_AS(ExactReal::parse("1.5"), sturmlab::SyntaxError);

    ExactReal vals[] = {surd(-3, 7, 11, 10), ExactReal(mpz_class(22), mpz_class(-7)),
                        ExactReal(5), surd(2, -1, 3, 13)};
    for (const ExactReal& v : vals) CHECK(ExactReal::parse(v.format()) == v);
}

TEST_CASE("randomized comparison agrees with high-precision decimals") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coef(-50, 50), den(1, 50);
    const long d = 5;
    for (int iter = 0; iter < 1000; ++iter) {
        long a1 = coef(rng), b1 = coef(rng), c1 = den(rng);
        long a2 = coef(rng), b2 = coef(rng), c2 = den(rng);
        ExactReal x = surd(a1, b1, c1, d), y = surd(a2, b2, c2, d);
        mpf_class fx = oracle::decimal_value(a1, b1, c1, d);
        mpf_class fy = oracle::decimal_value(a2, b2, c2, d);
        int expected = fx < fy ? -1 : (fx > fy ? 1 : 0);
        CHECK(x.cmp(y) == expected);
    }
}

TEST_CASE("field closure under add/sub/scale") {
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<long> coef(-20, 20), den(1, 20);
    for (int iter = 0; iter < 200; ++iter) {
        ExactReal x = surd(coef(rng), coef(rng), den(rng), 2);
        ExactReal y = surd(coef(rng), coef(rng), den(rng), 2);
        ExactReal s = x + y, df = x - y, sc = x.scale(mpq_class(3, 7));
        CHECK((s - y) == x);
        CHECK((df + y) == x);
        CHECK(sc.scale(mpq_class(7, 3)) == x);
    }
}
