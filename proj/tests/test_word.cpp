#include "sturmlab/word.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturmlab/sturmian.hpp"

using namespace sturmlab;

namespace {
ExactReal surd(long a, long b, long c, long d) {
    return ExactReal(mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d));
}
}  // namespace

TEST_CASE("factor extraction") {
    Word w("00100");
    FactorSet whole = factors(w, 5);
    CHECK(whole.members == std::set<Word>{w});
    CHECK(factors(Word("000"), 1).members == std::set<Word>{Word("0")});
    CHECK_THROWS_AS(factors(w, 6), LengthOutOfRange);
    CHECK_THROWS_AS(factors(w, 0), LengthOutOfRange);
}

TEST_CASE("length-5 factors of a long slope sqrt(2)/4 prefix") {
    Word prefix = generate(SturmianSpec(surd(0, 1, 4, 2), ExactReal(0)), 5000);
    std::set<Word> expected{Word("01001"), Word("10010"), Word("00101"),
                            Word("01010"), Word("10100"), Word("00100")};
    CHECK(factors(prefix, 5).members == expected);
}

TEST_CASE("complexity profile basics") {
    Word zeros(std::string(100, '0'));
    ComplexityProfile p = complexity_profile(zeros, 50);
    for (std::size_t n = 1; n <= 50; ++n) CHECK(p[n] == 1);

    std::string alt;
    for (int i = 0; i < 50; ++i) alt += "01";
    ComplexityProfile pa = complexity_profile(Word(alt), 20);
    CHECK(pa[1] == 2);
    for (std::size_t n = 2; n <= 20; ++n) CHECK(pa[n] == 2);
}

TEST_CASE("parallel profile equals serial reference") {
    std::mt19937_64 rng(7);
    std::string s;
    for (int i = 0; i < 4000; ++i) s += (rng() & 1) ? '1' : '0';
    Word w(s);
    CHECK(complexity_profile(w, 40) == complexity_profile_serial(w, 40));
}

TEST_CASE("sturmian prefix has complexity n+1") {
    Word prefix = generate(SturmianSpec(surd(-1, 1, 2, 5), ExactReal(0)), 20000);
    ComplexityProfile p = complexity_profile(prefix, 100);
    for (std::size_t n = 1; n <= 100; ++n) CHECK(p[n] == n + 1);
}

TEST_CASE("special factors") {
    ExactReal slope = surd(0, 1, 4, 2);
    FactorSet f3 = enumerate_factors_exact(slope, 3);
    FactorSet f4 = enumerate_factors_exact(slope, 4);
    SpecialFactors sp = special_factors(f3, f4);
    CHECK(sp.bispecial == std::set<Word>{Word("010")});

    // Sturmian: exactly one right-special and one left-special at each length
    for (std::size_t n = 1; n <= 20; ++n) {
        SpecialFactors s =
            special_factors(enumerate_factors_exact(slope, n), enumerate_factors_exact(slope, n + 1));
        CHECK(s.right_special.size() == 1);
        CHECK(s.left_special.size() == 1);
    }

    FactorSet z5 = factors(Word(std::string(100, '0')), 5);
    FactorSet z6 = factors(Word(std::string(100, '0')), 6);
    CHECK(special_factors(z5, z6).right_special.empty());
    CHECK_THROWS_AS(special_factors(f3, f3), LengthMismatch);
}

TEST_CASE("conjugates") {
    std::set<Word> expected{Word("10100"), Word("01001"), Word("10010"), Word("00101"),
                            Word("01010")};
    CHECK(conjugates(Word("10100")) == expected);
    CHECK(conjugates(Word("0000")) == std::set<Word>{Word("0000")});
    CHECK(is_conjugate(Word("01"), Word("10")));
    CHECK_FALSE(is_conjugate(Word("01"), Word("11")));

    // |conjugates(w)| divides |w|; one-counts constant across the class
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        std::string s;
        std::size_t len = 1 + rng() % 12;
        for (std::size_t i = 0; i < len; ++i) s += (rng() & 1) ? '1' : '0';
        Word w(s);
        auto cj = conjugates(w);
        CHECK(w.size() % cj.size() == 0);
        for (const Word& c : cj) CHECK(c.ones() == w.ones());
    }
}

TEST_CASE("period detection") {
    std::string s = "0";
    for (int i = 0; i < 20; ++i) s += "01";
    auto p = detect_period(Word(s), 10);
    REQUIRE(p.has_value());
    CHECK(p->preperiod == 1);
    CHECK(p->period == 2);

    auto q = detect_period(Word(std::string(10, '0')), 5);
    REQUIRE(q.has_value());
    CHECK(q->preperiod == 0);
    CHECK(q->period == 1);

    Word sturm = generate(SturmianSpec(surd(-1, 1, 2, 5), ExactReal(0)), 2000);
    CHECK_FALSE(detect_period(sturm, 50).has_value());
}

TEST_CASE("period detection agrees with brute-force scan") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t len = 8 + rng() % 193;
        std::string s;
        // bias toward periodic-ish words so both branches get exercised
        std::size_t t = 1 + rng() % 6;
        for (std::size_t i = 0; i < len; ++i) {
            if (i >= t && rng() % 10 > 0)
                s += s[i - t];
            else
                s += (rng() & 1) ? '1' : '0';
        }
        std::size_t t_max = len / 2 < 8 ? len / 2 : 8;
        auto got = detect_period(Word(s), t_max);
        auto want = oracle::brute_period(s, t_max);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->period == want->second);
            CHECK(got->preperiod == want->first);
        }
    }
}

TEST_CASE("occurrences") {
    CHECK(occurrences(Word("01001"), Word("0")) == std::vector<std::size_t>{0, 2, 3});
    CHECK(occurrences(Word("010010"), Word("010")) == std::vector<std::size_t>{0, 3});
    CHECK(occurrences(Word("111"), Word("0")).empty());
}

TEST_CASE("profile is monotone in prefix length") {
    Word full = generate(SturmianSpec(surd(0, 1, 4, 2), ExactReal(0)), 3000);
    ComplexityProfile big = complexity_profile(full, 10);
    ComplexityProfile small = complexity_profile(Word(full.str().substr(0, 500)), 10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(small[n] <= big[n]);
}
