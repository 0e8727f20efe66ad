#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quasihom/factor.hpp"
#include "quasihom/gaussian.hpp"

using namespace qh;

namespace {

std::mt19937 rng(20240917);

Rational random_rational(long max_abs) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

GaussianRational random_gaussian(long max_abs) {
    return {random_rational(max_abs), random_rational(max_abs)};
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).num() == -1);
    CHECK(Rational(-2, 4).den() == 2);
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7, 1).str() == "7");
    CHECK(Rational(-3, 9).str() == "-1/3");
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("-5/10") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("modulus squared examples") {
    GaussianRational half_i(Rational(0), Rational(1, 2));
    CHECK(half_i.modulus_squared() == Rational(1, 4));
    CHECK(GaussianRational(0).modulus_squared() == Rational(0));
    GaussianRational z(Rational(-1, 2), Rational(1, 2));
    CHECK(z.modulus_squared() == Rational(1, 2));
}

TEST_CASE("power examples") {
    GaussianRational half_i(Rational(0), Rational(1, 2));
    CHECK(power(half_i, 2) == GaussianRational(Rational(-1, 4)));
    GaussianRational anything(Rational(3, 7), Rational(-2, 5));
    CHECK(power(anything, 0).is_one());
    CHECK(power(GaussianRational(Rational(1, 2)), -1) == GaussianRational(2));
    CHECK_THROWS_AS(power(GaussianRational(0), -1), Error);
}

TEST_CASE("modulus squared is multiplicative") {
    for (int t = 0; t < 300; ++t) {
        GaussianRational a = random_gaussian(50), b = random_gaussian(50);
        CHECK((a * b).modulus_squared() == a.modulus_squared() * b.modulus_squared());
    }
}

TEST_CASE("power is additive in the exponent") {
    std::uniform_int_distribution<long> exps(-4, 4);
    for (int t = 0; t < 100; ++t) {
        GaussianRational z = random_gaussian(9);
        if (z.is_zero()) continue;
        long a = exps(rng), b = exps(rng);
        CHECK(power(z, a + b) == power(z, a) * power(z, b));
    }
}

TEST_CASE("factor: unit and prime conventions") {
    GaussianFactorization f2 = factor(GaussianRational(2));
    CHECK(f2.unit() == -GaussianRational::i());
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].prime == GaussianRational(Rational(1), Rational(1)));
    CHECK(f2.factors[0].exponent == 2);

    GaussianFactorization fi = factor(GaussianRational::i());
    CHECK(fi.unit() == GaussianRational::i());
    CHECK(fi.factors.empty());

    GaussianFactorization fh = factor(GaussianRational(Rational(1, 2)));
    CHECK(fh.unit() == GaussianRational::i());
    REQUIRE(fh.factors.size() == 1);
    CHECK(fh.factors[0].prime == GaussianRational(Rational(1), Rational(1)));
    CHECK(fh.factors[0].exponent == -2);

    CHECK_THROWS_AS(factor(GaussianRational(0)), Error);
}

TEST_CASE("factor: canonical associates are pairwise distinct primes") {
    GaussianFactorization f = factor(GaussianRational(5));
    REQUIRE(f.factors.size() == 2);  // 5 = (2+i)(2-i) up to a unit
    CHECK(f.factors[0].prime == GaussianRational(Rational(2), Rational(-1)));
    CHECK(f.factors[1].prime == GaussianRational(Rational(2), Rational(1)));
    CHECK(f.value() == GaussianRational(5));
}

TEST_CASE("factor round trip on random Gaussian rationals") {
    std::uniform_int_distribution<long> small(-1000, 1000);
    std::uniform_int_distribution<long> large(-1000000, 1000000);
    std::uniform_int_distribution<long> denom(1, 1000000);
    for (int t = 0; t < 1000; ++t) {
        bool big = t % 10 == 0;
        long re_n = big ? large(rng) : small(rng);
        long im_n = big ? large(rng) : small(rng);
        long d = big ? denom(rng) : (std::abs(small(rng)) + 1);
        GaussianRational z(Rational(re_n, d), Rational(im_n, d));
        if (z.is_zero()) continue;
        GaussianFactorization f = factor(z);
        CHECK(f.value() == z);
        for (size_t k = 1; k < f.factors.size(); ++k) {
            CHECK(!(f.factors[k - 1].prime == f.factors[k].prime));
        }
    }
}

TEST_CASE("gaussian rational text round trip") {
    const char* cases[] = {"0",   "2",      "-3/4",      "i",          "-i",
                           "1/2*i", "2+3*i", "1/2-1/3*i", "-2/7+1/9*i", "5-i"};
    for (const char* c : cases) {
        GaussianRational z = GaussianRational::parse(c);
        CHECK(GaussianRational::parse(z.str()) == z);
        CHECK(z.str() == c);
    }
    CHECK(GaussianRational::parse("2/1") == GaussianRational(2));
    CHECK(GaussianRational::parse(" 1/2 + 1/2*i ") ==
          GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK_THROWS_AS(GaussianRational::parse("junk"), Error);
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), Error);
}
