#include "modecert/gaussian.hpp"
#include "modecert/rational.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <random>

using namespace modecert;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/2") == Rational(-2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-2, 3).denominator() == 3);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational::parse("20543752") == Rational::scaled(20543752, 0));
    CHECK(Rational::scaled(20543752, -7) == Rational(20543752, 10000000));
}

TEST_CASE("rational field laws on random inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Rational a = oracle::randomRational(rng, 50);
        Rational b = oracle::randomRational(rng, 50);
        Rational c = oracle::randomRational(rng, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.isZero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("gaussian rational field laws and absSquared") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        GaussianRational a = oracle::randomGaussian(rng, 20);
        GaussianRational b = oracle::randomGaussian(rng, 20);
        GaussianRational c = oracle::randomGaussian(rng, 20);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.isZero()) CHECK(a / a == GaussianRational(Rational(1)));
        CHECK((a * b).absSquared() == a.absSquared() * b.absSquared());
    }
    CHECK(GaussianRational(Rational(3, 5), Rational(4, 5)).absSquared() == Rational(1));
    CHECK(GaussianRational(Rational(0), Rational(0)).absSquared() == Rational(0));
    CHECK(GaussianRational(Rational(1, 4), Rational(1, 4)).absSquared() == Rational(1, 8));
}

TEST_CASE("gaussian parse matches the table literal format") {
    GaussianRational z = GaussianRational::parse("49/12,43/15");
    CHECK(z.re == Rational(49, 12));
    CHECK(z.im == Rational(43, 15));
    CHECK(GaussianRational::parse("0,0").isZero());
    CHECK(GaussianRational::parse("-9/26,-7/80") == GaussianRational(Rational(-9, 26), Rational(-7, 80)));
}

TEST_CASE("simplest rational in interval") {
    CHECK(Rational::simplestInInterval(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(Rational::simplestInInterval(Rational(-1, 10), Rational(1, 10)) == Rational(0));
    CHECK(Rational::simplestInInterval(Rational(31, 10), Rational(33, 10)) == Rational(32, 10));
    // lies inside and has small denominator
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        Rational a = oracle::randomRational(rng, 10, 99991);
        Rational b = a + Rational(1, 1000);
        Rational s = Rational::simplestInInterval(a, b);
        CHECK(a <= s);
        CHECK(s <= b);
        CHECK(s.denominator() <= a.denominator());
    }
}

TEST_CASE("grid rounding is directed") {
    Rational x(987654321, 987654323);
    CHECK(x.gridRoundDown(64) <= x);
    CHECK(x.gridRoundUp(64) >= x);
    CHECK(x.gridRoundUp(64) - x.gridRoundDown(64) <= Rational(2).pow(-63));
}
