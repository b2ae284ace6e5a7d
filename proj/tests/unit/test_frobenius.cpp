#include "modecert/frobenius.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <random>

using namespace modecert;

namespace {

UPoly seriesPoly(const std::vector<GaussianRational>& coeffs) {
    return UPoly(std::vector<GaussianRational>(coeffs.begin(), coeffs.end()));
}

// residual of a truncated series: all coefficients of the weighted operator
// image must vanish through the stated order
void checkResidualVanishes(const UPoly& series, const GaussianRational& lam, size_t order) {
    UPoly res = weightedOdeOperator(series, lam);
    for (size_t k = 0; k <= order; ++k) {
        INFO("coefficient of t^", k);
        CHECK(res[k] == GaussianRational(0));
    }
}

}  // namespace

TEST_CASE("series at zero: first coefficients and residual") {
    GaussianRational lam(Rational(1, 3), Rational(2, 7));
    SeriesCoefficients s = seriesAtZero(lam, 14, Normalization::ValueLambda);
    // c_0 = lambda, c_1 = lambda^2/4 + 3 lambda/4 - 1/2
    CHECK(s.values[0] == lam);
    GaussianRational c1 = lam * lam * GaussianRational(Rational(1, 4)) +
                          lam * GaussianRational(Rational(3, 4)) - GaussianRational(Rational(1, 2));
    CHECK(s.values[1] == c1 * lam);  // ValueLambda scales the unit-normalized series
    checkResidualVanishes(seriesPoly(s.values), lam, 12);

    SeriesCoefficients u = seriesAtZero(lam, 14, Normalization::ValueOne);
    CHECK(u.values[0] == GaussianRational(Rational(1)));
    CHECK(u.values[1] == c1 / lam);
    checkResidualVanishes(seriesPoly(u.values), lam, 12);
}

TEST_CASE("series at zero: symbolic matches pointwise") {
    std::mt19937_64 rng(414);
    SeriesCoefficients sym = seriesAtZeroSymbolic(10, Normalization::ValueOne);
    SeriesCoefficients symL = seriesAtZeroSymbolic(10, Normalization::ValueLambda);
    for (int trial = 0; trial < 10; ++trial) {
        GaussianRational lam = oracle::randomGaussian(rng, 3);
        if (lam.isZero()) continue;
        SeriesCoefficients val = seriesAtZero(lam, 10, Normalization::ValueOne);
        for (int n = 0; n <= 10; ++n) {
            CHECK(sym.symbolic[n].evaluate(lam) == val.values[n]);
            CHECK(symL.symbolic[n].evaluate(lam) == val.values[n] * lam);
        }
    }
    // the lambda-normalized series has no pole at lambda = 0
    GaussianRational atZero = symL.symbolic[5].evaluate(GaussianRational(Rational(0)));
    CHECK(atZero == atZero);  // evaluation just has to succeed
}

TEST_CASE("series at one: b_0, b_1 and residual in the s variable") {
    // b_1 = (lambda^2 + 3 lambda - 14)/10
    std::vector<UPoly> b = seriesAtOneSymbolic(12);
    CHECK(b[0] == UPoly(GaussianRational(Rational(1))));
    UPoly expect(std::vector<GaussianRational>{GaussianRational(Rational(-7, 5)),
                                               GaussianRational(Rational(3, 10)),
                                               GaussianRational(Rational(1, 10))});
    CHECK(b[1] == expect);

    // H(t) = sum b_n (1-t)^n solves the equation: substitute t -> 1 - s and
    // check the residual of the t-polynomial
    GaussianRational lam(Rational(2, 5), Rational(3, 2));
    SeriesCoefficients vals = seriesAtOne(lam, 14);
    // build sum b_n (1-t)^n as a polynomial in t
    BivarPoly acc;
    BivarPoly oneMinusT = BivarPoly(GaussianRational(Rational(1))) - BivarPoly::tPower(1);
    BivarPoly pw(GaussianRational(Rational(1)));
    for (size_t n = 0; n < vals.values.size(); ++n) {
        acc += pw * BivarPoly(vals.values[n]);
        pw *= oneMinusT;
    }
    UPoly Ht = acc.atLambda(lam);
    UPoly res = weightedOdeOperator(Ht, lam);
    // residual must vanish to matching order at t=1: check low coefficients
    // of the expansion in (1-t), i.e. evaluate derivatives via recentering
    BivarPoly resB{std::vector<UPoly>(res.coeffs().size())};
    // recenter res at t=1: res(1 + u) coefficients in u
    UPoly shifted = res.composeAffine(GaussianRational(Rational(1)), GaussianRational(Rational(1)));
    for (size_t k = 0; k + 2 < vals.values.size(); ++k) {
        INFO("coefficient of (t-1)^", k);
        CHECK(shifted[k] == GaussianRational(0));
    }
}

TEST_CASE("ratio bounds match the quoted samples") {
    // q_n at the top right corner has modulus < 1 for n >= 2
    GaussianRational corner(Rational(1, 2), Rational(4));
    for (long n = 2; n <= 40; ++n) {
        GaussianRational q = ratioAtOne(n, corner);
        CHECK(q.absSquared() < Rational(1));
    }
}

TEST_CASE("transformed series: base cases and symbolic identity") {
    std::vector<UPoly> c = transformedSeriesSymbolic(12);
    CHECK(c[0].isZero());
    CHECK(c[1] == UPoly(GaussianRational(Rational(1))));
    // c_2 = (lambda^2 + 8 lambda - 9)/20
    UPoly expect(std::vector<GaussianRational>{GaussianRational(Rational(-9, 20)),
                                               GaussianRational(Rational(8, 20)),
                                               GaussianRational(Rational(1, 20))});
    CHECK(c[2] == expect);
    // three-term relation holds exactly for symbolic lambda
    for (long n = 0; n + 2 <= 12; ++n) {
        UPoly lhs = c[n + 2].scaled(GaussianRational(recP2(n))) + recP1Symbolic(n) * c[n + 1] +
                    recP0Symbolic(n) * c[n];
        CHECK(lhs.isZero());
    }
    // degree of c_10 is 18
    CHECK(c[10].degree() == 18);
    CHECK(c[11].degree() == 20);
}

TEST_CASE("ratio sequence identity and asymptotics") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 5; ++trial) {
        GaussianRational lam = oracle::randomGaussian(rng, 3);
        lam.im += Rational(5);  // keep away from real-axis degeneracies
        std::vector<GaussianRational> r = ratioSequence(lam, 1, 40);
        for (int n = 1; n + 1 <= 40; ++n) {
            auto [An, Bn] = recAnBn(n, lam);
            GaussianRational lhs = r[n - 1] * (An + r[n]) + Bn;
            CHECK(lhs == GaussianRational(0));
        }
    }

    // for a generic lambda the ratios approach 1 or 1/2
    GaussianRational lam(Rational(1, 4), Rational(5));
    std::vector<GaussianRational> r = ratioSequence(lam, 150, 200);
    GaussianRational last = r.back();
    Rational d1 = (last - GaussianRational(Rational(1))).absSquared();
    Rational dHalf = (last - GaussianRational(Rational(1, 2))).absSquared();
    CHECK(min(d1, dHalf) < Rational(1, 100));
}

TEST_CASE("A_n, B_n limits and factorization") {
    GaussianRational lam(Rational(1, 3), Rational(7));
    auto [A, B] = recAnBn(1000000, lam);
    CHECK((A + GaussianRational(Rational(3, 2))).absSquared() < Rational(1, 10000));
    CHECK((B - GaussianRational(Rational(1, 2))).absSquared() < Rational(1, 10000));

    // p0(n) = (2n + lambda - 3)(2n + lambda + 3)
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        GaussianRational l = oracle::randomGaussian(rng, 4);
        long n = 1 + static_cast<long>(rng() % 50);
        GaussianRational twoN(Rational(2 * n));
        GaussianRational expect = (twoN + l - GaussianRational(Rational(3))) *
                                  (twoN + l + GaussianRational(Rational(3)));
        CHECK(recP0(n, l) == expect);
    }
    // p0 has no roots with real part in [0, 1/2] for n >= 1
    for (long n = 1; n <= 100; ++n) {
        Rational root1 = Rational(3 - 2 * n);   // lambda = 3 - 2n
        Rational root2 = Rational(-3 - 2 * n);  // lambda = -3 - 2n
        bool root1InStrip = Rational(0) <= root1 && root1 <= Rational(1, 2);
        bool root2InStrip = Rational(0) <= root2 && root2 <= Rational(1, 2);
        CHECK_FALSE(root1InStrip);
        CHECK_FALSE(root2InStrip);
    }
}

TEST_CASE("ratio sequence reports vanishing coefficients") {
    // at lambda = 1 the series terminates: c_2 = 0
    CHECK_THROWS_AS(ratioSequence(GaussianRational(Rational(1)), 1, 10), std::domain_error);
}
