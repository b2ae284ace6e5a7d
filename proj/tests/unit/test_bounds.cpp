#include "modecert/bounds.hpp"
#include "modecert/multipoly.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <random>

using namespace modecert;
using oracle::Float;

namespace {

RPoly randomRPoly(std::mt19937_64& rng, size_t deg, long scale = 6) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = oracle::randomRational(rng, scale, 64);
    return RPoly(std::move(c));
}

}  // namespace

TEST_CASE("cubic extrema on the unit interval") {
    // A(x) = x
    auto [mn1, mx1] = cubicExtremaOnUnitInterval(RPoly::variable());
    CHECK(mn1.contains(Rational(-1)));
    CHECK(mx1.contains(Rational(1)));

    // A(x) = x^3 - 3x: min -2 at x=1, max 2 at x=-1
    RPoly p(std::vector<Rational>{Rational(0), Rational(-3), Rational(0), Rational(1)});
    auto [mn2, mx2] = cubicExtremaOnUnitInterval(p);
    CHECK(mn2.contains(Rational(-2)));
    CHECK(mx2.contains(Rational(2)));
    CHECK(mn2.lo() <= Rational(-2));
    CHECK(mx2.hi() >= Rational(2));

    // 200 random cubics against a dense grid refinement oracle
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 200; ++i) {
        RPoly cubic = randomRPoly(rng, 3);
        auto [mn, mx] = cubicExtremaOnUnitInterval(cubic);
        Float gridMin = oracle::toFloat(cubic.evaluate(Rational(-1)));
        Float gridMax = gridMin;
        const int kGrid = 2000;
        for (int k = 0; k <= kGrid; ++k) {
            Rational x(-kGrid + 2 * k, kGrid);
            Float v = oracle::toFloat(cubic.evaluate(x));
            if (v < gridMin) gridMin = v;
            if (v > gridMax) gridMax = v;
        }
        CHECK(oracle::toFloat(mn.lo()) <= gridMin);
        CHECK(oracle::toFloat(mx.hi()) >= gridMax);
        // enclosures actually contain the grid-refined extrema
        CHECK(gridMin <= oracle::toFloat(mn.hi()) + Float("1e-5"));
        CHECK(gridMax >= oracle::toFloat(mx.lo()) - Float("1e-5"));
    }
}

TEST_CASE("box bound dominates samples and the center value") {
    // constant 3+4i -> bound >= 5 and close to 5
    BivarPoly c(GaussianRational(Rational(3), Rational(4)));
    Rational b = boundOnBox(c, GaussianRational(Rational(1, 4), Rational(1, 4)),
                            Enclosure(Rational(1, 4)));
    CHECK(b >= Rational(5));
    CHECK(b <= Rational(51, 10));

    std::mt19937_64 rng(1618);
    GaussianRational lam0(Rational(1, 4), Rational(1, 4));
    Enclosure radius = sqrtEnclosure(Rational(1, 8), Rational(1, 1000000));
    for (int i = 0; i < 40; ++i) {
        std::vector<UPoly> rows(4);
        for (auto& r : rows) {
            std::vector<GaussianRational> cs(4);
            for (auto& x : cs) x = oracle::randomGaussian(rng, 2, 32);
            r = UPoly(std::move(cs));
        }
        BivarPoly P{std::vector<UPoly>(rows)};
        Rational bound = boundOnBox(P, lam0, radius);
        // samples: x in [-1,1], lambda in the strip-rectangle inside the disk
        for (int k = 0; k < 25; ++k) {
            Rational x = oracle::randomRational(rng, 1);
            GaussianRational lam(oracle::randomRational(rng, 1).abs() * Rational(1, 2),
                                 oracle::randomRational(rng, 1).abs() * Rational(1, 2));
            Rational v = P.evaluate(GaussianRational(x), lam).absSquared();
            CHECK(v <= bound * bound);
        }
        CHECK(P.evaluate(GaussianRational(Rational(0)), lam0).absSquared() <= bound * bound);
    }
}

TEST_CASE("rational function bounds on segments") {
    BoundSettings settings = BoundSettings::paperProfile();

    // F identically 2
    RationalFunctionForm constant;
    constant.poly = UPoly(GaussianRational(Rational(2)));
    BoundarySegment seg = BoundarySegment::betweenEndpoints(GaussianRational(Rational(0), Rational(1, 2)),
                                                            GaussianRational(Rational(0), Rational(4)));
    ModulusBounds b = boundRationalOnSegment(constant, seg, 10, settings);
    CHECK(b.lower <= Rational(2));
    CHECK(b.upper >= Rational(2));
    CHECK(b.lower >= Rational(19, 10));
    CHECK(b.upper <= Rational(21, 10));

    // soundness against samples for a function with poles
    RationalFunctionForm F;
    F.poly = UPoly(std::vector<GaussianRational>{GaussianRational(Rational(1)),
                                                 GaussianRational(Rational(1, 3)),
                                                 GaussianRational(Rational(1, 10))});
    F.poles.push_back({GaussianRational(Rational(-2)), GaussianRational(Rational(3), Rational(1))});
    F.poles.push_back({GaussianRational(Rational(-5)), GaussianRational(Rational(-1), Rational(2))});
    ModulusBounds fb = boundRationalOnSegment(F, seg, 10, settings);
    for (int k = 0; k <= 16; ++k) {
        GaussianRational lam = seg.at(Rational(-16 + 2 * k, 16));
        Rational m2 = F.evaluate(lam).absSquared();
        CHECK(m2 <= fb.upper * fb.upper);
        CHECK(m2 >= fb.lower * fb.lower);
    }

    // pole on the segment disk is a hard error
    RationalFunctionForm bad;
    bad.poly = UPoly(GaussianRational(Rational(1)));
    bad.poles.push_back({GaussianRational(Rational(0), Rational(2)), GaussianRational(Rational(1))});
    CHECK_THROWS_AS(boundRationalOnSegment(bad, seg, 10, settings), std::domain_error);
}

TEST_CASE("polynomial bounds on segments") {
    BoundSettings settings = BoundSettings::paperProfile();
    // P(lambda) = lambda on the real segment [0, 1/2]
    BoundarySegment seg = BoundarySegment::betweenEndpoints(GaussianRational(Rational(0)),
                                                            GaussianRational(Rational(1, 2)));
    ModulusBounds b = boundPolyOnSegment(UPoly::variable(), seg, settings);
    CHECK(b.lower <= Rational(1, 100));
    CHECK(b.upper >= Rational(1, 2));
    CHECK(b.upper <= Rational(6, 10));

    std::mt19937_64 rng(717);
    for (int i = 0; i < 30; ++i) {
        std::vector<GaussianRational> cs(11);
        for (auto& x : cs) x = oracle::randomGaussian(rng, 2, 16);
        UPoly P(std::move(cs));
        ModulusBounds pb = boundPolyOnSegment(P, seg, settings);
        for (int k = 0; k <= 12; ++k) {
            GaussianRational lam = seg.at(Rational(-12 + 2 * k, 12));
            Rational m2 = P.evaluate(lam).absSquared();
            CHECK(m2 <= pb.upper * pb.upper);
            CHECK(m2 >= pb.lower * pb.lower);
        }
    }
}

TEST_CASE("halving a partition never loosens bounds much") {
    BoundSettings settings = BoundSettings::paperProfile();
    RationalFunctionForm F;
    F.poly = UPoly(std::vector<GaussianRational>{GaussianRational(Rational(2)),
                                                 GaussianRational(Rational(0), Rational(1, 4))});
    F.poles.push_back({GaussianRational(Rational(-1)), GaussianRational(Rational(1))});
    BoundarySegment seg = BoundarySegment::betweenEndpoints(GaussianRational(Rational(0), Rational(1)),
                                                            GaussianRational(Rational(0), Rational(3)));
    ModulusBounds whole = boundRationalOnSegment(F, seg, 10, settings);
    ModulusBounds left = boundRationalOnSegment(F, seg.restricted(Rational(-1), Rational(0)), 10, settings);
    ModulusBounds right = boundRationalOnSegment(F, seg.restricted(Rational(0), Rational(1)), 10, settings);
    Rational slack(1, 1000);
    CHECK(max(left.upper, right.upper) <= whole.upper + slack);
    CHECK(min(left.lower, right.lower) + slack >= whole.lower);
}

TEST_CASE("sup of |q| e^h on cells") {
    // q = 1, h = 0
    Rational e0 = supModExpOnInterval(UPoly(GaussianRational(Rational(1))), RPoly(), Rational(1, 1000));
    CHECK(e0 >= Rational(1));
    CHECK(e0 <= Rational(1001, 1000));
    // q = 1, h(x) = x: sup = e at x = 1
    Rational e1 = supModExpOnInterval(UPoly(GaussianRational(Rational(1))), RPoly::variable(),
                                      Rational(1, 1000));
    Float expected = exp(Float(1));
    CHECK(oracle::toFloat(e1) >= expected);
    CHECK(oracle::toFloat(e1) <= expected * Float("1.01"));

    // random quadratic q and h: upper bound dominates a grid oracle
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        std::vector<GaussianRational> qc(3);
        for (auto& x : qc) x = oracle::randomGaussian(rng, 2, 16);
        UPoly q(std::move(qc));
        RPoly h = randomRPoly(rng, 2, 1);
        Rational bound = supModExpOnInterval(q, h, Rational(1, 100));
        for (int k = 0; k <= 40; ++k) {
            Rational x(-40 + 2 * k, 40);
            Float v = sqrt(oracle::toFloat(q.evaluate(GaussianRational(x)).absSquared())) *
                      exp(oracle::toFloat(h.evaluate(x)));
            CHECK(v <= oracle::toFloat(bound) * Float("1.0000001"));
        }
    }
}

TEST_CASE("sign certificates") {
    // t^2 + 1 is positive anywhere
    RPoly p1(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(signCertificateOnInterval(p1, Rational(-100), Rational(380)) == PolySign::NonNegative);
    // t - 100 on [10, 60]
    RPoly p2(std::vector<Rational>{Rational(-100), Rational(1)});
    CHECK(signCertificateOnInterval(p2, Rational(10), Rational(60)) == PolySign::NonPositive);
    // genuinely mixed sign
    CHECK(signCertificateOnInterval(RPoly::variable(), Rational(-1), Rational(1)) ==
          PolySign::Indeterminate);
    // needs the derivative chain or bisection: (t-50)^2 (t+1) + 1/1000 on [10, 380]
    RPoly shifted = RPoly(std::vector<Rational>{Rational(-50), Rational(1)});
    RPoly w = shifted * shifted * RPoly(std::vector<Rational>{Rational(1), Rational(1)});
    w += RPoly(Rational(1, 1000));
    CHECK(certifyNonNegativeOnInterval(w, Rational(10), Rational(380)));
    CHECK_FALSE(certifyNonPositiveOnInterval(w, Rational(10), Rational(380)));
}

TEST_CASE("box positivity certificates") {
    // x^2 + y^2 + z >= 0 on [0,1]^3
    MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1), z = MultiPoly::variable(2);
    MultiPoly p = x * x + y * y + z;
    Box3 box{Enclosure(Rational(0), Rational(1)), Enclosure(Rational(0), Rational(1)),
             Enclosure(Rational(0), Rational(1))};
    CHECK(certifyNonNegativeOnBox(p, box));
    // x*y - 2 <= 0 on [0,1]^2 x [0,1]
    MultiPoly q = x * y - MultiPoly(2);
    CHECK(certifyNonPositiveOnBox(q, box));
    // x - y changes sign
    CHECK_FALSE(certifyNonNegativeOnBox(x - y, box));
    CHECK_FALSE(certifyNonPositiveOnBox(x - y, box));
    // needs bisection: (x - 1/2)^2 + (y - 1/2)^2 + z/100 - 1/100 has range straddling 0
    MultiPoly half(Rational(1, 2));
    MultiPoly r = (x - half) * (x - half) + (y - half) * (y - half);
    CHECK(certifyNonNegativeOnBox(r, box));
}

TEST_CASE("winding numbers of linear functions over rectangles") {
    auto makeLinear = [](const GaussianRational& c) {
        auto eval = [c](const GaussianRational& z) { return z - c; };
        auto enclose = [c](const ComplexEnclosure& z) {
            return z - ComplexEnclosure(c);
        };
        return std::make_pair(std::function<GaussianRational(const GaussianRational&)>(eval),
                              std::function<ComplexEnclosure(const ComplexEnclosure&)>(enclose));
    };
    // center outside the rectangle: winding 0
    auto [e1, b1] = makeLinear(GaussianRational(Rational(5), Rational(5)));
    CHECK(windingNumberOnRectangle(e1, b1, Rational(0), Rational(1), Rational(0), Rational(1)) == 0);
    // center inside: winding 1
    auto [e2, b2] = makeLinear(GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(windingNumberOnRectangle(e2, b2, Rational(0), Rational(1), Rational(0), Rational(1)) == 1);
    // (z-c)^2 with c inside: winding 2
    GaussianRational c(Rational(1, 3), Rational(2, 5));
    auto eval2 = [c](const GaussianRational& z) { return (z - c) * (z - c); };
    auto enclose2 = [c](const ComplexEnclosure& z) {
        ComplexEnclosure d = z - ComplexEnclosure(c);
        return d * d;
    };
    CHECK(windingNumberOnRectangle(eval2, enclose2, Rational(0), Rational(1), Rational(0),
                                   Rational(1)) == 2);
}
