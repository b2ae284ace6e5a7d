#pragma once

#include "modecert/bounds.hpp"
#include "modecert/poly.hpp"

#include <vector>

namespace modecert {

/// Spectral parameter with the strip-membership checks used by the
/// certificates.
struct SpectralParameter {
    GaussianRational lambda;

    bool inClosedStrip() const {
        return Rational(0) <= lambda.re && lambda.re <= Rational(1, 2);
    }
    bool inRectangle(const Rational& imLo, const Rational& imHi) const {
        return inClosedStrip() && imLo <= lambda.im && lambda.im <= imHi;
    }
};

/// Rational function of lambda with denominator prod_j (lambda + j) over the
/// recorded nonnegative offsets (all simple factors).
struct LambdaRational {
    UPoly num;
    std::vector<long> poleOffsets;  // factor (lambda + j) per entry, distinct

    GaussianRational evaluate(const GaussianRational& lam) const;
    UPoly denominator() const;
    /// Exact partial-fraction split into polynomial part plus simple poles.
    RationalFunctionForm toRationalFunctionForm() const;
};

enum class Normalization { ValueLambda, ValueOne };

/// Series side of an expansion together with its normalization tag. Both the
/// symbolic and the pointwise representations satisfy their defining
/// recurrence exactly.
struct SeriesCoefficients {
    int expansionPoint = 0;  // 0 or 1
    Normalization normalization = Normalization::ValueOne;
    std::vector<LambdaRational> symbolic;
    std::vector<GaussianRational> values;
};

/// Taylor coefficients at t = 0 of the middle-strip ODE solution, exact in
/// lambda. Throws std::domain_error when lambda is a negative integer.
SeriesCoefficients seriesAtZeroSymbolic(int N, Normalization norm);
SeriesCoefficients seriesAtZero(const GaussianRational& lam, int N, Normalization norm);

/// Coefficients b_n at t = 1 (polynomials in lambda), b_0 = 1.
std::vector<UPoly> seriesAtOneSymbolic(int N);
SeriesCoefficients seriesAtOne(const GaussianRational& lam, int N);

/// One-step ratio polynomials of the two sides.
UPoly ratioPolyAtZeroNumerator(long n);  // n^2 + (lambda+3/2) n + (lambda^2+3 lambda)/4 - 1/2
UPoly ratioPolyAtOneNumerator(long n);   // same with -7/2
GaussianRational ratioAtZero(long n, const GaussianRational& lam);  // p_n
GaussianRational ratioAtOne(long n, const GaussianRational& lam);   // q_n

/// Three-term recurrence data of the transformed equation.
Rational recP2(long n);                                   // 8n^2+28n+20
UPoly recP1Symbolic(long n);                              // -12n^2-(20+8 lambda)n-lambda^2-8 lambda+9
UPoly recP0Symbolic(long n);                              // 4n^2+4 lambda n+lambda^2-9
GaussianRational recP1(long n, const GaussianRational& lam);
GaussianRational recP0(long n, const GaussianRational& lam);
/// (A_n, B_n) = (p1/p2, p0/p2).
std::pair<GaussianRational, GaussianRational> recAnBn(long n, const GaussianRational& lam);

/// Series coefficients of the transformed equation: c_0 = 0, c_1 = 1,
/// then p2(n) c_{n+2} + p1(n) c_{n+1} + p0(n) c_n = 0.
std::vector<UPoly> transformedSeriesSymbolic(int N);
std::vector<GaussianRational> transformedSeries(const GaussianRational& lam, int N);

/// Exact ratios r_n = c_{n+1}/c_n for n0 <= n <= N. Throws std::domain_error
/// naming the index if some c_n vanishes.
std::vector<GaussianRational> ratioSequence(const GaussianRational& lam, int n0, int N);

/// (2-t)^2 L[P] for the middle-strip operator
///   L = t(1-t) d_tt + (-(5/2)t + lambda(1-t)) d_t + (alpha + g(t)),
/// alpha = -(lambda^2+3 lambda)/4 + 1/2, g(t) = t(4-t)/(2-t)^2; polynomial output.
BivarPoly weightedOdeOperator(const BivarPoly& P);
/// Same with lambda fixed; returns a polynomial in t.
UPoly weightedOdeOperator(const UPoly& Pt, const GaussianRational& lam);

}  // namespace modecert
