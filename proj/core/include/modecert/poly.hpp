#pragma once

#include "modecert/enclosure.hpp"
#include "modecert/gaussian.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace modecert {

/// Dense univariate polynomial with exact coefficient arithmetic.
template <typename Coeff>
class PolyT {
public:
    PolyT() = default;
    PolyT(Coeff constant) { c_.push_back(std::move(constant)); trim(); }
    explicit PolyT(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyT variable() { return monomial(Coeff(1), 1); }
    static PolyT monomial(Coeff coeff, size_t k) {
        std::vector<Coeff> v(k + 1);
        v[k] = std::move(coeff);
        return PolyT(std::move(v));
    }

    bool isZero() const { return c_.empty(); }
    /// Degree of the zero polynomial is 0 by convention here.
    size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    Coeff operator[](size_t k) const {
        return k < c_.size() ? c_[k] : Coeff(0);
    }

    PolyT operator-() const {
        std::vector<Coeff> v(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) v[k] = -c_[k];
        return PolyT(std::move(v));
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()), Coeff(0));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
        return PolyT(std::move(v));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.isZero() || b.isZero()) return PolyT();
        std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return PolyT(std::move(v));
    }
    PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
    PolyT& operator-=(const PolyT& o) { return *this = *this - o; }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    PolyT scaled(const Coeff& s) const {
        std::vector<Coeff> v(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k] * s;
        return PolyT(std::move(v));
    }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }

    PolyT derivative() const {
        if (c_.size() <= 1) return PolyT();
        std::vector<Coeff> v(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Coeff(static_cast<long>(k));
        return PolyT(std::move(v));
    }

    /// Antiderivative with zero constant term.
    PolyT antiderivative() const {
        if (isZero()) return PolyT();
        std::vector<Coeff> v(c_.size() + 1, Coeff(0));
        for (size_t k = 0; k < c_.size(); ++k)
            v[k + 1] = c_[k] * Coeff(1) / Coeff(static_cast<long>(k + 1));
        return PolyT(std::move(v));
    }

    template <typename Arg>
    Arg evaluate(const Arg& x) const {
        Arg acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + Arg(c_[k]);
        return acc;
    }

    /// P(a + b*x), expanded exactly.
    PolyT composeAffine(const Coeff& a, const Coeff& b) const {
        PolyT acc;
        PolyT lin(std::vector<Coeff>{a, b});
        for (size_t k = c_.size(); k-- > 0;) acc = acc * lin + PolyT(c_[k]);
        return acc;
    }

    /// Divide by x^k; throws if any lower coefficient is nonzero.
    PolyT shiftedDown(size_t k) const {
        if (isZero()) return PolyT();
        if (c_.size() <= k) throw std::domain_error("shiftedDown: degree too small");
        for (size_t j = 0; j < k; ++j)
            if (!(c_[j] == Coeff(0))) throw std::domain_error("shiftedDown: not divisible");
        return PolyT(std::vector<Coeff>(c_.begin() + k, c_.end()));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
    }
    std::vector<Coeff> c_;
};

using UPoly = PolyT<GaussianRational>;   // univariate over Gaussian rationals
using RPoly = PolyT<Rational>;           // univariate over rationals

/// Real and imaginary coefficient parts.
RPoly realPart(const UPoly& p);
RPoly imagPart(const UPoly& p);
UPoly fromReal(const RPoly& p);
UPoly conjugateCoefficients(const UPoly& p);

/// Euclidean division a = q*b + r with deg r < deg b (coefficients in the
/// field of Gaussian rationals).
std::pair<UPoly, UPoly> polyDivMod(const UPoly& a, const UPoly& b);

/// Interval Horner evaluation.
Enclosure evaluateEnclosure(const RPoly& p, const Enclosure& x);
ComplexEnclosure evaluateEnclosure(const UPoly& p, const ComplexEnclosure& x);
/// Interval Horner for a complex-coefficient polynomial over a real interval.
ComplexEnclosure evaluateEnclosureReal(const UPoly& p, const Enclosure& x);

/// |p(x)|^2 as a real polynomial of the real variable x.
RPoly modulusSquared(const UPoly& p);

/// Finite Chebyshev series sum c_l T_l(x) with exact coefficients.
template <typename Coeff>
struct ChebSeriesT {
    std::vector<Coeff> c;

    size_t size() const { return c.size(); }
    Coeff coefficient(size_t l) const { return l < c.size() ? c[l] : Coeff(0); }
};

using ChebSeries = ChebSeriesT<GaussianRational>;
using RChebSeries = ChebSeriesT<Rational>;

/// Exact power-basis <-> Chebyshev-basis conversion (integer recurrence
/// T_{n+1} = 2 x T_n - T_{n-1}).
RChebSeries toChebyshev(const RPoly& p);
RPoly fromChebyshev(const RChebSeries& s);
ChebSeries toChebyshev(const UPoly& p);
UPoly fromChebyshev(const ChebSeries& s);

/// The Chebyshev polynomial T_n as an integer-coefficient RPoly (cached).
RPoly chebyshevT(size_t n);

/// Polynomial in (t, lambda) with Gaussian-rational coefficients.
/// rows()[i] is the lambda-polynomial multiplying t^i.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<UPoly> rowsByTPower) : rows_(std::move(rowsByTPower)) { trim(); }
    BivarPoly(const GaussianRational& constant) : rows_{UPoly(constant)} { trim(); }

    static BivarPoly fromLambdaPoly(const UPoly& p) { return BivarPoly(std::vector<UPoly>{p}); }
    static BivarPoly tPower(size_t k) {
        std::vector<UPoly> rows(k + 1);
        rows[k] = UPoly(GaussianRational(1));
        return BivarPoly(std::move(rows));
    }

    bool isZero() const { return rows_.empty(); }
    size_t degreeT() const { return rows_.empty() ? 0 : rows_.size() - 1; }
    size_t degreeLambda() const;
    const std::vector<UPoly>& rows() const { return rows_; }
    UPoly row(size_t i) const { return i < rows_.size() ? rows_[i] : UPoly(); }
    GaussianRational coefficient(size_t tPow, size_t lamPow) const { return row(tPow)[lamPow]; }

    void setCoefficient(size_t tPow, size_t lamPow, const GaussianRational& v);

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.rows_ == b.rows_; }

    BivarPoly derivativeT() const;
    BivarPoly derivativeLambda() const;
    /// Antiderivative in t with zero constant row.
    BivarPoly antiderivativeT() const;

    /// Exact evaluation at (t, lambda).
    GaussianRational evaluate(const GaussianRational& t, const GaussianRational& lam) const;
    /// Substitute a rational t, leaving a polynomial in lambda.
    UPoly atT(const GaussianRational& t) const;
    /// Substitute a value for lambda, leaving a polynomial in t.
    UPoly atLambda(const GaussianRational& lam) const;

    /// Substitute t -> a + b*x (exact expansion).
    BivarPoly substituteTAffine(const GaussianRational& a, const GaussianRational& b) const;
    /// Rewrite in powers of (lambda - lam0).
    BivarPoly recenterLambda(const GaussianRational& lam0) const;

    /// Divide by t^k; throws if not exactly divisible.
    BivarPoly divideByTPower(size_t k) const;

private:
    void trim();
    std::vector<UPoly> rows_;
};

}  // namespace modecert
