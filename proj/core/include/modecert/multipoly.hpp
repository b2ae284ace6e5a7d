#pragma once

#include "modecert/enclosure.hpp"
#include "modecert/gaussian.hpp"
#include "modecert/poly.hpp"

#include <array>
#include <map>
#include <vector>

namespace modecert {

/// Sparse polynomial in up to three variables over the Gaussian rationals.
/// Drives the symbolic derivative/monotonicity certificates.
class MultiPoly {
public:
    static constexpr int kVars = 3;
    using Key = std::array<int, kVars>;

    MultiPoly() = default;
    MultiPoly(const GaussianRational& c) {
        if (!c.isZero()) c_[{0, 0, 0}] = c;
    }
    MultiPoly(const Rational& c) : MultiPoly(GaussianRational(c)) {}
    MultiPoly(long c) : MultiPoly(GaussianRational(Rational(c))) {}

    static MultiPoly variable(int k);
    static MultiPoly monomial(const GaussianRational& c, const Key& k);

    bool isZero() const { return c_.empty(); }
    const std::map<Key, GaussianRational>& terms() const { return c_; }
    int degreeIn(int k) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.c_ == b.c_; }

    MultiPoly scaled(const GaussianRational& s) const;
    MultiPoly derivative(int k) const;

    /// Substitute an arbitrary polynomial for variable k (Horner).
    MultiPoly substitute(int k, const MultiPoly& value) const;
    /// Substitute variable k -> variable k + c.
    MultiPoly shiftVar(int k, const GaussianRational& c) const;

    /// Coefficients with respect to variable k (each free of variable k).
    std::vector<MultiPoly> coefficientsIn(int k) const;
    /// Collapse to a univariate polynomial in variable k; all other
    /// variables must be absent.
    UPoly toUnivariate(int k) const;

    MultiPoly realCoeffs() const;
    MultiPoly imagCoeffs() const;
    bool hasImag() const;

    GaussianRational evaluate(const std::array<GaussianRational, kVars>& x) const;
    /// Interval range over an axis-aligned box (monomial-wise product).
    ComplexEnclosure evaluateOnBox(const std::array<Enclosure, kVars>& box) const;

    /// Exact division by variable k to the largest possible power; returns
    /// the power removed.
    int factorOutVar(int k);

private:
    std::map<Key, GaussianRational> c_;
    void insertTerm(const Key& k, const GaussianRational& v);
};

}  // namespace modecert
