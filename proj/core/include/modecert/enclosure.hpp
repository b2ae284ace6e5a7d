#pragma once

#include "modecert/gaussian.hpp"
#include "modecert/rational.hpp"

#include <iosfwd>

namespace modecert {

/// Closed rational interval [lo, hi]. Every operation returns an interval
/// containing the exact image; endpoints may be coarsened outward onto a
/// dyadic grid to keep denominators bounded.
class Enclosure {
public:
    Enclosure() : lo_(0), hi_(0) {}
    Enclosure(Rational x) : lo_(x), hi_(std::move(x)) {}
    Enclosure(long x) : lo_(x), hi_(x) {}
    Enclosure(Rational lo, Rational hi);

    static Enclosure hull(const Enclosure& a, const Enclosure& b);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool isPoint() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool containsZero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictlyPositive() const { return lo_.sign() > 0; }
    bool strictlyNegative() const { return hi_.sign() < 0; }

    Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    /// Throws std::domain_error if the divisor contains zero.
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    Enclosure& operator+=(const Enclosure& o) { return *this = *this + o; }
    Enclosure& operator-=(const Enclosure& o) { return *this = *this - o; }
    Enclosure& operator*=(const Enclosure& o) { return *this = *this * o; }
    Enclosure& operator/=(const Enclosure& o) { return *this = *this / o; }

    /// Enclosure of |x| over the interval.
    Enclosure abs() const;
    /// Enclosure of x^2 (tight at zero-straddling intervals).
    Enclosure square() const;
    Enclosure pow(long e) const;
    /// Upper bound of |x|, lower bound of |x| (0 if interval straddles zero).
    Rational absUpper() const { return max(lo_.abs(), hi_.abs()); }
    Rational absLower() const;

    /// Widens both endpoints outward by eps >= 0.
    Enclosure inflate(const Rational& eps) const { return Enclosure(lo_ - eps, hi_ + eps); }

    /// Outward rounding onto the dyadic grid when denominators grow large.
    Enclosure coarsened() const;

    std::string toString() const;

private:
    Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

/// Axis-aligned rectangle enclosure of a complex value.
struct ComplexEnclosure {
    Enclosure re;
    Enclosure im;

    ComplexEnclosure() = default;
    ComplexEnclosure(Enclosure r) : re(std::move(r)) {}
    ComplexEnclosure(Enclosure r, Enclosure i) : re(std::move(r)), im(std::move(i)) {}
    ComplexEnclosure(const GaussianRational& z) : re(z.re), im(z.im) {}

    bool contains(const GaussianRational& z) const { return re.contains(z.re) && im.contains(z.im); }
    bool containsZero() const { return re.containsZero() && im.containsZero(); }

    ComplexEnclosure conj() const { return {re, -im}; }
    ComplexEnclosure operator-() const { return {-re, -im}; }
    friend ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexEnclosure operator-(const ComplexEnclosure& a, const ComplexEnclosure& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Throws std::domain_error if the divisor rectangle contains zero.
    friend ComplexEnclosure operator/(const ComplexEnclosure& a, const ComplexEnclosure& b);
    ComplexEnclosure& operator+=(const ComplexEnclosure& o) { return *this = *this + o; }
    ComplexEnclosure& operator-=(const ComplexEnclosure& o) { return *this = *this - o; }
    ComplexEnclosure& operator*=(const ComplexEnclosure& o) { return *this = *this * o; }

    Enclosure absSquared() const { return re.square() + im.square(); }
    /// Rational upper/lower bounds of the modulus over the rectangle.
    Rational absUpper() const;
    Rational absLower() const;

    std::string toString() const;
};

std::ostream& operator<<(std::ostream& os, const ComplexEnclosure& e);

}  // namespace modecert
