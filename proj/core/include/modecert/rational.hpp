#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace modecert {

/// Arbitrary-precision rational in canonical form (positive denominator,
/// coprime numerator/denominator). Immutable value type backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q);

    /// Parses "p/q" (q > 0) or a plain integer "p".
    static Rational parse(std::string_view s);
    /// value * 10^exp10, exact.
    static Rational scaled(long long value, int exp10);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool isZero() const { return sgn(q_) == 0; }
    bool isInteger() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;
    /// Integer power (negative exponents allowed for nonzero base).
    Rational pow(long e) const;

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Largest rational <= *this whose denominator is a power of two with at
    /// most `bits` bits. Used for outward rounding of enclosure endpoints.
    Rational gridRoundDown(unsigned bits) const;
    Rational gridRoundUp(unsigned bits) const;

    /// Minimal-denominator rational in [lo, hi].
    static Rational simplestInInterval(const Rational& lo, const Rational& hi);

    std::string toString() const;
    double toDouble() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace modecert
