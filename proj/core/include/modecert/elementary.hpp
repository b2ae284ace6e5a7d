#pragma once

#include "modecert/enclosure.hpp"

#include <utility>

namespace modecert {

/// Reasonable sqrt tolerance for a value of the given magnitude: keeps the
/// relative width near 2^-96 without letting tiny values force huge work.
Rational defaultSqrtTol(const Rational& value);

/// Enclosure of sqrt(q) with hi - lo <= tol; exact for perfect squares.
/// Throws std::domain_error for q < 0.
Enclosure sqrtEnclosure(const Rational& q, const Rational& tol);
/// Monotone image of an interval under sqrt.
Enclosure sqrtEnclosure(const Enclosure& x, const Rational& tol);

/// Enclosure of e^x of width <= tol (Taylor sum with Lagrange remainder).
Enclosure expEnclosure(const Rational& x, const Rational& tol);
Enclosure expEnclosure(const Enclosure& x, const Rational& tol);

/// Enclosures of (sin x, cos x), each of width <= tol.
std::pair<Enclosure, Enclosure> sinCosEnclosure(const Rational& x, const Rational& tol);

/// Enclosure of atan(x) for |x| < 1 (alternating series).
Enclosure atanEnclosure(const Rational& x, const Rational& tol);

/// Cached enclosure of pi (Machin's formula), width < 2^-200.
const Enclosure& piEnclosure();

/// Enclosure of e^z for a complex rectangle.
ComplexEnclosure expEnclosure(const ComplexEnclosure& z, const Rational& tol);

/// Principal square root of a complex rectangle. The rectangle must be
/// verifiably off the branch cut (-inf, 0]; otherwise std::domain_error.
ComplexEnclosure complexSqrtEnclosure(const ComplexEnclosure& z, const Rational& tol);

}  // namespace modecert
