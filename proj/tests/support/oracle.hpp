#pragma once

// Test-only high-precision floating oracles, independent of the exact
// rational pipeline they cross-check.

#include "modecert/enclosure.hpp"
#include "modecert/gaussian.hpp"
#include "modecert/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <random>

namespace oracle {

using Float = boost::multiprecision::cpp_bin_float_100;
using CFloat = std::complex<Float>;

inline Float toFloat(const modecert::Rational& r) {
    Float num(r.numerator().get_str());
    Float den(r.denominator().get_str());
    return num / den;
}

inline CFloat toFloat(const modecert::GaussianRational& z) {
    return {toFloat(z.re), toFloat(z.im)};
}

inline bool encloses(const modecert::Enclosure& e, const Float& x) {
    return toFloat(e.lo()) <= x && x <= toFloat(e.hi());
}

inline bool encloses(const modecert::ComplexEnclosure& e, const CFloat& z) {
    return encloses(e.re, z.real()) && encloses(e.im, z.imag());
}

/// Uniform random rational p/q with p in [-scale*den, scale*den], q = den.
inline modecert::Rational randomRational(std::mt19937_64& rng, long scale, long den = 1024) {
    std::uniform_int_distribution<long> dist(-scale * den, scale * den);
    return modecert::Rational(dist(rng), den);
}

inline modecert::GaussianRational randomGaussian(std::mt19937_64& rng, long scale, long den = 1024) {
    return {randomRational(rng, scale, den), randomRational(rng, scale, den)};
}

}  // namespace oracle
