#include "modecert/enclosure.hpp"

#include "modecert/elementary.hpp"

#include <ostream>
#include <stdexcept>

namespace modecert {

namespace {

// Endpoints denser than this grid get rounded outward. 2^-224 of slack per
// operation is far below every margin asserted by the certificates.
constexpr unsigned kGridBits = 224;
constexpr size_t kDenLimbs = 256 / (8 * sizeof(mp_limb_t));

bool needsCoarsening(const Rational& r) {
    return mpz_size(r.denominator().get_mpz_t()) > kDenLimbs;
}

}  // namespace

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
    return Enclosure(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

Enclosure Enclosure::coarsened() const {
    Rational lo = needsCoarsening(lo_) ? lo_.gridRoundDown(kGridBits) : lo_;
    Rational hi = needsCoarsening(hi_) ? hi_.gridRoundUp(kGridBits) : hi_;
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_).coarsened();
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_).coarsened();
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rational p1 = a.lo_ * b.lo_;
    Rational p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_;
    Rational p4 = a.hi_ * b.hi_;
    return Enclosure(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))).coarsened();
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.containsZero()) throw std::domain_error("Enclosure: division by interval containing zero");
    return a * Enclosure(b.hi_.inverse(), b.lo_.inverse());
}

Enclosure Enclosure::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return Enclosure(Rational(0), absUpper());
}

Enclosure Enclosure::square() const {
    Enclosure a = abs();
    return Enclosure(a.lo_ * a.lo_, a.hi_ * a.hi_).coarsened();
}

Enclosure Enclosure::pow(long e) const {
    if (e < 0) return Enclosure(Rational(1)) / pow(-e);
    Enclosure acc(Rational(1));
    Enclosure base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    // exponentiation by repeated multiplication keeps even powers tight
    if (k % 2 == 0 && k > 0) {
        base = square();
        k /= 2;
        acc = base;
        --k;
    } else if (k > 0) {
        acc = base;
        --k;
    }
    for (; k > 0; --k) acc = acc * base;
    return acc;
}

Rational Enclosure::absLower() const {
    if (containsZero()) return Rational(0);
    return min(lo_.abs(), hi_.abs());
}

std::string Enclosure::toString() const {
    return "[" + lo_.toString() + ", " + hi_.toString() + "]";
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
    return os << e.toString();
}

ComplexEnclosure operator/(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    Enclosure d = b.absSquared();
    if (d.containsZero()) throw std::domain_error("ComplexEnclosure: division by rectangle containing zero");
    ComplexEnclosure num = a * b.conj();
    return {num.re / d, num.im / d};
}

Rational ComplexEnclosure::absUpper() const {
    Rational s = absSquared().hi();
    return sqrtEnclosure(s, defaultSqrtTol(s)).hi();
}

Rational ComplexEnclosure::absLower() const {
    Rational s = absSquared().lo();
    if (s.sign() <= 0) return Rational(0);
    return sqrtEnclosure(s, defaultSqrtTol(s)).lo();
}

std::string ComplexEnclosure::toString() const {
    return re.toString() + " + i*" + im.toString();
}

std::ostream& operator<<(std::ostream& os, const ComplexEnclosure& e) {
    return os << e.toString();
}

}  // namespace modecert
