#include "modecert/rational.hpp"

#include "modecert/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace modecert {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::string str(s);
    auto slash = str.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(str, 10) != 0) throw std::invalid_argument("Rational::parse: bad integer '" + str + "'");
        return Rational(mpq_class(n));
    }
    mpz_class num, den;
    if (num.set_str(str.substr(0, slash), 10) != 0 || den.set_str(str.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + str + "'");
    if (den <= 0) throw std::invalid_argument("Rational::parse: denominator must be positive in '" + str + "'");
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(std::move(q));
}

Rational Rational::scaled(long long value, int exp10) {
    mpz_class pow10(1);
    for (int i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) pow10 *= 10;
    mpq_class q(static_cast<long>(value));
    if (exp10 >= 0)
        q *= mpq_class(pow10);
    else
        q /= mpq_class(pow10);
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), k);
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(std::move(q));
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

Rational Rational::gridRoundDown(unsigned bits) const {
    mpz_class scaled_num = q_.get_num() << bits;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
    mpq_class q(r);
    q /= mpq_class(mpz_class(1) << bits);
    return Rational(std::move(q));
}

Rational Rational::gridRoundUp(unsigned bits) const {
    mpz_class scaled_num = q_.get_num() << bits;
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
    mpq_class q(r);
    q /= mpq_class(mpz_class(1) << bits);
    return Rational(std::move(q));
}

namespace {

// Minimal-denominator rational in [lo, hi] for 0 < lo <= hi, by walking the
// continued fraction of the interval.
mpq_class simplestPositive(const mpq_class& lo, const mpq_class& hi) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_class cl;
    mpz_cdiv_q(cl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (mpq_class(cl) <= hi) return mpq_class(cl);  // an integer fits
    mpq_class loFrac = lo - mpq_class(fl);          // in (0,1)
    mpq_class hiFrac = hi - mpq_class(fl);
    // recurse on reciprocals, swapped
    mpq_class inner = simplestPositive(mpq_class(1) / hiFrac, mpq_class(1) / loFrac);
    return mpq_class(fl) + mpq_class(1) / inner;
}

}  // namespace

Rational Rational::simplestInInterval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplestInInterval: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) {
        Rational r = simplestInInterval(-hi, -lo);
        return -r;
    }
    return Rational(simplestPositive(lo.raw(), hi.raw()));
}

std::string Rational::toString() const {
    if (isInteger()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.toString();
}

GaussianRational GaussianRational::parse(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) return GaussianRational(Rational::parse(s));
    return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational d = o.absSquared();
    if (d.isZero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = *this * o.conj();
    re = num.re / d;
    im = num.im / d;
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational d = absSquared();
    if (d.isZero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {re / d, -im / d};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e == 0) return GaussianRational(Rational(1));
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    GaussianRational acc(Rational(1));
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string GaussianRational::toString() const {
    return re.toString() + "," + im.toString();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.toString();
}

}  // namespace modecert
