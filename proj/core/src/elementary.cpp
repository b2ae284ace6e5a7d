#include "modecert/elementary.hpp"

#include <mutex>
#include <stdexcept>

namespace modecert {

namespace {

const Rational kTwo(2);

Rational pow2(long e) { return Rational(2).pow(e); }

}  // namespace

Rational defaultSqrtTol(const Rational& value) {
    Rational mag = value.abs();
    Rational tol = pow2(-96);
    if (mag > Rational(1)) {
        // scale with sqrt magnitude: tol' = tol * 2^(bits(value)/2)
        size_t bits = mpz_sizeinbase(mag.numerator().get_mpz_t(), 2);
        size_t dbits = mpz_sizeinbase(mag.denominator().get_mpz_t(), 2);
        long net = static_cast<long>(bits) - static_cast<long>(dbits);
        if (net > 0) tol = tol * pow2(net / 2 + 1);
    }
    return tol;
}

Enclosure sqrtEnclosure(const Rational& q, const Rational& tol) {
    if (q.sign() < 0) throw std::domain_error("sqrtEnclosure: negative argument");
    if (tol.sign() <= 0) throw std::invalid_argument("sqrtEnclosure: tol must be positive");
    if (q.isZero()) return Enclosure(Rational(0));

    // perfect square fast path: sqrt(n/d) with n*d a perfect square
    mpz_class nd = q.numerator() * q.denominator();
    if (mpz_perfect_square_p(nd.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), nd.get_mpz_t());
        Rational exact(mpq_class(r) / mpq_class(q.denominator()));
        return Enclosure(exact);
    }

    // integer sqrt of S^2 * q with S = 2^k chosen from tol
    Rational invTol = tol.inverse();
    long k = 2;
    size_t bits = mpz_sizeinbase(invTol.ceil().get_mpz_t(), 2);
    k += static_cast<long>(bits);
    mpz_class S = mpz_class(1) << k;
    // t = floor(sqrt(S^2 * num * den)) / (S * den)  satisfies t <= sqrt(q)
    mpz_class arg = nd * S * S;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), arg.get_mpz_t());
    Rational denom(mpq_class(S * q.denominator()));
    Rational lo = Rational(mpq_class(r)) / denom;
    Rational hi = Rational(mpq_class(r + 1)) / denom;
    // exact directed checks (guards against any off-by-one)
    while (lo * lo > q) lo -= denom.inverse();
    while (hi * hi < q) hi += denom.inverse();
    if (lo.sign() < 0) lo = Rational(0);
    return Enclosure(lo, hi).coarsened();
}

Enclosure sqrtEnclosure(const Enclosure& x, const Rational& tol) {
    if (x.lo().sign() < 0) throw std::domain_error("sqrtEnclosure: interval contains negatives");
    Enclosure lo = sqrtEnclosure(x.lo(), tol);
    Enclosure hi = sqrtEnclosure(x.hi(), tol);
    return Enclosure(lo.lo(), hi.hi());
}

namespace {

// e^x for x >= 0 via Taylor partial sum; remainder bounded by
// x^(N+1)/(N+1)! * 3^ceil(x)  (e < 3).
Enclosure expNonNegative(const Rational& x, const Rational& tol) {
    Rational term(1);
    Rational sum(1);
    Rational expCap = Rational(3).pow(x.ceil().get_si());
    long n = 0;
    while (true) {
        ++n;
        term = term * x / Rational(n);
        sum += term;
        Rational rem = term * x / Rational(n + 1) * expCap;
        if (rem < tol / kTwo && term <= tol) {
            return Enclosure(sum, sum + rem).coarsened();
        }
        if (n > 10000) throw std::runtime_error("expEnclosure: series failed to converge");
    }
}

}  // namespace

Enclosure expEnclosure(const Rational& x, const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("expEnclosure: tol must be positive");
    if (x.isZero()) return Enclosure(Rational(1));
    if (x.sign() > 0) return expNonNegative(x, tol);
    // e^x = 1/e^(-x); pick the inner tolerance so the reciprocal meets tol
    Enclosure pos = expNonNegative(-x, min(tol, Rational(1, 2)));
    Enclosure inv = Enclosure(Rational(1)) / pos;
    if (inv.width() <= tol) return inv;
    Rational innerTol = tol * pos.lo() * pos.lo() / kTwo;
    pos = expNonNegative(-x, innerTol);
    return Enclosure(Rational(1)) / pos;
}

Enclosure expEnclosure(const Enclosure& x, const Rational& tol) {
    Enclosure lo = expEnclosure(x.lo(), tol);
    Enclosure hi = expEnclosure(x.hi(), tol);
    return Enclosure(lo.lo(), hi.hi());
}

std::pair<Enclosure, Enclosure> sinCosEnclosure(const Rational& x, const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("sinCosEnclosure: tol must be positive");
    if (x.isZero()) return {Enclosure(Rational(0)), Enclosure(Rational(1))};
    Rational ax = x.abs();
    // sin |x| = sum (-1)^k |x|^(2k+1)/(2k+1)!, remainder <= first omitted term
    // once the terms decrease; run until the next term is below tol/2.
    Rational sinSum = ax;
    Rational cosSum(1);
    Rational sinTerm = ax;      // |x|^(2k+1)/(2k+1)!
    Rational cosTerm(1);        // |x|^(2k)/(2k)!
    Rational x2 = ax * ax;
    long k = 0;
    int sign = 1;
    Rational sinRem, cosRem;
    while (true) {
        ++k;
        sign = -sign;
        cosTerm = cosTerm * x2 / Rational((2 * k - 1) * (2 * k));
        sinTerm = sinTerm * x2 / Rational((2 * k) * (2 * k + 1));
        sinSum += sign > 0 ? sinTerm : -sinTerm;
        cosSum += sign > 0 ? cosTerm : -cosTerm;
        Rational nextCos = cosTerm * x2 / Rational((2 * k + 1) * (2 * k + 2));
        Rational nextSin = sinTerm * x2 / Rational((2 * k + 2) * (2 * k + 3));
        bool decreasing = x2 < Rational((2 * k + 1) * (2 * k + 2));
        if (decreasing && nextSin < tol / kTwo && nextCos < tol / kTwo) {
            sinRem = nextSin;
            cosRem = nextCos;
            break;
        }
        if (k > 10000) throw std::runtime_error("sinCosEnclosure: series failed to converge");
    }
    Enclosure sinAbs = Enclosure(sinSum - sinRem, sinSum + sinRem).coarsened();
    Enclosure cosE = Enclosure(cosSum - cosRem, cosSum + cosRem).coarsened();
    // clamp to [-1, 1]
    auto clamp = [](const Enclosure& e) {
        return Enclosure(max(e.lo(), Rational(-1)), min(e.hi(), Rational(1)));
    };
    Enclosure sinE = x.sign() > 0 ? sinAbs : -sinAbs;
    return {clamp(sinE), clamp(cosE)};
}

Enclosure atanEnclosure(const Rational& x, const Rational& tol) {
    if (x.abs() >= Rational(1)) throw std::domain_error("atanEnclosure: |x| must be < 1");
    if (x.isZero()) return Enclosure(Rational(0));
    Rational ax = x.abs();
    Rational x2 = ax * ax;
    Rational term = ax;
    Rational sum = ax;
    long k = 0;
    Rational rem;
    while (true) {
        ++k;
        term = term * x2;
        Rational contrib = term / Rational(2 * k + 1);
        sum += (k % 2 == 1) ? -contrib : contrib;
        rem = term * x2 / Rational(2 * k + 3);
        if (rem < tol / kTwo) break;
        if (k > 100000) throw std::runtime_error("atanEnclosure: series failed to converge");
    }
    Enclosure pos = Enclosure(sum - rem, sum + rem).coarsened();
    return x.sign() > 0 ? pos : -pos;
}

const Enclosure& piEnclosure() {
    static const Enclosure pi = [] {
        Rational tol = Rational(2).pow(-208);
        Enclosure a = atanEnclosure(Rational(1, 5), tol);
        Enclosure b = atanEnclosure(Rational(1, 239), tol);
        return Enclosure(16) * a - Enclosure(4) * b;
    }();
    return pi;
}

ComplexEnclosure expEnclosure(const ComplexEnclosure& z, const Rational& tol) {
    Enclosure mag = expEnclosure(z.re, tol);
    if (!z.im.isPoint()) {
        // e^(iy) over an interval of y: enclose via midpoint value plus the
        // Lipschitz-1 radius of the arc.
        Rational mid = z.im.mid();
        Rational rad = z.im.width() / kTwo;
        auto [s, c] = sinCosEnclosure(mid, tol);
        Enclosure sinE = s.inflate(rad);
        Enclosure cosE = c.inflate(rad);
        return ComplexEnclosure(mag * cosE, mag * sinE);
    }
    auto [s, c] = sinCosEnclosure(z.im.lo(), tol);
    return ComplexEnclosure(mag * c, mag * s);
}

ComplexEnclosure complexSqrtEnclosure(const ComplexEnclosure& z, const Rational& tol) {
    bool offCut = z.re.lo().sign() > 0 || z.im.lo().sign() > 0 || z.im.hi().sign() < 0;
    if (!offCut)
        throw std::domain_error("complexSqrtEnclosure: rectangle touches the branch cut");
    // principal branch: Re w = sqrt((|z| + Re z)/2) > 0, Im w = Im z / (2 Re w)
    Enclosure mod = sqrtEnclosure(z.absSquared(), tol);
    Enclosure u2 = (mod + z.re) / Enclosure(kTwo);
    if (u2.lo().sign() <= 0) {
        // the rectangle hugs the negative axis; u^2 >= y^2/(4|z|) still holds
        Enclosure y2 = z.im.square();
        Enclosure floor = y2 / (Enclosure(Rational(4)) * mod);
        u2 = Enclosure(max(u2.lo(), floor.lo()), u2.hi());
        if (u2.lo().sign() <= 0)
            throw std::domain_error("complexSqrtEnclosure: cannot separate from the branch cut");
    }
    Enclosure u = sqrtEnclosure(u2, tol);
    Enclosure v = z.im / (Enclosure(kTwo) * u);
    return ComplexEnclosure(u, v);
}

}  // namespace modecert
