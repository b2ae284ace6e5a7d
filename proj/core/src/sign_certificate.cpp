#include "modecert/bounds.hpp"

namespace modecert {

namespace {

// Chebyshev head+tail range estimate of w on [a, b].
Enclosure chebRange(const RPoly& w, const Rational& a, const Rational& b) {
    RPoly onSeg = w.composeAffine((a + b) / Rational(2), (b - a) / Rational(2));
    RChebSeries cheb = toChebyshev(onSeg);
    std::vector<Rational> head(std::min<size_t>(cheb.c.size(), 4), Rational(0));
    Rational tail(0);
    for (size_t k = 0; k < cheb.c.size(); ++k) {
        if (k <= 3)
            head[k] = cheb.c[k];
        else
            tail += cheb.c[k].abs();
    }
    auto [minE, maxE] = cubicExtremaOnUnitInterval(fromChebyshev(RChebSeries{head}));
    return Enclosure(minE.lo() - tail, maxE.hi() + tail);
}

PolySign fromRange(const Enclosure& range) {
    if (range.lo().sign() >= 0) return PolySign::NonNegative;
    if (range.hi().sign() <= 0) return PolySign::NonPositive;
    return PolySign::Indeterminate;
}

// Monotone-derivative chain: if every derivative keeps one sign on [a, b]
// (checked top-down through endpoint values), the polynomial itself is
// monotone and its sign follows from the endpoints.
PolySign derivativeChain(const RPoly& w, const Rational& a, const Rational& b) {
    std::vector<RPoly> chain{w};
    while (chain.back().degree() >= 1 && !chain.back().isZero()) chain.push_back(chain.back().derivative());
    // chain.back() is constant: one sign everywhere
    for (size_t k = chain.size() - 1; k-- > 0;) {
        int sa = chain[k].evaluate(a).sign();
        int sb = chain[k].evaluate(b).sign();
        if (sa * sb < 0) {
            // monotone but crossing: conclusive only at the bottom level
            if (k == 0) return PolySign::Indeterminate;
            return PolySign::Indeterminate;
        }
        if (k == 0) {
            if (sa >= 0 && sb >= 0) return PolySign::NonNegative;
            return PolySign::NonPositive;
        }
    }
    return PolySign::Indeterminate;
}

PolySign combine(PolySign x, PolySign y) {
    if (x == y) return x;
    // a half that is identically zero certifies both directions
    return PolySign::Indeterminate;
}

}  // namespace

PolySign signCertificateOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                   int bisectDepth) {
    if (w.isZero()) return PolySign::NonNegative;
    if (a > b) throw std::invalid_argument("signCertificateOnInterval: empty interval");
    PolySign viaCheb = fromRange(chebRange(w, a, b));
    if (viaCheb != PolySign::Indeterminate) return viaCheb;
    PolySign viaChain = derivativeChain(w, a, b);
    if (viaChain != PolySign::Indeterminate) return viaChain;
    if (bisectDepth <= 0) return PolySign::Indeterminate;
    Rational mid = (a + b) / Rational(2);
    PolySign left = signCertificateOnInterval(w, a, mid, bisectDepth - 1);
    if (left == PolySign::Indeterminate) return PolySign::Indeterminate;
    PolySign right = signCertificateOnInterval(w, mid, b, bisectDepth - 1);
    if (right == PolySign::Indeterminate) return PolySign::Indeterminate;
    return combine(left, right);
}

bool certifyNonNegativeOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                  int bisectDepth) {
    if (w.isZero()) return true;
    return signCertificateOnInterval(w, a, b, bisectDepth) == PolySign::NonNegative;
}

bool certifyNonPositiveOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                  int bisectDepth) {
    if (w.isZero()) return true;
    return signCertificateOnInterval(-w, a, b, bisectDepth) == PolySign::NonNegative;
}

}  // namespace modecert
