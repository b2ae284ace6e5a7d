#include "modecert/multipoly.hpp"

#include <stdexcept>

namespace modecert {

MultiPoly MultiPoly::variable(int k) {
    Key key{0, 0, 0};
    key[k] = 1;
    return monomial(GaussianRational(1), key);
}

MultiPoly MultiPoly::monomial(const GaussianRational& c, const Key& k) {
    MultiPoly p;
    if (!c.isZero()) p.c_[k] = c;
    return p;
}

int MultiPoly::degreeIn(int k) const {
    int d = 0;
    for (const auto& [key, v] : c_) d = std::max(d, key[k]);
    return d;
}

void MultiPoly::insertTerm(const Key& k, const GaussianRational& v) {
    auto it = c_.find(k);
    if (it == c_.end()) {
        if (!v.isZero()) c_[k] = v;
        return;
    }
    it->second += v;
    if (it->second.isZero()) c_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [k, v] : c_) out.c_[k] = -v;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [k, v] : b.c_) out.insertTerm(k, v);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [k, v] : b.c_) out.insertTerm(k, -v);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            MultiPoly::Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            out.insertTerm(k, va * vb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const GaussianRational& s) const {
    MultiPoly out;
    if (s.isZero()) return out;
    for (const auto& [k, v] : c_) out.c_[k] = v * s;
    return out;
}

MultiPoly MultiPoly::derivative(int kVar) const {
    MultiPoly out;
    for (const auto& [k, v] : c_) {
        if (k[kVar] == 0) continue;
        Key kk = k;
        kk[kVar] -= 1;
        out.insertTerm(kk, v * GaussianRational(Rational(k[kVar])));
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficientsIn(int kVar) const {
    std::vector<MultiPoly> out(static_cast<size_t>(degreeIn(kVar)) + 1);
    for (const auto& [k, v] : c_) {
        Key kk = k;
        int pow = kk[kVar];
        kk[kVar] = 0;
        out[pow].insertTerm(kk, v);
    }
    return out;
}

MultiPoly MultiPoly::substitute(int kVar, const MultiPoly& value) const {
    std::vector<MultiPoly> coeffs = coefficientsIn(kVar);
    MultiPoly acc;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * value + coeffs[i];
    return acc;
}

MultiPoly MultiPoly::shiftVar(int kVar, const GaussianRational& c) const {
    return substitute(kVar, variable(kVar) + MultiPoly(c));
}

UPoly MultiPoly::toUnivariate(int kVar) const {
    std::vector<GaussianRational> v(static_cast<size_t>(degreeIn(kVar)) + 1, GaussianRational(0));
    for (const auto& [k, coeff] : c_) {
        for (int j = 0; j < kVars; ++j)
            if (j != kVar && k[j] != 0)
                throw std::domain_error("MultiPoly::toUnivariate: other variables present");
        v[k[kVar]] = coeff;
    }
    return UPoly(std::move(v));
}

MultiPoly MultiPoly::realCoeffs() const {
    MultiPoly out;
    for (const auto& [k, v] : c_)
        if (!v.re.isZero()) out.c_[k] = GaussianRational(v.re);
    return out;
}

MultiPoly MultiPoly::imagCoeffs() const {
    MultiPoly out;
    for (const auto& [k, v] : c_)
        if (!v.im.isZero()) out.c_[k] = GaussianRational(v.im);
    return out;
}

bool MultiPoly::hasImag() const {
    for (const auto& [k, v] : c_)
        if (!v.im.isZero()) return true;
    return false;
}

GaussianRational MultiPoly::evaluate(const std::array<GaussianRational, kVars>& x) const {
    GaussianRational acc(0);
    for (const auto& [k, v] : c_) {
        GaussianRational term = v;
        for (int j = 0; j < kVars; ++j)
            if (k[j] != 0) term *= x[j].pow(k[j]);
        acc += term;
    }
    return acc;
}

ComplexEnclosure MultiPoly::evaluateOnBox(const std::array<Enclosure, kVars>& box) const {
    ComplexEnclosure acc;
    for (const auto& [k, v] : c_) {
        ComplexEnclosure term{Enclosure(v.re), Enclosure(v.im)};
        for (int j = 0; j < kVars; ++j)
            if (k[j] != 0) term = term * ComplexEnclosure(box[j].pow(k[j]));
        acc += term;
    }
    return acc;
}

int MultiPoly::factorOutVar(int kVar) {
    if (c_.empty()) return 0;
    int minPow = INT32_MAX;
    for (const auto& [k, v] : c_) minPow = std::min(minPow, k[kVar]);
    if (minPow == 0) return 0;
    std::map<Key, GaussianRational> out;
    for (const auto& [k, v] : c_) {
        Key kk = k;
        kk[kVar] -= minPow;
        out[kk] = v;
    }
    c_ = std::move(out);
    return minPow;
}

}  // namespace modecert
