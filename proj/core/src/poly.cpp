#include "modecert/poly.hpp"

#include <mutex>

namespace modecert {

std::pair<UPoly, UPoly> polyDivMod(const UPoly& a, const UPoly& b) {
    if (b.isZero()) throw std::domain_error("polyDivMod: division by zero polynomial");
    size_t db = b.degree();
    std::vector<GaussianRational> rem = a.coeffs();
    if (rem.size() <= db) return {UPoly(), a};
    GaussianRational leadInv = b[db].inverse();
    std::vector<GaussianRational> quot(rem.size() - db, GaussianRational(0));
    for (size_t k = rem.size() - 1;; --k) {
        GaussianRational q = rem[k] * leadInv;
        quot[k - db] = q;
        for (size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
        if (k == db) break;
    }
    rem.resize(db);
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

RPoly realPart(const UPoly& p) {
    std::vector<Rational> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeffs()[k].re;
    return RPoly(std::move(v));
}

RPoly imagPart(const UPoly& p) {
    std::vector<Rational> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeffs()[k].im;
    return RPoly(std::move(v));
}

UPoly fromReal(const RPoly& p) {
    std::vector<GaussianRational> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = GaussianRational(p.coeffs()[k]);
    return UPoly(std::move(v));
}

UPoly conjugateCoefficients(const UPoly& p) {
    std::vector<GaussianRational> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeffs()[k].conj();
    return UPoly(std::move(v));
}

Enclosure evaluateEnclosure(const RPoly& p, const Enclosure& x) {
    Enclosure acc;
    for (size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + Enclosure(p.coeffs()[k]);
    return acc;
}

ComplexEnclosure evaluateEnclosure(const UPoly& p, const ComplexEnclosure& x) {
    ComplexEnclosure acc;
    for (size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + ComplexEnclosure(p.coeffs()[k]);
    return acc;
}

ComplexEnclosure evaluateEnclosureReal(const UPoly& p, const Enclosure& x) {
    return {evaluateEnclosure(realPart(p), x), evaluateEnclosure(imagPart(p), x)};
}

RPoly modulusSquared(const UPoly& p) {
    RPoly re = realPart(p);
    RPoly im = imagPart(p);
    return re * re + im * im;
}

namespace {

std::vector<RPoly> g_chebCache{RPoly(Rational(1)), RPoly::variable()};
std::mutex g_chebMutex;

}  // namespace

RPoly chebyshevT(size_t n) {
    std::lock_guard<std::mutex> lock(g_chebMutex);
    while (g_chebCache.size() <= n) {
        size_t k = g_chebCache.size();
        RPoly next = g_chebCache[k - 1] * RPoly::monomial(Rational(2), 1) - g_chebCache[k - 2];
        g_chebCache.push_back(std::move(next));
    }
    return g_chebCache[n];
}

RChebSeries toChebyshev(const RPoly& p) {
    // peel off the leading Chebyshev coefficient: for degree n >= 1 the lead
    // of T_n is 2^(n-1), so c_n = a_n / 2^(n-1).
    RPoly rem = p;
    std::vector<Rational> c(p.degree() + 1, Rational(0));
    for (size_t n = rem.degree(); n >= 1 && !rem.isZero(); --n) {
        if (rem.degree() < n) continue;
        Rational lead = rem[n];
        if (lead.isZero()) continue;
        Rational cn = lead / Rational(2).pow(static_cast<long>(n) - 1);
        c[n] = cn;
        rem = rem - chebyshevT(n).scaled(cn);
    }
    if (!rem.isZero()) c[0] = rem[0];
    RChebSeries s;
    s.c = std::move(c);
    while (!s.c.empty() && s.c.back().isZero()) s.c.pop_back();
    return s;
}

RPoly fromChebyshev(const RChebSeries& s) {
    RPoly acc;
    for (size_t l = 0; l < s.c.size(); ++l)
        if (!s.c[l].isZero()) acc += chebyshevT(l).scaled(s.c[l]);
    return acc;
}

ChebSeries toChebyshev(const UPoly& p) {
    RChebSeries re = toChebyshev(realPart(p));
    RChebSeries im = toChebyshev(imagPart(p));
    ChebSeries s;
    s.c.resize(std::max(re.c.size(), im.c.size()));
    for (size_t l = 0; l < s.c.size(); ++l)
        s.c[l] = GaussianRational(re.coefficient(l), im.coefficient(l));
    return s;
}

UPoly fromChebyshev(const ChebSeries& s) {
    UPoly acc;
    for (size_t l = 0; l < s.c.size(); ++l)
        if (!s.c[l].isZero()) acc += fromReal(chebyshevT(l)).scaled(s.c[l]);
    return acc;
}

size_t BivarPoly::degreeLambda() const {
    size_t d = 0;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

void BivarPoly::setCoefficient(size_t tPow, size_t lamPow, const GaussianRational& v) {
    if (rows_.size() <= tPow) rows_.resize(tPow + 1);
    std::vector<GaussianRational> cs = rows_[tPow].coeffs();
    if (cs.size() <= lamPow) cs.resize(lamPow + 1, GaussianRational(0));
    cs[lamPow] = v;
    rows_[tPow] = UPoly(std::move(cs));
    trim();
}

void BivarPoly::trim() {
    while (!rows_.empty() && rows_.back().isZero()) rows_.pop_back();
}

BivarPoly BivarPoly::operator-() const {
    std::vector<UPoly> rows(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) rows[i] = -rows_[i];
    return BivarPoly(std::move(rows));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<UPoly> rows(std::max(a.rows_.size(), b.rows_.size()));
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = a.row(i) + b.row(i);
    return BivarPoly(std::move(rows));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.isZero() || b.isZero()) return BivarPoly();
    std::vector<UPoly> rows(a.rows_.size() + b.rows_.size() - 1);
    for (size_t i = 0; i < a.rows_.size(); ++i)
        for (size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
    return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::derivativeT() const {
    if (rows_.size() <= 1) return BivarPoly();
    std::vector<UPoly> rows(rows_.size() - 1);
    for (size_t i = 1; i < rows_.size(); ++i)
        rows[i - 1] = rows_[i].scaled(GaussianRational(Rational(static_cast<long>(i))));
    return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::derivativeLambda() const {
    std::vector<UPoly> rows(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) rows[i] = rows_[i].derivative();
    return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::antiderivativeT() const {
    if (isZero()) return BivarPoly();
    std::vector<UPoly> rows(rows_.size() + 1);
    for (size_t i = 0; i < rows_.size(); ++i)
        rows[i + 1] = rows_[i].scaled(GaussianRational(Rational(1, static_cast<long>(i + 1))));
    return BivarPoly(std::move(rows));
}

GaussianRational BivarPoly::evaluate(const GaussianRational& t, const GaussianRational& lam) const {
    GaussianRational acc(0);
    for (size_t i = rows_.size(); i-- > 0;) acc = acc * t + rows_[i].evaluate(lam);
    return acc;
}

UPoly BivarPoly::atT(const GaussianRational& t) const {
    UPoly acc;
    for (size_t i = rows_.size(); i-- > 0;) acc = acc.scaled(t) + rows_[i];
    return acc;
}

UPoly BivarPoly::atLambda(const GaussianRational& lam) const {
    std::vector<GaussianRational> v(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) v[i] = rows_[i].evaluate(lam);
    return UPoly(std::move(v));
}

BivarPoly BivarPoly::substituteTAffine(const GaussianRational& a, const GaussianRational& b) const {
    // Horner in t with t = a + b x
    BivarPoly acc;
    std::vector<UPoly> lin(2);
    lin[0] = UPoly(a);
    lin[1] = UPoly(b);
    BivarPoly linear(std::move(lin));
    for (size_t i = rows_.size(); i-- > 0;) acc = acc * linear + BivarPoly::fromLambdaPoly(rows_[i]);
    return acc;
}

BivarPoly BivarPoly::recenterLambda(const GaussianRational& lam0) const {
    std::vector<UPoly> rows(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i)
        rows[i] = rows_[i].composeAffine(lam0, GaussianRational(1));
    return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::divideByTPower(size_t k) const {
    if (isZero()) return BivarPoly();
    if (rows_.size() <= k) throw std::domain_error("divideByTPower: degree too small");
    for (size_t j = 0; j < k; ++j)
        if (!rows_[j].isZero()) throw std::domain_error("divideByTPower: not divisible");
    return BivarPoly(std::vector<UPoly>(rows_.begin() + k, rows_.end()));
}

}  // namespace modecert
