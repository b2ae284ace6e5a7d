#include "modecert/bounds.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace modecert {

namespace {

Rational eMinus(int k) {
    // rational upper bounds of e^-7 and e^-9, used as rounding granularities
    if (k == 7) return Rational(1, 1097);
    if (k == 9) return Rational(1, 8104);
    return Rational(1, 1000);
}

GaussianRational roundCoefficient(const GaussianRational& z, const Rational& tol) {
    // nearest simple rational within tol of each part; callers account for the
    // rounding in a separate error term
    Rational re = Rational::simplestInInterval(z.re - tol, z.re + tol);
    Rational im = Rational::simplestInInterval(z.im - tol, z.im + tol);
    return {re, im};
}

Rational absUpper(const GaussianRational& z) {
    return sqrtEnclosure(z.absSquared(), defaultSqrtTol(z.absSquared())).hi();
}

}  // namespace

BoundSettings BoundSettings::paperProfile() {
    BoundSettings s;
    s.coeffRounding = eMinus(9);
    s.headRounding = eMinus(7);
    s.truncationOrder = 10;
    return s;
}

BoundSettings BoundSettings::tightProfile() {
    BoundSettings s;
    s.coeffRounding = Rational(1, 1000000000L);
    s.headRounding = Rational(1, 100000000L);
    s.truncationOrder = 14;
    return s;
}

RegionPartition::RegionPartition(std::vector<GaussianRational> points,
                                 Rational reLo, Rational reHi, Rational imLo, Rational imHi)
    : points_(std::move(points)), reLo_(std::move(reLo)), reHi_(std::move(reHi)),
      imLo_(std::move(imLo)), imHi_(std::move(imHi)) {
    if (points_.size() < 4) throw std::invalid_argument("RegionPartition: too few points");
    const GaussianRational corners[4] = {
        {reLo_, imLo_}, {reHi_, imLo_}, {reHi_, imHi_}, {reLo_, imHi_}};
    for (const auto& corner : corners) {
        bool found = false;
        for (const auto& p : points_)
            if (p == corner) { found = true; break; }
        if (!found) throw std::invalid_argument("RegionPartition: missing rectangle vertex");
    }
    auto onBoundary = [&](const GaussianRational& p) {
        bool onVertical = (p.re == reLo_ || p.re == reHi_) && imLo_ <= p.im && p.im <= imHi_;
        bool onHorizontal = (p.im == imLo_ || p.im == imHi_) && reLo_ <= p.re && p.re <= reHi_;
        return onVertical || onHorizontal;
    };
    for (const auto& p : points_)
        if (!onBoundary(p)) throw std::invalid_argument("RegionPartition: point off the boundary");
    for (size_t i = 0; i < points_.size(); ++i) {
        const auto& a = points_[i];
        const auto& b = points_[(i + 1) % points_.size()];
        if (a.re != b.re && a.im != b.im)
            throw std::invalid_argument("RegionPartition: segment not axis-parallel");
    }
}

std::vector<BoundarySegment> RegionPartition::segments() const {
    std::vector<BoundarySegment> out;
    out.reserve(points_.size());
    for (size_t i = 0; i < points_.size(); ++i)
        out.push_back(BoundarySegment::betweenEndpoints(points_[i], points_[(i + 1) % points_.size()]));
    return out;
}

GaussianRational RationalFunctionForm::evaluate(const GaussianRational& lam) const {
    GaussianRational acc = poly.evaluate(lam);
    for (const auto& p : poles) acc += p.residue / (lam - p.location);
    return acc;
}

ComplexEnclosure RationalFunctionForm::evaluateEnclosure(const ComplexEnclosure& lam) const {
    ComplexEnclosure acc = modecert::evaluateEnclosure(poly, lam);
    for (const auto& p : poles) {
        ComplexEnclosure den = lam - ComplexEnclosure(p.location);
        acc += ComplexEnclosure(p.residue) / den;
    }
    return acc;
}

Rational boundOnBox(const BivarPoly& P, const GaussianRational& lam0, const Enclosure& radius) {
    BivarPoly recentered = P.recenterLambda(lam0);
    size_t degL = recentered.degreeLambda();
    std::vector<Rational> rPow(degL + 1);
    Enclosure rAbs = radius.abs();
    Enclosure acc(Rational(1));
    for (size_t j = 0; j <= degL; ++j) {
        rPow[j] = acc.hi();
        acc = acc * rAbs;
    }
    Rational total(0);
    for (size_t i = 0; i <= recentered.degreeT(); ++i) {
        const UPoly rowPoly = recentered.row(i);
        if (rowPoly.isZero()) continue;
        RChebSeries cheb = toChebyshev(RPoly::monomial(Rational(1), i));
        Rational chebAbsSum(0);
        for (const auto& cl : cheb.c) chebAbsSum += cl.abs();
        for (size_t j = 0; j <= rowPoly.degree(); ++j) {
            GaussianRational a = rowPoly[j];
            if (a.isZero()) continue;
            total += absUpper(a) * chebAbsSum * rPow[j];
        }
    }
    return total;
}

std::pair<Enclosure, Enclosure> cubicExtremaOnUnitInterval(const RPoly& cubic) {
    if (cubic.degree() > 3) throw std::invalid_argument("cubicExtremaOnUnitInterval: degree > 3");
    std::vector<Enclosure> candidates;
    candidates.emplace_back(cubic.evaluate(Rational(-1)));
    candidates.emplace_back(cubic.evaluate(Rational(1)));

    auto pushCritical = [&](const Enclosure& x) {
        Rational lo = max(x.lo(), Rational(-1));
        Rational hi = min(x.hi(), Rational(1));
        if (lo > hi) return;
        candidates.push_back(evaluateEnclosure(cubic, Enclosure(lo, hi)));
    };

    Rational c1 = cubic[1], c2 = cubic[2], c3 = cubic[3];
    if (!c3.isZero()) {
        Rational disc = Rational(4) * c2 * c2 - Rational(12) * c3 * c1;
        if (disc.sign() >= 0) {
            Enclosure sq = sqrtEnclosure(disc, defaultSqrtTol(disc));
            Enclosure den(Rational(6) * c3);
            pushCritical((Enclosure(Rational(-2) * c2) + sq) / den);
            pushCritical((Enclosure(Rational(-2) * c2) - sq) / den);
        }
    } else if (!c2.isZero()) {
        pushCritical(Enclosure(-c1 / (Rational(2) * c2)));
    }

    Rational minLo = candidates[0].lo(), minHi = candidates[0].hi();
    Rational maxLo = candidates[0].lo(), maxHi = candidates[0].hi();
    for (const auto& c : candidates) {
        minLo = min(minLo, c.lo());
        minHi = min(minHi, c.hi());
        maxLo = max(maxLo, c.lo());
        maxHi = max(maxHi, c.hi());
    }
    return {Enclosure(minLo, minHi), Enclosure(maxLo, maxHi)};
}

namespace {

// Shared tail of both segment pipelines: given the polynomial approximation G
// of F on [-1,1] with |F - G| <= outerError, bound |F| through the cubic
// Chebyshev head of |G|^2.
ModulusBounds headSplitBounds(const UPoly& G, const Rational& outerError,
                              const BoundSettings& settings) {
    RPoly mod2 = modulusSquared(G);
    RChebSeries cheb = toChebyshev(mod2);
    std::vector<Rational> head(4, Rational(0));
    Rational headErr(0);
    for (size_t k = 0; k < cheb.c.size(); ++k) {
        if (k <= 3) {
            Rational rounded = Rational::simplestInInterval(cheb.c[k] - settings.headRounding,
                                                            cheb.c[k] + settings.headRounding);
            head[k] = rounded;
            headErr += (cheb.c[k] - rounded).abs();
        } else {
            headErr += cheb.c[k].abs();
        }
    }
    RPoly cubicHead = fromChebyshev(RChebSeries{head});
    auto [minE, maxE] = cubicExtremaOnUnitInterval(cubicHead);

    Rational upper2 = max(maxE.hi() + headErr, Rational(0));
    Rational upper = sqrtEnclosure(upper2, defaultSqrtTol(upper2)).hi() + outerError;

    Rational lower2 = minE.lo() - headErr;
    Rational lower(0);
    if (lower2.sign() > 0) {
        Rational root = sqrtEnclosure(lower2, defaultSqrtTol(lower2)).lo();
        lower = max(Rational(0), root - outerError);
    }
    return {lower, upper};
}

}  // namespace

ModulusBounds boundRationalOnSegment(const RationalFunctionForm& F, const BoundarySegment& seg,
                                     int m0, const BoundSettings& settings) {
    UPoly G = F.poly.composeAffine(seg.center, seg.radius);
    Rational truncationError(0);
    for (const auto& p : F.poles) {
        GaussianRational base = seg.center - p.location;
        Rational ratio2 = seg.radius.absSquared() / base.absSquared();
        if (ratio2 >= Rational(1))
            throw std::domain_error("boundRationalOnSegment: pole inside the segment disk");
        // res/(lambda - s) = (res/base) sum_k (-radius x / base)^k + geometric tail
        GaussianRational scale = p.residue / base;
        GaussianRational q = -seg.radius / base;
        GaussianRational power(Rational(1));
        UPoly expansion;
        for (int k = 0; k <= m0; ++k) {
            expansion += UPoly::monomial(scale * power, k);
            power *= q;
        }
        G += expansion;
        Rational ratioU = sqrtEnclosure(ratio2, defaultSqrtTol(ratio2)).hi();
        Rational tail = absUpper(scale) * absUpper(power) / (Rational(1) - ratioU);
        truncationError += tail;
    }
    Rational roundingError(0);
    std::vector<GaussianRational> rounded(G.coeffs().size());
    for (size_t k = 0; k < G.coeffs().size(); ++k) {
        rounded[k] = roundCoefficient(G.coeffs()[k], settings.coeffRounding);
        roundingError += absUpper(G.coeffs()[k] - rounded[k]);
    }
    return headSplitBounds(UPoly(std::move(rounded)), truncationError + roundingError, settings);
}

ModulusBounds boundRationalOnPartition(const RationalFunctionForm& F, const RegionPartition& partition,
                                       const BoundSettings& settings) {
    ModulusBounds out{Rational(0), Rational(0)};
    bool first = true;
    for (const auto& seg : partition.segments()) {
        ModulusBounds b = boundRationalOnSegment(F, seg, settings.truncationOrder, settings);
        if (first) {
            out = b;
            first = false;
        } else {
            out.lower = min(out.lower, b.lower);
            out.upper = max(out.upper, b.upper);
        }
    }
    return out;
}

ModulusBounds boundPolyOnSegment(const UPoly& P, const BoundarySegment& seg,
                                 const BoundSettings& settings) {
    UPoly onSeg = P.composeAffine(seg.center, seg.radius);
    ChebSeries cheb = toChebyshev(onSeg);
    std::vector<GaussianRational> head(std::min<size_t>(cheb.c.size(), 6), GaussianRational(0));
    Rational tailError(0);
    for (size_t k = 0; k < cheb.c.size(); ++k) {
        if (k <= 5)
            head[k] = cheb.c[k];
        else
            tailError += absUpper(cheb.c[k]);
    }
    UPoly headPoly = fromChebyshev(ChebSeries{head});
    return headSplitBounds(headPoly, tailError, settings);
}

ModulusBounds boundPolyOnPartition(const UPoly& P, const RegionPartition& partition,
                                   const BoundSettings& settings) {
    ModulusBounds out{Rational(0), Rational(0)};
    bool first = true;
    for (const auto& seg : partition.segments()) {
        ModulusBounds b = boundPolyOnSegment(P, seg, settings);
        if (first) {
            out = b;
            first = false;
        } else {
            out.lower = min(out.lower, b.lower);
            out.upper = max(out.upper, b.upper);
        }
    }
    return out;
}

namespace {

Rational quadraticMax(const RPoly& p, const Rational& a, const Rational& b) {
    if (p.degree() > 2) throw std::invalid_argument("quadraticMax: degree > 2");
    Rational best = max(p.evaluate(a), p.evaluate(b));
    Rational c2 = p[2];
    if (!c2.isZero()) {
        Rational vertex = -p[1] / (Rational(2) * c2);
        if (a < vertex && vertex < b) best = max(best, p.evaluate(vertex));
    }
    return best;
}

// upper bound of a real polynomial of degree <= 4 on [a, b]
Rational quarticMaxUpper(const RPoly& mod2, const Rational& a, const Rational& b) {
    RPoly onCell = mod2.composeAffine((a + b) / Rational(2), (b - a) / Rational(2));
    RChebSeries cheb = toChebyshev(onCell);
    std::vector<Rational> head(std::min<size_t>(cheb.c.size(), 4), Rational(0));
    Rational tail(0);
    for (size_t k = 0; k < cheb.c.size(); ++k) {
        if (k <= 3)
            head[k] = cheb.c[k];
        else
            tail += cheb.c[k].abs();
    }
    auto [minE, maxE] = cubicExtremaOnUnitInterval(fromChebyshev(RChebSeries{head}));
    return maxE.hi() + tail;
}

struct Cell {
    Rational a, b;
    Rational bound;
};

}  // namespace

Rational supModExpOnInterval(const UPoly& q, const RPoly& reH, const Rational& tol) {
    if (reH.degree() > 2) throw std::invalid_argument("supModExpOnInterval: exponent head degree > 2");
    RPoly mod2 = modulusSquared(q);
    Rational expTol = min(tol, Rational(1, 1024));

    auto cellBound = [&](const Rational& a, const Rational& b) {
        Rational q2 = max(quarticMaxUpper(mod2, a, b), Rational(0));
        Rational qUpper = sqrtEnclosure(q2, defaultSqrtTol(q2)).hi();
        Rational hMax = quadraticMax(reH, a, b);
        return qUpper * expEnclosure(hMax, expTol).hi();
    };

    std::deque<Cell> cells;
    cells.push_back({Rational(-1), Rational(1), cellBound(Rational(-1), Rational(1))});
    for (int iter = 0; iter < 64; ++iter) {
        auto worst = std::max_element(cells.begin(), cells.end(),
                                      [](const Cell& x, const Cell& y) { return x.bound < y.bound; });
        Rational before = worst->bound;
        Rational mid = (worst->a + worst->b) / Rational(2);
        Cell left{worst->a, mid, cellBound(worst->a, mid)};
        Cell right{mid, worst->b, cellBound(mid, worst->b)};
        *worst = left;
        cells.push_back(right);
        Rational after(0);
        for (const auto& c : cells) after = max(after, c.bound);
        if (before - after < tol * max(after, Rational(1))) break;
    }
    Rational out(0);
    for (const auto& c : cells) out = max(out, c.bound);
    return out;
}

Enclosure rangeOnBox(const MultiPoly& p, const Box3& box) {
    if (p.hasImag()) throw std::invalid_argument("rangeOnBox: polynomial has imaginary coefficients");
    return p.evaluateOnBox(box).re;
}

namespace {

bool certifySignOnBox(const MultiPoly& p, const Box3& box, int depth, bool wantNonNegative) {
    Enclosure range = rangeOnBox(p, box);
    if (wantNonNegative ? range.lo().sign() >= 0 : range.hi().sign() <= 0) return true;
    if (wantNonNegative ? range.hi().sign() < 0 : range.lo().sign() > 0) return false;
    if (depth <= 0) return false;
    int axis = 0;
    Rational w = box[0].width();
    for (int j = 1; j < 3; ++j)
        if (box[j].width() > w) { w = box[j].width(); axis = j; }
    if (w.isZero()) return false;
    Rational mid = box[axis].mid();
    Box3 lo = box, hi = box;
    lo[axis] = Enclosure(box[axis].lo(), mid);
    hi[axis] = Enclosure(mid, box[axis].hi());
    return certifySignOnBox(p, lo, depth - 1, wantNonNegative) &&
           certifySignOnBox(p, hi, depth - 1, wantNonNegative);
}

}  // namespace

bool certifyNonNegativeOnBox(const MultiPoly& p, const Box3& box, int depth) {
    return certifySignOnBox(p, box, depth, true);
}

bool certifyNonPositiveOnBox(const MultiPoly& p, const Box3& box, int depth) {
    return certifySignOnBox(p, box, depth, false);
}

}  // namespace modecert
