#pragma once

#include "modecert/elementary.hpp"
#include "modecert/multipoly.hpp"
#include "modecert/poly.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace modecert {

/// Affine image lambda(x) = center + radius * x of [-1,1] covering one
/// axis-parallel boundary segment.
struct BoundarySegment {
    GaussianRational center;
    GaussianRational radius;

    static BoundarySegment betweenEndpoints(const GaussianRational& from, const GaussianRational& to) {
        GaussianRational half(Rational(1, 2));
        return {(from + to) * half, (to - from) * half};
    }
    GaussianRational at(const Rational& x) const { return center + radius * GaussianRational(x); }
    GaussianRational from() const { return at(Rational(-1)); }
    GaussianRational to() const { return at(Rational(1)); }
    /// Sub-segment covering parameter range [x0, x1] of this segment.
    BoundarySegment restricted(const Rational& x0, const Rational& x1) const {
        return betweenEndpoints(at(x0), at(x1));
    }
};

/// Counterclockwise partition of an axis-aligned rectangle boundary.
class RegionPartition {
public:
    /// Points must be in counterclockwise order on the boundary of the
    /// rectangle [reLo, reHi] x [imLo, imHi] and include all four vertices.
    RegionPartition(std::vector<GaussianRational> points,
                    Rational reLo, Rational reHi, Rational imLo, Rational imHi);

    const std::vector<GaussianRational>& points() const { return points_; }
    std::vector<BoundarySegment> segments() const;

    Rational reLo() const { return reLo_; }
    Rational reHi() const { return reHi_; }
    Rational imLo() const { return imLo_; }
    Rational imHi() const { return imHi_; }

private:
    std::vector<GaussianRational> points_;
    Rational reLo_, reHi_, imLo_, imHi_;
};

/// F(lambda) = P(lambda) + sum_j res_j / (lambda - pole_j), simple poles.
struct RationalFunctionForm {
    struct Pole {
        GaussianRational location;
        GaussianRational residue;
    };
    UPoly poly;
    std::vector<Pole> poles;

    GaussianRational evaluate(const GaussianRational& lam) const;
    ComplexEnclosure evaluateEnclosure(const ComplexEnclosure& lam) const;
};

struct ModulusBounds {
    Rational lower;  // certified lower bound of |F| (0 when nothing better is known)
    Rational upper;  // certified upper bound of |F|
};

/// Tolerance knobs mirroring the coefficient-rounding used in the source
/// bounds. Defaults reproduce them; "tight" shrinks the roundings.
struct BoundSettings {
    Rational coeffRounding;   // rounding granted when rationalizing Taylor coefficients
    Rational headRounding;    // rounding granted on the cubic Chebyshev head
    int truncationOrder = 10; // geometric truncation order m0
    static BoundSettings paperProfile();
    static BoundSettings tightProfile();
};

/// Upper bound of |P(x, lambda)| over x in [-1,1], |lambda - lam0| <= radius:
/// recenter at lam0, expand the x-powers in Chebyshev basis, and sum the
/// coefficient moduli against the disk radius powers.
Rational boundOnBox(const BivarPoly& P, const GaussianRational& lam0, const Enclosure& radius);

/// Rigorous (min, max) enclosures of a real cubic over [-1,1]: endpoint
/// values plus enclosed quadratic critical points.
std::pair<Enclosure, Enclosure> cubicExtremaOnUnitInterval(const RPoly& cubic);

/// Geometric-series truncation pipeline for |F| on one boundary segment.
/// Requires every pole's disk ratio |radius/(center-pole)| < 1.
ModulusBounds boundRationalOnSegment(const RationalFunctionForm& F, const BoundarySegment& seg,
                                     int m0, const BoundSettings& settings);
/// Aggregate over a partition: (min of lowers, max of uppers).
ModulusBounds boundRationalOnPartition(const RationalFunctionForm& F, const RegionPartition& partition,
                                       const BoundSettings& settings);

/// Degree-5 Chebyshev head split for a polynomial on one segment.
ModulusBounds boundPolyOnSegment(const UPoly& P, const BoundarySegment& seg,
                                 const BoundSettings& settings);
ModulusBounds boundPolyOnPartition(const UPoly& P, const RegionPartition& partition,
                                   const BoundSettings& settings);

/// Upper bound of sup_{x in [-1,1]} |q(x)| e^{reH(x)} by adaptive subdivision
/// with per-cell exact quartic/quadratic extrema. reH must have degree <= 2.
Rational supModExpOnInterval(const UPoly& q, const RPoly& reH, const Rational& tol);

enum class PolySign { NonNegative, NonPositive, Indeterminate };

/// Certifies the sign of a real polynomial on [a, b] via the Chebyshev
/// head+tail bound or the monotone-derivative chain, with automatic
/// bisection up to `bisectDepth`.
PolySign signCertificateOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                   int bisectDepth = 12);
bool certifyNonNegativeOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                  int bisectDepth = 12);
bool certifyNonPositiveOnInterval(const RPoly& w, const Rational& a, const Rational& b,
                                  int bisectDepth = 12);

using Box3 = std::array<Enclosure, 3>;

/// Interval range of a real multivariate polynomial over a box.
Enclosure rangeOnBox(const MultiPoly& p, const Box3& box);
/// Bisection certificate that p >= 0 (resp. <= 0) everywhere on the box.
bool certifyNonNegativeOnBox(const MultiPoly& p, const Box3& box, int depth = 14);
bool certifyNonPositiveOnBox(const MultiPoly& p, const Box3& box, int depth = 14);

/// Rigorous winding number of an analytic function along the counterclockwise
/// boundary of the rectangle [reLo,reHi] x [imLo,imHi]. `eval` must be exact;
/// `enclose` must contain the image of any lambda rectangle. Throws
/// std::runtime_error if the refinement cap is reached.
int windingNumberOnRectangle(
    const std::function<GaussianRational(const GaussianRational&)>& eval,
    const std::function<ComplexEnclosure(const ComplexEnclosure&)>& enclose,
    const Rational& reLo, const Rational& reHi, const Rational& imLo, const Rational& imHi,
    int maxDepth = 24);

}  // namespace modecert
