#include "modecert/bounds.hpp"

#include <stdexcept>

namespace modecert {

namespace {

struct Leg {
    GaussianRational from;
    GaussianRational to;
    int depth;
};

ComplexEnclosure hullBox(const GaussianRational& a, const GaussianRational& b) {
    return {Enclosure(min(a.re, b.re), max(a.re, b.re)),
            Enclosure(min(a.im, b.im), max(a.im, b.im))};
}

}  // namespace

int windingNumberOnRectangle(
    const std::function<GaussianRational(const GaussianRational&)>& eval,
    const std::function<ComplexEnclosure(const ComplexEnclosure&)>& enclose,
    const Rational& reLo, const Rational& reHi, const Rational& imLo, const Rational& imHi,
    int maxDepth) {
    GaussianRational c1{reLo, imLo}, c2{reHi, imLo}, c3{reHi, imHi}, c4{reLo, imHi};
    std::vector<Leg> stack{{c4, c1, maxDepth}, {c3, c4, maxDepth}, {c2, c3, maxDepth}, {c1, c2, maxDepth}};

    long crossings = 0;
    while (!stack.empty()) {
        Leg leg = stack.back();
        stack.pop_back();
        ComplexEnclosure image = enclose(hullBox(leg.from, leg.to));

        auto split = [&](const Rational& ratio) {
            if (leg.depth <= 0)
                throw std::runtime_error("windingNumberOnRectangle: refinement cap reached");
            GaussianRational mid = leg.from + (leg.to - leg.from) * GaussianRational(ratio);
            stack.push_back({mid, leg.to, leg.depth - 1});
            stack.push_back({leg.from, mid, leg.depth - 1});
        };

        if (image.containsZero()) {
            split(Rational(1, 2));
            continue;
        }
        bool touchesRay = image.im.containsZero() && image.re.lo().sign() < 0;
        if (!touchesRay) continue;
        if (image.re.hi().sign() >= 0) {
            split(Rational(1, 2));
            continue;
        }
        // Image lies in {Re < 0}: net signed ray crossings are read off the
        // exact endpoint values. Points on the ray count as "above"; the
        // convention is applied consistently at shared endpoints, so the
        // per-leg counts telescope to the true crossing number.
        bool above0 = eval(leg.from).im.sign() >= 0;
        bool above1 = eval(leg.to).im.sign() >= 0;
        if (above0 && !above1) ++crossings;
        if (!above0 && above1) --crossings;
    }
    return static_cast<int>(crossings);
}

}  // namespace modecert
