#pragma once

#include "modecert/enclosure.hpp"
#include "modecert/rational.hpp"

#include <string>
#include <vector>

namespace modecert {

/// Node of a certificate tree. A leaf records one checked inequality with its
/// claimed bound and the exactly computed value; the root verdict is the
/// conjunction of all leaves.
struct Certificate {
    std::string name;
    std::string claim;      // e.g. "|W0| > 79/100"
    std::string computed;   // exact rational/enclosure rendered as text
    bool pass = true;
    double ms = 0.0;
    std::vector<Certificate> children;

    static Certificate group(std::string name);
    static Certificate leaf(std::string name, std::string claim, bool pass, std::string computed);

    Certificate& add(Certificate child);
    bool verdict() const;
    size_t leafCount() const;
    size_t failedLeafCount() const;
};

/// Leaf builders for the common comparison shapes. The computed value is
/// always recorded exactly.
Certificate checkLess(std::string name, const Rational& computed, const Rational& bound);
Certificate checkLessEq(std::string name, const Rational& computed, const Rational& bound);
Certificate checkGreater(std::string name, const Rational& computed, const Rational& bound);
Certificate checkGreaterEq(std::string name, const Rational& computed, const Rational& bound);
Certificate checkTrue(std::string name, std::string claim, bool pass, std::string computed = "");
/// computed value known only as an enclosure: pass iff the whole enclosure
/// satisfies the comparison.
Certificate checkEnclosureLess(std::string name, const Enclosure& computed, const Rational& bound);
Certificate checkEnclosureGreater(std::string name, const Enclosure& computed, const Rational& bound);

}  // namespace modecert
