#include "modecert/certificate.hpp"

namespace modecert {

Certificate Certificate::group(std::string name) {
    Certificate c;
    c.name = std::move(name);
    return c;
}

Certificate Certificate::leaf(std::string name, std::string claim, bool pass, std::string computed) {
    Certificate c;
    c.name = std::move(name);
    c.claim = std::move(claim);
    c.computed = std::move(computed);
    c.pass = pass;
    return c;
}

Certificate& Certificate::add(Certificate child) {
    children.push_back(std::move(child));
    return children.back();
}

bool Certificate::verdict() const {
    if (!pass) return false;
    for (const auto& c : children)
        if (!c.verdict()) return false;
    return true;
}

size_t Certificate::leafCount() const {
    if (children.empty()) return 1;
    size_t n = 0;
    for (const auto& c : children) n += c.leafCount();
    return n;
}

size_t Certificate::failedLeafCount() const {
    if (children.empty()) return verdict() ? 0 : 1;
    size_t n = 0;
    for (const auto& c : children) n += c.failedLeafCount();
    return n;
}

Certificate checkLess(std::string name, const Rational& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value < " + bound.toString(), computed < bound,
                             computed.toString());
}

Certificate checkLessEq(std::string name, const Rational& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value <= " + bound.toString(), computed <= bound,
                             computed.toString());
}

Certificate checkGreater(std::string name, const Rational& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value > " + bound.toString(), computed > bound,
                             computed.toString());
}

Certificate checkGreaterEq(std::string name, const Rational& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value >= " + bound.toString(), computed >= bound,
                             computed.toString());
}

Certificate checkTrue(std::string name, std::string claim, bool pass, std::string computed) {
    return Certificate::leaf(std::move(name), std::move(claim), pass, std::move(computed));
}

Certificate checkEnclosureLess(std::string name, const Enclosure& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value < " + bound.toString(), computed.hi() < bound,
                             computed.toString());
}

Certificate checkEnclosureGreater(std::string name, const Enclosure& computed, const Rational& bound) {
    return Certificate::leaf(std::move(name), "value > " + bound.toString(), computed.lo() > bound,
                             computed.toString());
}

}  // namespace modecert
