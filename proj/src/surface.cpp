#include "twistfloer/surface.hpp"

#include "twistfloer/errors.hpp"

namespace twistfloer {

Int AlgebraicSurface::pairing(const IntVector& x, const IntVector& y) const {
    if (x.size() != J.rows() || y.size() != J.rows())
        throw input_error("pairing: class length must be 2*genus");
    return (x.transpose() * J * y)(0, 0);
}

std::string AlgebraicSurface::basis_name(int i) {
    const int handle = i / 2 + 1;
    return (i % 2 == 0 ? "a" : "b") + std::to_string(handle);
}

IntMatrix standard_form(int genus) {
    IntMatrix J = IntMatrix::Zero(2 * genus, 2 * genus);
    for (int h = 0; h < genus; ++h) {
        J(2 * h, 2 * h + 1) = 1;
        J(2 * h + 1, 2 * h) = -1;
    }
    return J;
}

IntMatrix split_form(int genus) {
    IntMatrix J = IntMatrix::Zero(2 * genus, 2 * genus);
    for (int h = 0; h < genus; ++h) {
        J(h, genus + h) = 1;
        J(genus + h, h) = -1;
    }
    return J;
}

AlgebraicSurface standard_surface(int genus) {
    if (genus < 1)
        throw input_error("standard_surface: genus 0 unsupported (chi < 0 assumed)");
    AlgebraicSurface s;
    s.genus = genus;
    s.J = standard_form(genus);
    s.warning = (genus == 1);  // theorem-level claims require genus > 1
    return s;
}

}  // namespace twistfloer
