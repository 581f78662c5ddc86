#ifndef TWISTFLOER_ERRORS_HPP
#define TWISTFLOER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistfloer {

/// Malformed or unresolvable input: schema violations, dimension mismatches,
/// unknown names, out-of-domain arguments. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Geometrically inconsistent instance data (e.g. a non-transverse crossing
/// pattern at a shared vertex). A validity verdict about the instance, not an
/// I/O failure; CLI maps this to exit code 1.
struct geometry_error : std::runtime_error {
    explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured completeness bound was exceeded (polynomial degree > 8,
/// reorder search size > 10). CLI maps this to exit code 2.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violation: something the mathematics guarantees failed to
/// hold, which signals a bug rather than bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twistfloer

#endif
