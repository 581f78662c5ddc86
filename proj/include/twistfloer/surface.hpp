#ifndef TWISTFLOER_SURFACE_HPP
#define TWISTFLOER_SURFACE_HPP

#include "twistfloer/linalg.hpp"

namespace twistfloer {

/// Tier-1 algebraic model of a closed oriented surface: genus plus the
/// symplectic intersection form on H1 in the interleaved basis
/// a1, b1, ..., a_g, b_g (so <a_i, b_i> = +1 and all other basis pairings
/// vanish). Satisfies J^2 = -I and J^T = -J.
struct AlgebraicSurface {
    int genus = 0;
    IntMatrix J;          // 2g x 2g block diagonal of [[0,1],[-1,0]]
    bool warning = false; // raised for genus 1 (theorem-level claims need g > 1)

    int dim() const { return 2 * genus; }

    /// Algebraic intersection number <x, y> = x^T J y.
    Int pairing(const IntVector& x, const IntVector& y) const;

    /// Name of basis vector i in the interleaved order: a1, b1, a2, b2, ...
    static std::string basis_name(int i);
};

/// The standard surface of the given genus. Genus 0 is unsupported (the
/// library assumes chi < 0 contexts; genus 1 is allowed with a warning flag).
AlgebraicSurface standard_surface(int genus);

/// The interleaved-convention form matrix by itself.
IntMatrix standard_form(int genus);

/// The split-convention form [[0, I_g], [-I_g, 0]]; accepted as an alternative
/// convention when checking externally supplied matrices for symplecticity.
IntMatrix split_form(int genus);

}  // namespace twistfloer

#endif
