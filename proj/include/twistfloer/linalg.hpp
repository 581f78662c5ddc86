#ifndef TWISTFLOER_LINALG_HPP
#define TWISTFLOER_LINALG_HPP

#include "twistfloer/polynomial.hpp"
#include "twistfloer/scalars.hpp"

#include <Eigen/Dense>

namespace twistfloer {

/// Dense exact-integer matrix / vector.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Dense matrix over the two-element field.
using F2Matrix = Eigen::Matrix<F2, Eigen::Dynamic, Eigen::Dynamic>;

/// Characteristic polynomial det(zeta I - m), monic of degree n, by the
/// Faddeev-LeVerrier scheme; every internal division is an exact integer
/// division (checked). Dimension error on non-square input.
IntPolynomial charpoly(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination; the independent
/// cross-check route for charpoly's constant term.
Int det_bareiss(IntMatrix m);

/// Rank over F2 by Gaussian elimination with the fixed deterministic pivot
/// rule: columns left to right, first nonzero row at or below the pivot row.
int f2_rank(F2Matrix m);

/// Entrywise reduction mod 2.
F2Matrix mod2(const IntMatrix& m);

/// Exact entrywise equality (Eigen leaves matrix == matrix undefined).
bool matrices_equal(const IntMatrix& a, const IntMatrix& b);

/// True iff m^T J m = J.
bool preserves_form(const IntMatrix& m, const IntMatrix& J);

/// Inverse of a matrix known to satisfy m^T J m = J with J^2 = -I:
/// m^{-1} = -J m^T J. Exact, division-free.
IntMatrix symplectic_inverse(const IntMatrix& m, const IntMatrix& J);

}  // namespace twistfloer

#endif
