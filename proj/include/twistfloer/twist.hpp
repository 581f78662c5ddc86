#ifndef TWISTFLOER_TWIST_HPP
#define TWISTFLOER_TWIST_HPP

#include "twistfloer/curves.hpp"

#include <string>
#include <utility>
#include <vector>

namespace twistfloer {

/// Ordered sequence of signed twist generators. The FIRST list element is
/// applied FIRST: the word [g1, ..., gm] denotes the composition
/// T_{gm} o ... o T_{g1}, so the matrix of the last-applied twist is leftmost
/// in the product.
struct TwistLetter {
    std::string curve;
    int sign = +1;  // +1 positive (right-handed) twist, -1 its inverse
};
using TwistWord = std::vector<TwistLetter>;

/// Matrix of the transvection x -> x + sign * <x, cls> * cls on H1, where
/// <x, y> = x^T J y. Dimension error when cls does not match the surface.
IntMatrix transvection_matrix(const IntVector& cls, int sign,
                              const AlgebraicSurface& surface);

/// Product of the word's transvection matrices in the frozen convention.
/// Unknown curve names raise input_error.
IntMatrix word_matrix(const TwistWord& word, const CurveSystem& sys);

/// All-positive word over the system's curves in the given index order
/// (defaults to file order).
TwistWord positive_word(const CurveSystem& sys, const std::vector<int>& order = {});

/// Lefschetz number 2 - trace(m) of an orientation-preserving surface map's
/// H1 action. Non-square input is a dimension error.
Int lefschetz_number(const IntMatrix& m);

}  // namespace twistfloer

#endif
