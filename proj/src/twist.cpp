#include "twistfloer/twist.hpp"

#include "twistfloer/errors.hpp"

#include <set>

namespace twistfloer {

IntMatrix transvection_matrix(const IntVector& cls, int sign,
                              const AlgebraicSurface& surface) {
    if (cls.size() != surface.dim())
        throw input_error("transvection: class dimension " + std::to_string(cls.size()) +
                          " does not match surface dimension " +
                          std::to_string(surface.dim()));
    if (sign != 1 && sign != -1)
        throw input_error("transvection: sign must be +1 or -1");
    const int d = surface.dim();
    // x -> x + sign * <x, c> * c  with  <x, c> = x^T J c, i.e.
    // M = I + sign * c (J c)^T.
    IntMatrix m = IntMatrix::Identity(d, d);
    m += Int(sign) * cls * (surface.J * cls).transpose();
    return m;
}

IntMatrix word_matrix(const TwistWord& word, const CurveSystem& sys) {
    const int d = sys.surface.dim();
    IntMatrix m = IntMatrix::Identity(d, d);
    for (const TwistLetter& letter : word) {
        const Curve& c = sys.curves[sys.index_of(letter.curve)];
        m = transvection_matrix(c.cls, letter.sign, sys.surface) * m;
    }
    return m;
}

TwistWord positive_word(const CurveSystem& sys, const std::vector<int>& order) {
    const int n = sys.size();
    TwistWord w;
    if (order.empty()) {
        for (int i = 0; i < n; ++i) w.push_back({sys.curves[i].name, +1});
        return w;
    }
    if (static_cast<int>(order.size()) != n)
        throw input_error("positive_word: order must list every curve exactly once");
    std::set<int> seen;
    for (int i : order) {
        if (i < 0 || i >= n) throw input_error("positive_word: curve index out of range");
        if (!seen.insert(i).second)
            throw input_error("positive_word: order repeats curve index " + std::to_string(i));
        w.push_back({sys.curves[i].name, +1});
    }
    return w;
}

Int lefschetz_number(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("lefschetz_number: matrix is not square");
    return Int(2) - m.trace();
}

}  // namespace twistfloer
