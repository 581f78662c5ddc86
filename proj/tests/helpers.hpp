#ifndef TWISTFLOER_TEST_HELPERS_HPP
#define TWISTFLOER_TEST_HELPERS_HPP

// Shared fixtures for the unit and acceptance suites: conversions between the
// oracle types and the library types, small constructors, and the hand-built
// cellular surfaces used across files. Every map here was verified by hand
// (orbit counts, Euler characteristics) before being frozen.

#include "twistfloer/combmap.hpp"
#include "twistfloer/curves.hpp"
#include "twistfloer/linalg.hpp"
#include "twistfloer/polynomial.hpp"
#include "twistfloer/surface.hpp"

#include "oracles.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helpers {

using twistfloer::CombinatorialMap;
using twistfloer::Curve;
using twistfloer::CurveSystem;
using twistfloer::Dart;
using twistfloer::F2Matrix;
using twistfloer::Int;
using twistfloer::IntMatrix;
using twistfloer::IntPolynomial;
using twistfloer::IntVector;
using twistfloer::Intersection;

inline IntPolynomial to_poly(const oracles::Poly& p) {
    std::vector<Int> c;
    for (long long v : p) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

inline oracles::Poly to_oracle(const IntPolynomial& f) {
    oracles::Poly out;
    for (const Int& c : f.coeffs()) out.push_back(c.convert_to<long long>());
    return out;
}

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const int n = static_cast<int>(rows.size());
    const int m = n == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix out(n, m);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (long long v : row) out(r, c++) = Int(v);
        ++r;
    }
    return out;
}

inline IntVector make_vector(std::initializer_list<long long> entries) {
    IntVector out(static_cast<int>(entries.size()));
    int i = 0;
    for (long long v : entries) out(i++) = Int(v);
    return out;
}

/// Rows as bit strings, e.g. {"1100", "0110"}.
inline F2Matrix make_f2(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    const int m = n == 0 ? 0 : static_cast<int>(rows.front().size());
    F2Matrix out(n, m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) out(r, c) = twistfloer::F2(rows[r][c] == '1');
    return out;
}

// ---------------------------------------------------------------------------
// The quartic twist family: 4x4 matrix preserving the split symplectic form
// [[0, I], [-I, 0]], with characteristic polynomial
//   z^4 + (k+l) z^3 + (kl+1) z^2 + (k+l) z + 1
// (hand expansion of z^2 (z+k)(z+l) + (z+k)(z+l) + (1 - kl)).

inline IntMatrix family_matrix(long long k, long long l) {
    return make_matrix({{0, 0, -1, 1},
                        {-k, -k, k * l, -1},
                        {1, 0, -l, 0},
                        {1, 1, -l, 0}});
}

inline IntPolynomial family_charpoly(long long k, long long l) {
    return IntPolynomial({Int(1), Int(k + l), Int(k * l + 1), Int(k + l), Int(1)});
}

// ---------------------------------------------------------------------------
// Map constructors from involution pairs and rotation cycles.

inline std::map<Dart, Dart> perm_from_pairs(
    std::initializer_list<std::pair<Dart, Dart>> pairs) {
    std::map<Dart, Dart> out;
    for (auto [a, b] : pairs) {
        out[a] = b;
        out[b] = a;
    }
    return out;
}

inline std::map<Dart, Dart> perm_from_cycles(
    std::initializer_list<std::initializer_list<Dart>> cycles) {
    std::map<Dart, Dart> out;
    for (const auto& cyc : cycles) {
        std::vector<Dart> c(cyc);
        for (size_t i = 0; i < c.size(); ++i) out[c[i]] = c[(i + 1) % c.size()];
    }
    return out;
}

inline std::vector<Dart> range_darts(int n) {
    std::vector<Dart> out;
    for (int d = 1; d <= n; ++d) out.push_back(d);
    return out;
}

/// Genus-2 one-vertex octagon a b a- b- c d c- d-: V=1, E=4, F=1, chi=-2.
/// The a-loop is dart 1 (paired with 3), the b-loop dart 2 (paired with 4).
inline CombinatorialMap octagon_map() {
    return CombinatorialMap(range_darts(8),
                            perm_from_pairs({{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
                            perm_from_cycles({{1, 4, 3, 2, 5, 8, 7, 6}}));
}

/// Genus-2 two-vertex map: two one-holed tori joined by the bridge edge
/// {5,10}; a1 is dart 1 on the left torus, a2 dart 6 on the right.
/// V=2, E=5, F=1, chi=-2.
inline CombinatorialMap bridge_map() {
    return CombinatorialMap(
        range_darts(10),
        perm_from_pairs({{1, 3}, {2, 4}, {5, 10}, {6, 8}, {7, 9}}),
        perm_from_cycles({{1, 4, 3, 2, 5}, {6, 9, 8, 7, 10}}));
}

/// Genus-2 three-vertex map carrying three curves: X (dart 1), Z (dart 13),
/// both of class a1, and Y (darts 12, 10) of class b1 crossing each of X and
/// Z exactly once. V=3, E=7, F=2, chi=-2.
inline CombinatorialMap handle_map() {
    return CombinatorialMap(
        range_darts(14),
        perm_from_pairs({{1, 11}, {2, 7}, {3, 5}, {4, 6}, {8, 10}, {9, 13}, {12, 14}}),
        perm_from_cycles({{1, 12, 11, 2, 8}, {3, 6, 5, 4, 7}, {9, 14, 13, 10}}));
}

/// Genus-1 one-vertex square a b a- b-: V=1, E=2, F=1, chi=0. The (1,0)-curve
/// is dart 1 (paired with 3).
inline CombinatorialMap torus_map() {
    return CombinatorialMap(range_darts(4), perm_from_pairs({{1, 3}, {2, 4}}),
                            perm_from_cycles({{1, 2, 3, 4}}));
}

// ---------------------------------------------------------------------------
// Curve systems.

inline Curve curve(std::string name, std::initializer_list<long long> cls,
                   std::vector<Dart> darts = {}) {
    Curve c;
    c.name = std::move(name);
    c.cls = make_vector(cls);
    if (!darts.empty()) c.darts = darts;
    return c;
}

inline Intersection touch(std::string a, std::string b) {
    return Intersection{std::move(a), std::move(b), std::nullopt};
}

inline Intersection touch(std::string a, std::string b, int sign) {
    return Intersection{std::move(a), std::move(b), sign};
}

inline CurveSystem system_of(int genus, std::vector<Curve> curves,
                             std::vector<Intersection> intersections = {}) {
    CurveSystem sys;
    sys.surface = twistfloer::standard_surface(genus);
    sys.curves = std::move(curves);
    sys.intersections = std::move(intersections);
    return sys;
}

}  // namespace helpers

#endif
