#ifndef TWISTFLOER_CURVES_HPP
#define TWISTFLOER_CURVES_HPP

#include "twistfloer/combmap.hpp"
#include "twistfloer/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistfloer {

/// Closed edge-path on a combinatorial map: darts d1, ..., dk traversed in
/// order, consecutive edges meeting at the vertex of alpha(d_i).
using DartCycle = std::vector<Dart>;

/// A simple closed curve: name, homology class in the interleaved basis, and
/// an optional tier-2 realization as a dart cycle.
struct Curve {
    std::string name;
    IntVector cls;
    std::optional<DartCycle> darts;
};

/// Declared transverse intersection between two named curves; the sign, when
/// present, must match the J-pairing of the classes in pair order.
struct Intersection {
    std::string first, second;
    std::optional<int> sign;
};

/// Curves with their declared pairwise intersections over a fixed surface;
/// the intersection graph G has the curves as vertices and the declared pairs
/// as edges.
struct CurveSystem {
    AlgebraicSurface surface;
    std::vector<Curve> curves;
    std::vector<Intersection> intersections;

    int size() const { return static_cast<int>(curves.size()); }
    /// Index of a named curve; input_error if absent.
    int index_of(const std::string& name) const;
    /// Adjacency matrix of G (0/1, symmetric).
    std::vector<std::vector<char>> adjacency() const;
};

/// Report with every violation listed; pass iff none.
struct ValidationReport {
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::string> caveats;
};

/// The acceptability predicate:
///  (1) G is a forest;
///  (2) every declared pair has |<cls_i, cls_j>| = 1 (and matches the declared
///      sign when given); every undeclared pair pairs to 0;
///  (3) no class is zero.
/// When both curves of a declared pair carry dart cycles, their tier-2
/// geometry is checked as well (single shared vertex, alternating transverse
/// crossing pattern) against the supplied map.
ValidationReport validate_acceptable(const CurveSystem& sys,
                                     const CombinatorialMap* map = nullptr);

/// The strong acceptability predicate for a positive and a negative family:
/// both acceptable, all cross pairings zero, no declared cross intersections,
/// and no positive class equal to plus/minus a negative class. The last check
/// is a homological proxy for homotopy distinctness and is reported as a
/// caveat. Throws input_error on mismatched genus.
ValidationReport validate_strongly_acceptable(const CurveSystem& pos,
                                              const CurveSystem& neg,
                                              const CombinatorialMap* map = nullptr);

/// Number of connected components of G (isolated curves count; empty system
/// has 0).
int forest_components(const CurveSystem& sys);

/// Rank over F2 of the n x 2g matrix of classes reduced mod 2.
int f2_span_rank(const CurveSystem& sys);

/// Tier-2 validity of the curves that carry dart cycles, against a map:
/// each cycle closed and embedded (no repeated edge or vertex), curves
/// pairwise edge-disjoint, any shared vertex is a transverse crossing of
/// exactly two curves with alternating rotation pattern, and shared vertices
/// are consistent with the declared intersection pairs. Throws input_error /
/// geometry_error with diagnostics; returns the set of curve indices checked.
std::vector<int> validate_curves_on_map(const CurveSystem& sys,
                                        const CombinatorialMap& map);

}  // namespace twistfloer

#endif
