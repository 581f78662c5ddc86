#ifndef TWISTFLOER_FLOER_HPP
#define TWISTFLOER_FLOER_HPP

#include "twistfloer/cut.hpp"
#include "twistfloer/twist.hpp"

#include <set>
#include <string>
#include <vector>

namespace twistfloer {

/// Z/2-graded Floer cohomology rank vector over F2, reported in full
/// cohomological degrees (0, 1, 2) plus the mod-2 collapse.
struct FloerRanks {
    int r0 = 0, r1 = 0, r2 = 0;
    int even() const { return r0 + r2; }
    int odd() const { return r1; }
    int euler() const { return r0 - r1 + r2; }
    friend bool operator==(const FloerRanks&, const FloerRanks&) = default;
};

/// Tier-1 ranks of H*(Sigma, C; F2) for an acceptable system from the long
/// exact sequence of the pair, with n = curve count, c = forest components,
/// r = F2 span rank, g = genus:
///   empty system: (1, 2g, 1);
///   n >= 1:       (0, (c-1) + (2g-r), (n-r) + 1).
/// The closed forms are validated against the independent cellular oracle
/// before use (tier-agreement tests). Requires genus >= 2 and a system that
/// passes validate_acceptable (input_error otherwise).
FloerRanks hf_ranks_acceptable(const CurveSystem& sys);

/// Closed subcomplex of a map: selected vertices (by representative dart of
/// the sigma-orbit is inconvenient — vertices are given by index into
/// map.vertices()) and edges (by index into map.edges()).
struct Subcomplex {
    std::set<int> vertex_ids;
    std::set<int> edge_ids;
};

/// Tier-2 cellular ranks of the relative cochain complex over F2: cochains on
/// the cells outside `sub`, coboundaries restricted accordingly, ranks by
/// deterministic elimination. `exclude_faces` removes cap faces (boundary
/// circles of a cut map) from the 2-cells. Throws input_error when sub is not
/// closed under incidence (an edge outside sub with an endpoint inside is
/// fine; an edge inside sub needs both endpoints inside).
FloerRanks relative_cohomology_ranks(const CombinatorialMap& map,
                                     const Subcomplex& sub,
                                     const std::set<int>& exclude_faces = {});

/// Subcomplex spanned by the dart cycles of the given curves (their edges and
/// every visited vertex).
Subcomplex curve_subcomplex(const CombinatorialMap& map, const CurveSystem& sys,
                            const std::vector<int>& curve_indices);

/// Tier-2 ranks for a strongly acceptable setting: cut the map along the
/// positive family A, then compute the relative cohomology of the cut surface
/// modulo the negative family B (which survives the cut untouched since the
/// families share no cells; sharing a cell is input_error).
FloerRanks hf_ranks_strongly_acceptable(const CombinatorialMap& map,
                                        const CurveSystem& pos,
                                        const CurveSystem& neg);

/// Three-way identity report: r0 - r1 + r2 = (2 - 2g) + (n - c) =
/// 2 - trace(m), with m the word matrix of all positive twists in any order.
struct EulerLefschetzReport {
    Int graded_euler;       // r0 - r1 + r2
    Int formula;            // (2 - 2g) + (n - c)
    Int lefschetz;          // 2 - trace(m)
    bool pass = false;
};
EulerLefschetzReport euler_lefschetz_check(const CurveSystem& sys,
                                           const FloerRanks& ranks,
                                           const IntMatrix& m);

/// Module-action screening from the cup-product remark: the H2 action on
/// H*(Sigma, C) is trivial iff C is nonempty; an H1 basis class can act
/// nontrivially only if its pairing with every curve class vanishes mod 2.
/// Classes failing that necessary condition are certified trivial; passing
/// classes are only "possibly nontrivial".
struct CupActionScreen {
    bool h2_action_trivial = false;
    std::vector<std::string> h1_possibly_nontrivial;  // basis names passing
    std::vector<std::string> h1_certified_trivial;    // basis names failing
};
CupActionScreen cup_action_screen(const CurveSystem& sys);

}  // namespace twistfloer

#endif
