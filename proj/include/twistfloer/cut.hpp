#ifndef TWISTFLOER_CUT_HPP
#define TWISTFLOER_CUT_HPP

#include "twistfloer/combmap.hpp"
#include "twistfloer/curves.hpp"

#include <set>
#include <vector>

namespace twistfloer {

/// Result of cutting a map along a union K of curves. The cut surface is
/// represented as a closed combinatorial map in which every boundary circle
/// appears as a distinguished "cap" face; the genuine cells of the cut
/// surface are the vertices, edges and the non-cap faces.
struct CutResult {
    CombinatorialMap map;              // cut map, caps included as faces
    std::vector<std::vector<Dart>> cap_faces;  // boundary circles (phi-orbits of + copies)
    int boundary_components = 0;       // = cap_faces.size()
    int complement_components = 0;     // connected components of the cut map
    int chi = 0;                       // V' - E' + interior faces
    int chi_subgraph = 0;              // chi(K) = V(K) - E(K)
    /// Darts of the original map that survive with unchanged identifiers.
    std::set<Dart> surviving;
};

/// Cut the map along the given curve system (every curve must carry darts and
/// the system must pass validate_curves_on_map). Each K-edge is doubled; each
/// K-incident vertex splits into one vertex per maximal rotation sector
/// between consecutive K-darts. Satisfies chi = chi(map) - chi(K).
/// An empty curve set returns the map unchanged with no boundary.
CutResult cut_along(const CombinatorialMap& map, const CurveSystem& sys,
                    const std::vector<int>& curve_indices);

/// Convenience: cut along every curve of the system that has darts.
CutResult cut_along(const CombinatorialMap& map, const CurveSystem& sys);

}  // namespace twistfloer

#endif
