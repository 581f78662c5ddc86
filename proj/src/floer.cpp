#include "twistfloer/floer.hpp"

#include "twistfloer/errors.hpp"

#include <algorithm>

namespace twistfloer {

FloerRanks hf_ranks_acceptable(const CurveSystem& sys) {
    if (sys.surface.genus < 2)
        throw input_error("floer ranks: closed forms require genus >= 2");
    ValidationReport rep = validate_acceptable(sys);
    if (!rep.pass)
        throw input_error("floer ranks: system is not acceptable: " + rep.violations.front());
    const int g = sys.surface.genus;
    const int n = sys.size();
    if (n == 0) return {1, 2 * g, 1};
    const int c = forest_components(sys);
    const int r = f2_span_rank(sys);
    return {0, (c - 1) + (2 * g - r), (n - r) + 1};
}

FloerRanks relative_cohomology_ranks(const CombinatorialMap& map,
                                     const Subcomplex& sub,
                                     const std::set<int>& exclude_faces) {
    const auto vertices = map.vertices();
    const auto edges = map.edges();
    const auto faces = map.faces();
    const int nv = static_cast<int>(vertices.size());
    const int ne = static_cast<int>(edges.size());
    const int nf = static_cast<int>(faces.size());

    for (int v : sub.vertex_ids)
        if (v < 0 || v >= nv) throw input_error("subcomplex: vertex id out of range");
    for (int e : sub.edge_ids)
        if (e < 0 || e >= ne) throw input_error("subcomplex: edge id out of range");
    for (int f : exclude_faces)
        if (f < 0 || f >= nf) throw input_error("excluded face id out of range");
    for (int e : sub.edge_ids) {
        const Dart d = edges[e].front();
        if (!sub.vertex_ids.count(map.vertex_of(d)) ||
            !sub.vertex_ids.count(map.vertex_of(map.alpha(d))))
            throw input_error("subcomplex is not closed: edge " + std::to_string(e) +
                              " has an endpoint outside the subcomplex");
    }

    // Free cells (relative cochains live on cells outside the subcomplex;
    // excluded faces are boundary caps, not cells at all).
    std::vector<int> vcol(nv, -1), ecol(ne, -1), frow(nf, -1);
    int n0 = 0, n1 = 0, n2 = 0;
    for (int v = 0; v < nv; ++v)
        if (!sub.vertex_ids.count(v)) vcol[v] = n0++;
    for (int e = 0; e < ne; ++e)
        if (!sub.edge_ids.count(e)) ecol[e] = n1++;
    for (int f = 0; f < nf; ++f)
        if (!exclude_faces.count(f)) frow[f] = n2++;

    // delta0: rows are free edges, columns free vertices; a loop contributes 0.
    F2Matrix d0 = F2Matrix::Zero(n1, n0);
    for (int e = 0; e < ne; ++e) {
        if (ecol[e] < 0) continue;
        const Dart d = edges[e].front();
        const int u = map.vertex_of(d);
        const int v = map.vertex_of(map.alpha(d));
        if (vcol[u] >= 0) d0(ecol[e], vcol[u]) += F2(1);
        if (vcol[v] >= 0) d0(ecol[e], vcol[v]) += F2(1);
    }

    // delta1: rows are kept faces, columns free edges; entries are boundary
    // edge multiplicities mod 2.
    std::map<Dart, int> edge_of_dart;
    for (int e = 0; e < ne; ++e)
        for (Dart d : edges[e]) edge_of_dart[d] = e;
    F2Matrix d1 = F2Matrix::Zero(n2, n1);
    for (int f = 0; f < nf; ++f) {
        if (frow[f] < 0) continue;
        for (Dart d : faces[f]) {
            const int e = edge_of_dart.at(d);
            if (ecol[e] >= 0) d1(frow[f], ecol[e]) += F2(1);
        }
    }

    const int rk0 = f2_rank(d0);
    const int rk1 = f2_rank(d1);
    return {n0 - rk0, n1 - rk0 - rk1, n2 - rk1};
}

Subcomplex curve_subcomplex(const CombinatorialMap& map, const CurveSystem& sys,
                            const std::vector<int>& curve_indices) {
    std::map<Dart, int> edge_of_dart;
    const auto edges = map.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        for (Dart d : edges[e]) edge_of_dart[d] = e;

    Subcomplex sub;
    for (int i : curve_indices) {
        if (i < 0 || i >= sys.size())
            throw input_error("curve_subcomplex: curve index out of range");
        const Curve& c = sys.curves[i];
        if (!c.darts)
            throw input_error("curve_subcomplex: curve '" + c.name + "' has no dart cycle");
        for (Dart d : *c.darts) {
            if (!map.has_dart(d))
                throw input_error("curve_subcomplex: unknown dart " + std::to_string(d));
            sub.edge_ids.insert(edge_of_dart.at(d));
            sub.vertex_ids.insert(map.vertex_of(d));
            sub.vertex_ids.insert(map.vertex_of(map.alpha(d)));
        }
    }
    return sub;
}

FloerRanks hf_ranks_strongly_acceptable(const CombinatorialMap& map,
                                        const CurveSystem& pos,
                                        const CurveSystem& neg) {
    ValidationReport rep = validate_strongly_acceptable(pos, neg, &map);
    if (!rep.pass)
        throw geometry_error("strong floer ranks: " + rep.violations.front());
    for (const Curve& c : neg.curves)
        if (!c.darts)
            throw input_error("strong floer ranks: negative curve '" + c.name +
                              "' has no dart cycle");

    CurveSystem merged;
    merged.surface = pos.surface;
    merged.curves = pos.curves;
    merged.curves.insert(merged.curves.end(), neg.curves.begin(), neg.curves.end());
    merged.intersections = pos.intersections;
    merged.intersections.insert(merged.intersections.end(), neg.intersections.begin(),
                                neg.intersections.end());
    std::vector<int> pos_indices;
    for (int i = 0; i < pos.size(); ++i) pos_indices.push_back(i);

    CutResult cut = cut_along(map, merged, pos_indices);
    for (const Curve& c : neg.curves)
        for (Dart d : *c.darts)
            if (!cut.surviving.count(d) || !cut.surviving.count(map.alpha(d)))
                throw input_error("strong floer ranks: families share a cell at dart " +
                                  std::to_string(d));

    std::set<int> caps;
    const auto faces = cut.map.faces();
    for (const auto& cap : cut.cap_faces) {
        auto it = std::find(faces.begin(), faces.end(), cap);
        if (it == faces.end())
            throw internal_error("strong floer ranks: cap face not found in cut map");
        caps.insert(static_cast<int>(it - faces.begin()));
    }

    CurveSystem neg_on_cut = neg;  // darts survive the cut with identical ids
    std::vector<int> neg_indices;
    for (int i = 0; i < neg_on_cut.size(); ++i) neg_indices.push_back(i);
    return relative_cohomology_ranks(cut.map, curve_subcomplex(cut.map, neg_on_cut, neg_indices),
                                     caps);
}

EulerLefschetzReport euler_lefschetz_check(const CurveSystem& sys,
                                           const FloerRanks& ranks,
                                           const IntMatrix& m) {
    EulerLefschetzReport rep;
    rep.graded_euler = ranks.euler();
    rep.formula = Int(2 - 2 * sys.surface.genus) + Int(sys.size() - forest_components(sys));
    rep.lefschetz = lefschetz_number(m);
    rep.pass = rep.graded_euler == rep.formula && rep.formula == rep.lefschetz;
    return rep;
}

CupActionScreen cup_action_screen(const CurveSystem& sys) {
    CupActionScreen screen;
    screen.h2_action_trivial = !sys.curves.empty();
    const int dim = sys.surface.dim();
    for (int i = 0; i < dim; ++i) {
        IntVector basis = IntVector::Zero(dim);
        basis(i) = 1;
        bool all_even = true;
        for (const Curve& c : sys.curves)
            if (sys.surface.pairing(basis, c.cls) % 2 != 0) {
                all_even = false;
                break;
            }
        (all_even ? screen.h1_possibly_nontrivial : screen.h1_certified_trivial)
            .push_back(AlgebraicSurface::basis_name(i));
    }
    return screen;
}

}  // namespace twistfloer
