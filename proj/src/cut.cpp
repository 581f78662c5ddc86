#include "twistfloer/cut.hpp"

#include "twistfloer/errors.hpp"

#include <algorithm>

namespace twistfloer {

CutResult cut_along(const CombinatorialMap& map, const CurveSystem& sys,
                    const std::vector<int>& curve_indices) {
    validate_curves_on_map(sys, map);  // throws when the cellular data is bad

    std::set<Dart> K;  // darts of the cut locus, closed under alpha
    for (int i : curve_indices) {
        if (i < 0 || i >= sys.size())
            throw input_error("cut: curve index out of range");
        if (!sys.curves[i].darts)
            throw input_error("cut: curve '" + sys.curves[i].name + "' has no dart cycle");
        for (Dart d : *sys.curves[i].darts) {
            K.insert(d);
            K.insert(map.alpha(d));
        }
    }

    CutResult res;
    if (K.empty()) {
        res.map = map;
        res.complement_components = map.components();
        res.chi = static_cast<int>(map.vertices().size()) -
                  static_cast<int>(map.edges().size()) +
                  static_cast<int>(map.faces().size());
        for (Dart d : map.darts()) res.surviving.insert(d);
        return res;
    }

    // Each cut dart d is replaced by a sector-start copy d+ and a sector-end
    // copy d-; the doubled edge glues d+ to (alpha d)- so the two sides of the
    // curve separate. Identifier scheme: d+ = base + d, d- = 2*base + d.
    const Dart base = *std::max_element(map.darts().begin(), map.darts().end());
    auto plus = [base](Dart d) { return base + d; };
    auto minus = [base](Dart d) { return 2 * base + d; };

    std::vector<Dart> new_darts;
    std::map<Dart, Dart> alpha2, sigma2;
    for (Dart d : map.darts()) {
        if (K.count(d)) {
            new_darts.push_back(plus(d));
            new_darts.push_back(minus(d));
            alpha2[plus(d)] = minus(map.alpha(d));
            alpha2[minus(d)] = plus(map.alpha(d));
        } else {
            new_darts.push_back(d);
            alpha2[d] = map.alpha(d);
            res.surviving.insert(d);
        }
    }

    // Rotations: a vertex incident to the cut splits into one vertex per
    // rotation sector between consecutive cut darts; the sector runs
    // (k_i)+, interior darts, (k_{i+1})-.
    int cut_vertices = 0;
    for (const auto& cycle : map.vertices()) {
        const int n = static_cast<int>(cycle.size());
        std::vector<int> kpos;
        for (int p = 0; p < n; ++p)
            if (K.count(cycle[p])) kpos.push_back(p);
        if (kpos.empty()) {
            for (int p = 0; p < n; ++p) sigma2[cycle[p]] = cycle[(p + 1) % n];
            continue;
        }
        ++cut_vertices;
        for (size_t s = 0; s < kpos.size(); ++s) {
            const int p0 = kpos[s];
            const int p1 = kpos[(s + 1) % kpos.size()];
            std::vector<Dart> sector{plus(cycle[p0])};
            for (int p = (p0 + 1) % n; p != p1; p = (p + 1) % n)
                sector.push_back(cycle[p]);
            sector.push_back(minus(cycle[p1]));
            for (size_t t = 0; t < sector.size(); ++t)
                sigma2[sector[t]] = sector[(t + 1) % sector.size()];
        }
    }

    res.map = CombinatorialMap(std::move(new_darts), std::move(alpha2), std::move(sigma2));
    res.chi_subgraph = cut_vertices - static_cast<int>(K.size()) / 2;

    // Boundary circles are exactly the faces made of sector-start copies.
    std::set<Dart> plus_darts;
    for (Dart d : K) plus_darts.insert(plus(d));
    auto faces = res.map.faces();
    for (const auto& f : faces) {
        const size_t plus_count =
            std::count_if(f.begin(), f.end(),
                          [&](Dart d) { return plus_darts.count(d) > 0; });
        if (plus_count == 0) continue;
        if (plus_count != f.size())
            throw internal_error("cut: boundary circle mixes cut and interior darts");
        res.cap_faces.push_back(f);
    }
    res.boundary_components = static_cast<int>(res.cap_faces.size());
    res.complement_components = res.map.components();
    res.chi = static_cast<int>(res.map.vertices().size()) -
              static_cast<int>(res.map.edges().size()) +
              static_cast<int>(faces.size() - res.cap_faces.size());
    return res;
}

CutResult cut_along(const CombinatorialMap& map, const CurveSystem& sys) {
    std::vector<int> indices;
    for (int i = 0; i < sys.size(); ++i)
        if (sys.curves[i].darts) indices.push_back(i);
    return cut_along(map, sys, indices);
}

}  // namespace twistfloer
