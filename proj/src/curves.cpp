#include "twistfloer/curves.hpp"

#include "twistfloer/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace twistfloer {

namespace {

int find_index(const CurveSystem& sys, const std::string& name) {
    for (int i = 0; i < sys.size(); ++i)
        if (sys.curves[i].name == name) return i;
    return -1;
}

// Union-find over curve indices, used for the forest/cycle checks.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {  // false when already connected
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::string pair_label(const CurveSystem& sys, int i, int j) {
    return "(" + sys.curves[i].name + ", " + sys.curves[j].name + ")";
}

}  // namespace

int CurveSystem::index_of(const std::string& name) const {
    int i = find_index(*this, name);
    if (i < 0) throw input_error("unknown curve name '" + name + "'");
    return i;
}

std::vector<std::vector<char>> CurveSystem::adjacency() const {
    std::vector<std::vector<char>> adj(curves.size(),
                                       std::vector<char>(curves.size(), 0));
    for (const auto& x : intersections) {
        int i = index_of(x.first);
        int j = index_of(x.second);
        if (i == j) throw input_error("curve '" + x.first + "' declared to intersect itself");
        adj[i][j] = adj[j][i] = 1;
    }
    return adj;
}

ValidationReport validate_acceptable(const CurveSystem& sys,
                                     const CombinatorialMap* map) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.pass = false;
        rep.violations.push_back(msg);
    };
    const int n = sys.size();
    const int dim = sys.surface.dim();
    if (sys.surface.warning)
        rep.caveats.push_back("genus 1: certification theorems assume genus > 1");

    std::set<std::string> names;
    std::vector<char> usable(n, 1);
    for (int i = 0; i < n; ++i) {
        const Curve& c = sys.curves[i];
        if (!names.insert(c.name).second) fail("duplicate curve name '" + c.name + "'");
        if (c.cls.size() != dim) {
            fail("curve '" + c.name + "': class has dimension " +
                 std::to_string(c.cls.size()) + ", expected " + std::to_string(dim));
            usable[i] = 0;
            continue;
        }
        if (c.cls.isZero())
            fail("curve '" + c.name + "': homology class is zero");
    }

    // Declared pairs: well-formed, no duplicates, and pairing +-1 with the
    // declared sign when given.
    std::set<std::pair<int, int>> declared;
    UnionFind uf(n);
    for (const auto& x : sys.intersections) {
        int i = find_index(sys, x.first);
        int j = find_index(sys, x.second);
        if (i < 0 || j < 0) {
            fail("intersection references unknown curve '" + (i < 0 ? x.first : x.second) + "'");
            continue;
        }
        if (i == j) {
            fail("curve '" + x.first + "' declared to intersect itself");
            continue;
        }
        auto key = std::minmax(i, j);
        if (!declared.insert(key).second) {
            fail("intersection " + pair_label(sys, i, j) + " declared more than once");
            continue;
        }
        if (!uf.unite(i, j))
            fail("intersection graph contains a cycle through " + pair_label(sys, i, j));
        if (!usable[i] || !usable[j]) continue;
        Int p = sys.surface.pairing(sys.curves[i].cls, sys.curves[j].cls);
        if (p != 1 && p != -1)
            fail("declared pair " + pair_label(sys, i, j) + " has pairing " + p.str() +
                 ", expected +-1");
        else if (x.sign && Int(*x.sign) != p)
            fail("declared pair " + pair_label(sys, i, j) + " has pairing " + p.str() +
                 " but declared sign " + std::to_string(*x.sign));
    }

    // Undeclared pairs must pair to zero.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (declared.count({i, j}) || !usable[i] || !usable[j]) continue;
            Int p = sys.surface.pairing(sys.curves[i].cls, sys.curves[j].cls);
            if (p != 0)
                fail("undeclared pair " + pair_label(sys, i, j) + " has pairing " +
                     p.str() + ", expected 0");
        }

    if (map != nullptr) {
        try {
            validate_curves_on_map(sys, *map);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    } else {
        bool any_darts = std::any_of(sys.curves.begin(), sys.curves.end(),
                                     [](const Curve& c) { return c.darts.has_value(); });
        if (any_darts)
            rep.caveats.push_back("dart cycles present but no map supplied; "
                                  "cellular checks skipped");
    }
    return rep;
}

ValidationReport validate_strongly_acceptable(const CurveSystem& pos,
                                              const CurveSystem& neg,
                                              const CombinatorialMap* map) {
    if (pos.surface.genus != neg.surface.genus)
        throw input_error("positive and negative families live on different genera");
    ValidationReport rep;
    auto absorb = [&rep](const ValidationReport& sub, const std::string& prefix) {
        for (const auto& v : sub.violations) {
            rep.pass = false;
            rep.violations.push_back(prefix + ": " + v);
        }
        for (const auto& c : sub.caveats) rep.caveats.push_back(prefix + ": " + c);
    };
    // Algebraic checks per family; the cellular pass runs once on the union so
    // cross-family shared cells are caught too.
    absorb(validate_acceptable(pos, nullptr), "positive family");
    absorb(validate_acceptable(neg, nullptr), "negative family");

    auto fail = [&rep](const std::string& msg) {
        rep.pass = false;
        rep.violations.push_back(msg);
    };
    if (map != nullptr) {
        CurveSystem merged;
        merged.surface = pos.surface;
        merged.curves = pos.curves;
        merged.curves.insert(merged.curves.end(), neg.curves.begin(), neg.curves.end());
        merged.intersections = pos.intersections;
        merged.intersections.insert(merged.intersections.end(),
                                    neg.intersections.begin(), neg.intersections.end());
        try {
            validate_curves_on_map(merged, *map);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    for (const auto& p : pos.curves) {
        for (const auto& q : neg.curves) {
            if (p.name == q.name)
                fail("curve name '" + p.name + "' appears in both families");
            if (p.cls.size() != q.cls.size()) continue;
            Int pairing = pos.surface.pairing(p.cls, q.cls);
            if (pairing != 0)
                fail("cross pair (" + p.name + ", " + q.name + ") has pairing " +
                     pairing.str() + ", expected 0");
            if (p.cls == q.cls || p.cls == -q.cls)
                fail("positive curve '" + p.name + "' and negative curve '" + q.name +
                     "' have equal classes up to sign");
        }
    }
    if (!pos.curves.empty() && !neg.curves.empty())
        rep.caveats.push_back("cross-family distinctness is checked at the homology "
                              "level only (classes differ up to sign)");
    return rep;
}

int forest_components(const CurveSystem& sys) {
    const int n = sys.size();
    UnionFind uf(n);
    for (const auto& x : sys.intersections)
        uf.unite(sys.index_of(x.first), sys.index_of(x.second));
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(uf.find(i));
    return static_cast<int>(roots.size());
}

int f2_span_rank(const CurveSystem& sys) {
    const int n = sys.size();
    const int dim = sys.surface.dim();
    F2Matrix m(n, dim);
    for (int i = 0; i < n; ++i) {
        if (sys.curves[i].cls.size() != dim)
            throw input_error("curve '" + sys.curves[i].name + "': class has wrong dimension");
        for (int j = 0; j < dim; ++j) m(i, j) = F2(sys.curves[i].cls(j));
    }
    return f2_rank(m);
}

std::vector<int> validate_curves_on_map(const CurveSystem& sys,
                                        const CombinatorialMap& map) {
    std::vector<int> checked;
    for (int i = 0; i < sys.size(); ++i)
        if (sys.curves[i].darts) checked.push_back(i);

    // Per-curve: closed, embedded (no repeated edge or vertex).
    std::map<Dart, int> edge_owner;       // least dart of an edge -> curve index
    std::map<int, std::vector<int>> vertex_visitors;  // vertex -> curve indices
    for (int i : checked) {
        const Curve& c = sys.curves[i];
        const DartCycle& cyc = *c.darts;
        if (cyc.empty()) throw input_error("curve '" + c.name + "': empty dart cycle");
        std::set<int> curve_vertices;
        for (size_t k = 0; k < cyc.size(); ++k) {
            Dart d = cyc[k];
            if (!map.has_dart(d))
                throw input_error("curve '" + c.name + "': unknown dart " + std::to_string(d));
            Dart next = cyc[(k + 1) % cyc.size()];
            if (!map.has_dart(next))
                throw input_error("curve '" + c.name + "': unknown dart " + std::to_string(next));
            if (map.vertex_of(next) != map.vertex_of(map.alpha(d)))
                throw geometry_error("curve '" + c.name + "': dart cycle is not closed at step " +
                                     std::to_string(k + 1));
            Dart e = std::min(d, map.alpha(d));
            auto [it, fresh] = edge_owner.insert({e, i});
            if (!fresh)
                throw geometry_error(it->second == i
                                         ? "curve '" + c.name + "' repeats an edge"
                                         : "curves '" + sys.curves[it->second].name + "' and '" +
                                               c.name + "' share an edge");
            int v = map.vertex_of(d);
            if (!curve_vertices.insert(v).second)
                throw geometry_error("curve '" + c.name + "' revisits a vertex (not embedded)");
        }
        for (int v : curve_vertices) vertex_visitors[v].push_back(i);
    }

    // Shared vertices: exactly two curves, alternating rotation pattern, and
    // agreement with the declared intersection pairs. Each visit contributes
    // two darts based at the vertex: the departure dart and the previous
    // step's reversal.
    std::map<Dart, int> dart_curve;
    for (int i : checked) {
        const DartCycle& cyc = *sys.curves[i].darts;
        for (size_t k = 0; k < cyc.size(); ++k) {
            dart_curve[cyc[k]] = i;                  // departure dart
            dart_curve[map.alpha(cyc[(k + cyc.size() - 1) % cyc.size()])] = i;  // arrival dart
        }
    }
    std::set<std::pair<int, int>> geometric_pairs;
    auto vertex_orbits = map.vertices();
    for (const auto& [v, visitors] : vertex_visitors) {
        if (visitors.size() == 1) continue;
        if (visitors.size() > 2) {
            std::string names;
            for (int i : visitors) names += (names.empty() ? "" : ", ") + sys.curves[i].name;
            throw geometry_error("more than two curves meet at one vertex: " + names);
        }
        // Restrict the rotation at v to the four curve darts; the two curves
        // must alternate for the crossing to be transverse.
        std::vector<int> pattern;
        for (Dart d : vertex_orbits[v]) {
            auto it = dart_curve.find(d);
            if (it != dart_curve.end()) pattern.push_back(it->second);
        }
        std::string label = "(" + sys.curves[visitors[0]].name + ", " +
                            sys.curves[visitors[1]].name + ")";
        if (pattern.size() != 4)
            throw geometry_error("shared vertex of " + label + " is not a simple crossing");
        if (pattern[0] == pattern[1] || pattern[1] == pattern[2] || pattern[0] != pattern[2])
            throw geometry_error("curves " + label + " meet without crossing "
                                 "(rotation pattern does not alternate)");
        auto key = std::minmax(visitors[0], visitors[1]);
        if (!geometric_pairs.insert(key).second)
            throw geometry_error("curves " + label + " cross at more than one vertex");
    }

    std::set<std::pair<int, int>> declared_pairs;
    for (const auto& x : sys.intersections) {
        int i = find_index(sys, x.first);
        int j = find_index(sys, x.second);
        if (i < 0 || j < 0 || i == j) continue;  // reported by validate_acceptable
        if (sys.curves[i].darts && sys.curves[j].darts)
            declared_pairs.insert(std::minmax(i, j));
    }
    for (const auto& [i, j] : geometric_pairs)
        if (!declared_pairs.count({i, j}))
            throw geometry_error("curves " + pair_label(sys, i, j) +
                                 " cross on the map but the intersection is not declared");
    for (const auto& [i, j] : declared_pairs)
        if (!geometric_pairs.count({i, j}))
            throw geometry_error("declared intersection " + pair_label(sys, i, j) +
                                 " has no crossing on the map");
    return checked;
}

}  // namespace twistfloer
