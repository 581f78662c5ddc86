// The acceptability and strong-acceptability predicates, plus the cellular
// validity of darted curves on a combinatorial map.

#include "twistfloer/combmap.hpp"
#include "twistfloer/curves.hpp"
#include "twistfloer/errors.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace twistfloer;
using helpers::curve;
using helpers::system_of;
using helpers::touch;

namespace {
bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
    return std::any_of(msgs.begin(), msgs.end(), [&](const std::string& m) {
        return m.find(needle) != std::string::npos;
    });
}
}  // namespace

TEST_CASE("system accessors") {
    CurveSystem sys = system_of(2, {curve("x", {1, 0, 0, 0}), curve("y", {0, 1, 0, 0})},
                                {touch("x", "y")});
    CHECK(sys.size() == 2);
    CHECK(sys.index_of("y") == 1);
    CHECK_THROWS_AS(sys.index_of("nope"), input_error);

    auto adj = sys.adjacency();
    CHECK(adj[0][1] == 1);
    CHECK(adj[1][0] == 1);
    CHECK(adj[0][0] == 0);
}

TEST_CASE("valid chains pass the acceptability predicate") {
    CurveSystem chain = system_of(2,
                                  {curve("x", {1, 0, 0, 0}), curve("y", {0, 1, 0, 0}),
                                   curve("z", {1, 0, 1, 0})},
                                  {touch("x", "y", 1), touch("y", "z", -1)});
    ValidationReport rep = validate_acceptable(chain);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());

    CHECK(forest_components(chain) == 1);
    CHECK(f2_span_rank(chain) == 3);
}

TEST_CASE("empty and isolated systems") {
    CHECK(validate_acceptable(system_of(2, {})).pass);
    CHECK(forest_components(system_of(2, {})) == 0);
    CHECK(f2_span_rank(system_of(2, {})) == 0);

    CurveSystem iso = system_of(2, {curve("p", {1, 0, 0, 0}), curve("q", {0, 0, 1, 0})});
    CHECK(validate_acceptable(iso).pass);
    CHECK(forest_components(iso) == 2);
    CHECK(f2_span_rank(iso) == 2);
}

TEST_CASE("f2 span rank reduces classes mod 2") {
    // classes 2*a1 and a1: both reduce to rows {0000} and {1000}
    CurveSystem sys = system_of(2, {curve("d", {2, 0, 0, 0}), curve("e", {1, 0, 0, 0})});
    CHECK(f2_span_rank(sys) == 1);
}

TEST_CASE("acceptability violations are each reported") {
    SECTION("triangle graph is not a forest") {
        CurveSystem tri = system_of(2,
                                    {curve("a", {1, 0, 0, 0}), curve("b", {0, 1, 0, 0}),
                                     curve("c", {1, 1, 0, 0})},
                                    {touch("a", "b"), touch("b", "c"), touch("a", "c")});
        ValidationReport rep = validate_acceptable(tri);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "graph contains a cycle"));
    }
    SECTION("zero homology class") {
        ValidationReport rep = validate_acceptable(system_of(2, {curve("o", {0, 0, 0, 0})}));
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "class is zero"));
    }
    SECTION("declared pair with vanishing pairing") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}), curve("c", {0, 0, 1, 0})},
                                    {touch("a", "c")});
        ValidationReport rep = validate_acceptable(sys);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "expected +-1"));
    }
    SECTION("declared sign contradicting the form") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}), curve("b", {0, 1, 0, 0})},
                                    {touch("a", "b", -1)});
        ValidationReport rep = validate_acceptable(sys);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "declared sign"));
    }
    SECTION("undeclared pair with nonzero pairing") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}), curve("b", {0, 1, 0, 0})});
        ValidationReport rep = validate_acceptable(sys);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "undeclared pair"));
    }
    SECTION("duplicate names, self-pairs, repeated declarations") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}), curve("a", {0, 1, 0, 0})});
        CHECK(mentions(validate_acceptable(sys).violations, "duplicate curve name"));

        CurveSystem self = system_of(2, {curve("a", {1, 0, 0, 0})}, {touch("a", "a")});
        CHECK(mentions(validate_acceptable(self).violations, "intersect itself"));

        CurveSystem twice = system_of(2,
                                      {curve("a", {1, 0, 0, 0}), curve("b", {0, 1, 0, 0})},
                                      {touch("a", "b"), touch("b", "a")});
        CHECK(mentions(validate_acceptable(twice).violations, "more than once"));
    }
    SECTION("class dimension mismatch") {
        CurveSystem sys = system_of(2, {});
        Curve c;
        c.name = "short";
        c.cls = helpers::make_vector({1, 0});
        sys.curves.push_back(c);
        ValidationReport rep = validate_acceptable(sys);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "dimension"));
    }
    SECTION("genus 1 raises a caveat but can pass") {
        ValidationReport rep = validate_acceptable(system_of(1, {curve("a", {1, 0})}));
        CHECK(rep.pass);
        CHECK(mentions(rep.caveats, "genus 1"));
    }
}

TEST_CASE("star systems are forests too") {
    // center class pairs +-1 with each leaf; leaves pairwise 0
    CurveSystem star = system_of(2,
                                 {curve("c", {1, 0, 1, 0}), curve("l1", {0, 1, 0, 0}),
                                  curve("l2", {0, 0, 0, 1})},
                                 {touch("c", "l1"), touch("c", "l2")});
    ValidationReport rep = validate_acceptable(star);
    CHECK(rep.pass);
    CHECK(forest_components(star) == 1);
}

TEST_CASE("strong acceptability checks cross conditions") {
    CurveSystem pos = system_of(2, {curve("p", {1, 0, 0, 0})});
    CurveSystem neg = system_of(2, {curve("q", {0, 0, 1, 0})});
    ValidationReport ok = validate_strongly_acceptable(pos, neg);
    CHECK(ok.pass);
    CHECK(mentions(ok.caveats, "homology level"));

    SECTION("nonzero cross pairing") {
        CurveSystem bad = system_of(2, {curve("q", {0, 1, 0, 0})});
        ValidationReport rep = validate_strongly_acceptable(pos, bad);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "cross pair"));
    }
    SECTION("equal classes up to sign") {
        CurveSystem same = system_of(2, {curve("q", {-1, 0, 0, 0})});
        ValidationReport rep = validate_strongly_acceptable(pos, same);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "equal classes up to sign"));
    }
    SECTION("name collision across families") {
        CurveSystem clash = system_of(2, {curve("p", {0, 0, 1, 0})});
        ValidationReport rep = validate_strongly_acceptable(pos, clash);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "both families"));
    }
    SECTION("genus mismatch is a usage error, not a verdict") {
        CHECK_THROWS_AS(validate_strongly_acceptable(pos, system_of(3, {})), input_error);
    }
    SECTION("per-family violations carry the family prefix") {
        CurveSystem zero = system_of(2, {curve("z", {0, 0, 0, 0})});
        ValidationReport rep = validate_strongly_acceptable(pos, zero);
        CHECK_FALSE(rep.pass);
        CHECK(mentions(rep.violations, "negative family"));
    }
}

TEST_CASE("darted curves validate against the octagon map") {
    CombinatorialMap oct = helpers::octagon_map();
    CurveSystem sys = system_of(2,
                                {curve("a", {1, 0, 0, 0}, {1}), curve("b", {0, 1, 0, 0}, {2})},
                                {touch("a", "b", 1)});
    std::vector<int> checked = validate_curves_on_map(sys, oct);
    CHECK(checked == std::vector<int>{0, 1});

    ValidationReport rep = validate_acceptable(sys, &oct);
    CHECK(rep.pass);
}

TEST_CASE("cellular violations raise geometry errors") {
    CombinatorialMap oct = helpers::octagon_map();

    SECTION("meeting without crossing: both loops at the single vertex, pattern aacc") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}, {1}),
                                        curve("c", {0, 0, 1, 0}, {5})});
        CHECK_THROWS_WITH(validate_curves_on_map(sys, oct),
                          Catch::Matchers::ContainsSubstring("does not alternate"));
    }
    SECTION("a geometric crossing must be declared") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}, {1}),
                                        curve("b", {0, 1, 0, 0}, {2})});
        CHECK_THROWS_WITH(validate_curves_on_map(sys, oct),
                          Catch::Matchers::ContainsSubstring("not declared"));
    }
    SECTION("a declared crossing must exist on the map") {
        CombinatorialMap br = helpers::bridge_map();
        // a1 and f live on different vertices of the bridge map, so the
        // declared pair has no geometric counterpart
        CurveSystem phantom = system_of(2,
                                        {curve("a1", {1, 0, 0, 0}, {1}),
                                         curve("f", {0, 0, 1, 0}, {6})},
                                        {touch("a1", "f")});
        CHECK_THROWS_WITH(validate_curves_on_map(phantom, br),
                          Catch::Matchers::ContainsSubstring("no crossing on the map"));
    }
    SECTION("shared edges are rejected") {
        CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}, {1}),
                                        curve("a2", {1, 0, 0, 0}, {3})});
        CHECK_THROWS_WITH(validate_curves_on_map(sys, oct),
                          Catch::Matchers::ContainsSubstring("share an edge"));
    }
    SECTION("revisiting a vertex is rejected") {
        CurveSystem sys = system_of(2, {curve("w", {1, 1, 0, 0}, {1, 2})});
        CHECK_THROWS_WITH(validate_curves_on_map(sys, oct),
                          Catch::Matchers::ContainsSubstring("not embedded"));
    }
    SECTION("unknown or empty dart data is an input error") {
        CurveSystem sys = system_of(2, {curve("u", {1, 0, 0, 0}, {42})});
        CHECK_THROWS_AS(validate_curves_on_map(sys, oct), input_error);
        CurveSystem closed_elsewhere = system_of(2, {curve("v", {1, 0, 0, 0})});
        // curves without darts are skipped, not errors
        CHECK(validate_curves_on_map(closed_elsewhere, oct).empty());
    }
    SECTION("dart cycle not closed on a two-vertex map") {
        CombinatorialMap br = helpers::bridge_map();
        // dart 1 lives on the left vertex; alpha(1)=3 is also left, but dart 6
        // continues from the right vertex: the cycle breaks between steps
        CurveSystem sys = system_of(2, {curve("w", {1, 0, 1, 0}, {1, 6})});
        CHECK_THROWS_WITH(validate_curves_on_map(sys, br),
                          Catch::Matchers::ContainsSubstring("not closed"));
    }
}

TEST_CASE("validation-report integration flags cellular failures") {
    CombinatorialMap oct = helpers::octagon_map();
    CurveSystem sys = system_of(2, {curve("a", {1, 0, 0, 0}, {1}),
                                    curve("c", {0, 0, 1, 0}, {5})});
    ValidationReport rep = validate_acceptable(sys, &oct);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.violations, "alternate"));
}

TEST_CASE("merged cellular pass catches cross-family cell sharing") {
    CombinatorialMap oct = helpers::octagon_map();
    // homologically fine (pairing 0, distinct classes) but the loops collide
    // at the octagon's unique vertex without crossing
    CurveSystem pos = system_of(2, {curve("a", {1, 0, 0, 0}, {1})});
    CurveSystem neg = system_of(2, {curve("c", {0, 0, 1, 0}, {5})});
    ValidationReport rep = validate_strongly_acceptable(pos, neg, &oct);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.violations, "alternate"));

    // the bridge map separates the same classes cleanly
    CombinatorialMap br = helpers::bridge_map();
    CurveSystem pos2 = system_of(2, {curve("a1", {1, 0, 0, 0}, {1})});
    CurveSystem neg2 = system_of(2, {curve("a2", {0, 0, 1, 0}, {6})});
    CHECK(validate_strongly_acceptable(pos2, neg2, &br).pass);
}
