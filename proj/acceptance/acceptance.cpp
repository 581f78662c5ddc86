// Acceptance gate: one criterion per numbered block, each printing a single
// PASS/FAIL line (plus indented sub-assertions). Exit code is nonzero when
// any requested criterion fails. Run all criteria by default, or a single
// one with --criterion N.

#include "twistfloer/certify.hpp"
#include "twistfloer/curves.hpp"
#include "twistfloer/cut.hpp"
#include "twistfloer/errors.hpp"
#include "twistfloer/floer.hpp"
#include "twistfloer/linalg.hpp"
#include "twistfloer/polynomial.hpp"
#include "twistfloer/reorder.hpp"
#include "twistfloer/surface.hpp"
#include "twistfloer/twist.hpp"

#include "../tests/helpers.hpp"
#include "../tests/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace twistfloer;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects sub-assertions for one criterion.
struct Checker {
    int failed = 0;
    int total = 0;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        ++total;
        if (!ok) ++failed;
        lines.push_back(std::string("    [") + (ok ? "pass" : "FAIL") + "] " + what);
    }
    void note(const std::string& what) { lines.push_back("    (" + what + ")"); }
};

// ---------------------------------------------------------------------------
// Random acceptable systems: forests of path and star components laid out on
// disjoint handle blocks, plus free isolated duplicates on a-only handles,
// optionally scrambled by pairing-preserving transvections.

struct RandomSystem {
    CurveSystem sys;
};

IntVector basis_vec(int g, int idx) {
    IntVector v = IntVector::Zero(2 * g);
    v(idx) = 1;
    return v;
}

RandomSystem random_acceptable_system(std::mt19937_64& rng, int genus_lo, int genus_hi,
                                      int max_curves) {
    std::uniform_int_distribution<int> genus_d(genus_lo, genus_hi);
    const int g = genus_d(rng);
    const int target = 1 + static_cast<int>(rng() % max_curves);

    CurveSystem sys;
    sys.surface = standard_surface(g);
    std::vector<std::string> names;
    std::vector<int> a_only;  // handle indices carrying only a-classes
    int next_handle = 0;

    auto add_curve = [&](const IntVector& cls) {
        Curve c;
        c.name = "c" + std::to_string(sys.curves.size());
        c.cls = cls;
        sys.curves.push_back(c);
        return c.name;
    };
    auto declare = [&](const std::string& p, const std::string& q) {
        const Int s = sys.surface.pairing(sys.curves[sys.index_of(p)].cls,
                                          sys.curves[sys.index_of(q)].cls);
        Intersection x;
        x.first = p;
        x.second = q;
        x.sign = static_cast<int>(s.convert_to<long long>());
        sys.intersections.push_back(x);
    };

    while (static_cast<int>(sys.curves.size()) < target) {
        const int remaining = target - static_cast<int>(sys.curves.size());
        const int free_handles = g - next_handle;

        std::vector<int> options;  // 0 = path, 1 = star, 2 = duplicate
        if (free_handles >= 1) options.push_back(0);
        if (free_handles >= 2 && remaining >= 3) options.push_back(1);
        if (!a_only.empty()) options.push_back(2);
        if (options.empty()) break;
        const int choice = options[rng() % options.size()];

        if (choice == 2) {
            add_curve(basis_vec(g, 2 * a_only[rng() % a_only.size()]));
            continue;
        }
        if (choice == 1) {
            const int max_size = std::min(remaining, free_handles + 1);
            const int size = 3 + static_cast<int>(rng() % (max_size - 2));
            IntVector center = IntVector::Zero(2 * g);
            for (int i = 0; i < size - 1; ++i) center += basis_vec(g, 2 * (next_handle + i));
            const std::string center_name = add_curve(center);
            for (int i = 0; i < size - 1; ++i)
                declare(center_name, add_curve(basis_vec(g, 2 * (next_handle + i) + 1)));
            next_handle += size - 1;
            continue;
        }
        // path component: a_h, b_h, a_h + a_{h+1}, b_{h+1}, ...
        const int max_size = std::min(remaining, 2 * free_handles);
        const int size = 1 + static_cast<int>(rng() % max_size);
        std::string prev;
        for (int i = 0; i < size; ++i) {
            IntVector cls;
            if (i % 2 == 0) {
                cls = basis_vec(g, 2 * (next_handle + i / 2));
                if (i > 0) cls += basis_vec(g, 2 * (next_handle + i / 2 - 1));
            } else {
                cls = basis_vec(g, 2 * (next_handle + i / 2) + 1);
            }
            const std::string name = add_curve(cls);
            if (i > 0) declare(prev, name);
            prev = name;
        }
        if (size == 1)
            a_only.push_back(next_handle);
        next_handle += (size + 1) / 2;
    }
    if (sys.curves.empty()) add_curve(basis_vec(g, 0));

    // pairing-preserving scramble
    const int twists = static_cast<int>(rng() % 4);
    for (int t = 0; t < twists; ++t) {
        IntVector v = IntVector::Zero(2 * g);
        bool zero = true;
        for (int i = 0; i < 2 * g; ++i) {
            v(i) = static_cast<int>(rng() % 5) - 2;
            zero = zero && v(i) == 0;
        }
        if (zero) v(0) = 1;
        const IntMatrix tmat =
            transvection_matrix(v, (rng() % 2) ? +1 : -1, sys.surface);
        for (Curve& c : sys.curves) c.cls = tmat * c.cls;
    }
    return {sys};
}

// ---------------------------------------------------------------------------

bool criterion1(Checker& ck) {
    const std::vector<std::pair<int, int>> pairs = {{5, 5}, {5, 9}, {7, 11}, {9, 13}};
    for (auto [k, l] : pairs) {
        const auto t0 = Clock::now();
        const IntMatrix m = helpers::family_matrix(k, l);
        const IntPolynomial cp = charpoly(m);

        // re-derived expansion: (z^2)(z+k)(z+l) + (z+k)(z+l) + (1-kl)
        const IntPolynomial zk({Int(k), 1}), zl({Int(l), 1});
        const IntPolynomial formula = IntPolynomial::monomial(1, 2) * zk * zl + zk * zl +
                                      IntPolynomial({Int(1) - Int(k) * Int(l)});
        const IntPolynomial closed({1, Int(k + l), Int(k) * Int(l) + 1, Int(k + l), 1});

        std::ostringstream id;
        id << "(k,l)=(" << k << "," << l << ")";
        ck.check(formula == closed, id.str() + " product formula expands to the closed form");
        ck.check(cp == closed, id.str() + " charpoly matches the closed form");
        ck.check(det_bareiss(m) == 1, id.str() + " det = 1");
        ck.check(m.trace() == -Int(k + l), id.str() + " trace = -(k+l)");

        const CertificateReport rep = certify_casson_bleiler(m);
        ck.check(rep.verdict == CertificateReport::certified_pseudo_anosov,
                 id.str() + " certified_pseudo_anosov (actual: " +
                     CertificateReport::verdict_name(rep.verdict) +
                     (rep.irreducibility.factor
                          ? ", factor " + rep.irreducibility.factor->str()
                          : "") +
                     ")");

        const bool claimed_witness =
            rep.irreducibility.eisenstein_witness &&
            rep.irreducibility.eisenstein_witness->first == 1 &&
            rep.irreducibility.eisenstein_witness->second == 2;
        ck.check(claimed_witness, id.str() + " Eisenstein witness at (shift 1, p=2) (actual: " +
                                      rep.irreducibility.witness_text() + ")");

        const double dt = seconds_since(t0);
        ck.check(dt < 1.0, id.str() + " runtime < 1 s (" + std::to_string(dt) + " s)");
    }
    return ck.failed == 0;
}

bool criterion2(Checker& ck) {
    for (int g : {2, 3, 4}) {
        CurveSystem sys;
        sys.surface = standard_surface(g);
        const FloerRanks r = hf_ranks_acceptable(sys);
        std::ostringstream line;
        line << "genus " << g << " empty system ranks (" << r.r0 << "," << r.r1 << ","
             << r.r2 << ") = (1," << 2 * g << ",1)";
        ck.check(r == FloerRanks{1, 2 * g, 1}, line.str());
    }
    return ck.failed == 0;
}

struct TierInstance {
    std::string label;
    CombinatorialMap map;
    CurveSystem sys;
};

std::vector<TierInstance> tier_instances() {
    using helpers::curve;
    using helpers::system_of;
    using helpers::touch;
    std::vector<TierInstance> out;
    CurveSystem empty;
    empty.surface = standard_surface(2);
    out.push_back({"one-vertex octagon, empty system", helpers::octagon_map(), empty});
    out.push_back({"one nonseparating curve on the octagon", helpers::octagon_map(),
                   system_of(2, {curve("a", {1, 0, 0, 0}, {1})})});
    out.push_back({"one curve on the two-vertex bridge map", helpers::bridge_map(),
                   system_of(2, {curve("a1", {1, 0, 0, 0}, {1})})});
    out.push_back({"two disjoint independent curves", helpers::handle_map(),
                   system_of(2, {curve("X", {1, 0, 0, 0}, {1}), curve("Z", {1, 0, 0, 0}, {13})})});
    out.push_back({"two curves crossing once", helpers::octagon_map(),
                   system_of(2,
                             {curve("a", {1, 0, 0, 0}, {1}), curve("b", {0, 1, 0, 0}, {2})},
                             {touch("a", "b", 1)})});
    out.push_back({"three-curve path tree", helpers::handle_map(),
                   system_of(2,
                             {curve("X", {1, 0, 0, 0}, {1}), curve("Y", {0, 1, 0, 0}, {12, 10}),
                              curve("Z", {1, 0, 0, 0}, {13})},
                             {touch("X", "Y", 1), touch("Z", "Y", 1)})});
    return out;
}

bool criterion3(Checker& ck) {
    const auto instances = tier_instances();
    ck.check(instances.size() >= 5, "at least 5 hand-built genus-2 cellular instances (" +
                                        std::to_string(instances.size()) + ")");
    for (const TierInstance& ti : instances) {
        const FloerRanks closed = hf_ranks_acceptable(ti.sys);
        std::vector<int> all(ti.sys.size());
        for (int i = 0; i < ti.sys.size(); ++i) all[i] = i;
        const FloerRanks cell =
            relative_cohomology_ranks(ti.map, curve_subcomplex(ti.map, ti.sys, all));
        std::ostringstream line;
        line << ti.label << ": closed (" << closed.r0 << "," << closed.r1 << "," << closed.r2
             << ") vs cellular (" << cell.r0 << "," << cell.r1 << "," << cell.r2 << ")";
        ck.check(closed == cell, line.str());
    }
    return ck.failed == 0;
}

bool criterion4(Checker& ck) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(0xE01E12);
    int systems = 0, checks = 0, failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const CurveSystem sys = random_acceptable_system(rng, 2, 4, 6).sys;
        ++systems;
        const FloerRanks ranks = hf_ranks_acceptable(sys);
        const int n = sys.size();
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int rep = 0; rep < 3; ++rep) {
            std::shuffle(order.begin(), order.end(), rng);
            const IntMatrix m = word_matrix(positive_word(sys, order), sys);
            const EulerLefschetzReport el = euler_lefschetz_check(sys, ranks, m);
            ++checks;
            if (!el.pass) ++failures;
        }
    }
    ck.check(failures == 0, "r0-r1+r2 = (2-2g)+(n-c) = 2-trace for " +
                                std::to_string(systems) + " random systems x 3 orders (" +
                                std::to_string(checks) + " checks)");
    const double dt = seconds_since(t0);
    ck.check(dt < 10.0, "runtime < 10 s (" + std::to_string(dt) + " s)");
    return ck.failed == 0;
}

bool criterion5(Checker& ck) {
    std::mt19937_64 rng(0x5E11E5);
    int bad_form = 0, bad_det = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CurveSystem sys = random_acceptable_system(rng, 1, 4, 6).sys;
        const int n = sys.size();
        TwistWord w;
        const int len = static_cast<int>(rng() % 13);
        for (int i = 0; i < len; ++i)
            w.push_back({sys.curves[rng() % n].name, (rng() % 2) ? +1 : -1});
        const IntMatrix m = word_matrix(w, sys);
        if (!preserves_form(m, sys.surface.J)) ++bad_form;
        if (det_bareiss(m) != 1) ++bad_det;
    }
    ck.check(bad_form == 0, "M^T J M = J for 500 random words of length <= 12");
    ck.check(bad_det == 0, "det M = 1 for all 500 words");
    return ck.failed == 0;
}

bool criterion6(Checker& ck) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(0xC0817);
    int verified = 0, ran = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const CurveSystem sys = random_acceptable_system(rng, 2, 4, 6).sys;
        const int n = sys.size();
        std::vector<int> start(n), target(n);
        for (int i = 0; i < n; ++i) start[i] = target[i] = i;
        std::shuffle(target.begin(), target.end(), rng);
        ++ran;
        const ConjugationResult res = conjugate_reorder(sys, start, target);
        if (res.verified) ++verified;
    }
    ck.check(verified == ran, "conjugator word verifies the matrix identity for " +
                                  std::to_string(ran) + "/100 random (forest, permutation) pairs");
    const double dt = seconds_since(t0);
    ck.check(dt < 30.0, "runtime < 30 s (" + std::to_string(dt) + " s)");
    return ck.failed == 0;
}

bool criterion7(Checker& ck) {
    int mismatches = 0, undecided = 0;
    long long scanned = 0;
    for (long long code = 0; code < 11LL * 11 * 11 * 11 * 11; ++code) {
        long long rest = code;
        oracles::Poly p(5);
        for (int i = 0; i < 5; ++i) {
            p[i] = rest % 11 - 5;
            rest /= 11;
        }
        if (oracles::degree(p) < 0) continue;  // zero polynomial
        ++scanned;
        std::vector<Int> coeffs(p.begin(), p.end());
        const IrreducibilityResult r = is_irreducible_over_Z(IntPolynomial(coeffs));
        if (r.status == IrreducibilityResult::unknown) {
            ++undecided;
            continue;
        }
        const bool lib = r.status == IrreducibilityResult::irreducible;
        if (lib != oracles::irreducible(p)) ++mismatches;
    }
    ck.check(mismatches == 0 && undecided == 0,
             "is_irreducible_over_Z agrees with the factor-pair oracle on all " +
                 std::to_string(scanned) + " coefficient vectors (degree <= 4, |c| <= 5)");

    std::mt19937_64 rng(0xCC107);
    int missed = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 12);
        const int d = static_cast<int>(rng() % 4);
        std::vector<Int> coeffs(d + 1);
        for (auto& c : coeffs) c = static_cast<int>(rng() % 11) - 5;
        if (coeffs.back() == 0) coeffs.back() = 1;
        const IntPolynomial planted = IntPolynomial(coeffs) * cyclotomic(m);
        const std::vector<int> hits = cyclotomic_factor_check(planted);
        if (std::find(hits.begin(), hits.end(), m) == hits.end()) ++missed;
    }
    ck.check(missed == 0, "every planted cyclotomic factor (m <= 12) detected in 100 products");
    return ck.failed == 0;
}

bool criterion8(Checker& ck) {
    for (const TierInstance& ti : tier_instances()) {
        std::vector<int> darted;
        for (int i = 0; i < ti.sys.size(); ++i)
            if (ti.sys.curves[i].darts) darted.push_back(i);
        const CutResult cut = cut_along(ti.map, ti.sys, darted);
        const int chi_map = euler_genus(ti.map).chi;
        std::ostringstream line;
        line << ti.label << ": chi(cut)=" << cut.chi << " = chi(map)=" << chi_map
             << " - chi(K)=" << cut.chi_subgraph;
        ck.check(cut.chi == chi_map - cut.chi_subgraph, line.str());
    }

    CurveSystem nonsep = helpers::system_of(
        2, {helpers::curve("a", {1, 0, 0, 0}, {1})});
    const CutResult cut = cut_along(helpers::octagon_map(), nonsep, {0});
    ck.check(cut.chi == -2, "genus-2 cut along one nonseparating curve: chi = -2");
    ck.check(cut.boundary_components == 2, "2 boundary circles");
    ck.check(cut.complement_components == 1, "1 component");
    return ck.failed == 0;
}

bool criterion9(Checker& ck) {
    ck.check(true,
             "analytic content (holomorphic disks, energy bounds, monotonicity) is out of "
             "scope by design; the finite identities above stand in for it");
    return ck.failed == 0;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
            return 2;
        }
    }

    using Fn = bool (*)(Checker&);
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9};
    const char* titles[] = {
        "matrix family golden values",
        "identity baseline ranks",
        "closed-form vs cellular tier agreement",
        "Euler-Lefschetz identity on random systems",
        "symplectic invariance of random words",
        "conjugation of reordered twist words",
        "irreducibility and cyclotomic screens vs oracles",
        "cut surface Euler characteristic",
        "analytic exclusions",
    };

    int exit_code = 0;
    for (int n = 1; n <= 9; ++n) {
        if (only != 0 && only != n) continue;
        Checker ck;
        bool ok = false;
        try {
            ok = criteria[n - 1](ck);
        } catch (const std::exception& e) {
            ck.check(false, std::string("unexpected exception: ") + e.what());
        }
        std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << titles[n - 1] << " (" << (ck.total - ck.failed) << "/" << ck.total
                  << " assertions)\n";
        for (const std::string& line : ck.lines) std::cout << line << "\n";
        if (!ok) exit_code = 1;
    }
    return exit_code;
}
