#include "twistfloer/instance.hpp"

#include "twistfloer/certify.hpp"
#include "twistfloer/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace twistfloer {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing helpers with field-path diagnostics

[[noreturn]] void bad(const std::string& where, const std::string& why) {
    throw input_error(where + ": " + why);
}

const json& field(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) bad(where, "missing required field '" + key + "'");
    return obj.at(key);
}

long long as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) bad(where, "expected an integer");
    return v.get<long long>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where, "expected a string");
    return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where, "expected an array");
    return v;
}

const json& as_object(const json& v, const std::string& where) {
    if (!v.is_object()) bad(where, "expected an object");
    return v;
}

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) bad(where, "unknown field '" + key + "'");
}

std::vector<Curve> parse_curves(const json& arr, const std::string& where, int dim) {
    std::vector<Curve> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string here = where + "[" + std::to_string(i) + "]";
        const json& c = as_object(arr.at(i), here);
        check_keys(c, here, {"name", "class", "darts"});
        Curve curve;
        curve.name = as_string(field(c, here, "name"), here + ".name");
        const json& cls = as_array(field(c, here, "class"), here + ".class");
        if (static_cast<int>(cls.size()) != dim)
            bad(here + ".class", "class length must be " + std::to_string(dim));
        curve.cls = IntVector(dim);
        for (int k = 0; k < dim; ++k)
            curve.cls(k) = Int(as_int(cls.at(k), here + ".class"));
        if (c.contains("darts")) {
            const json& da = as_array(c.at("darts"), here + ".darts");
            DartCycle cyc;
            for (const auto& d : da)
                cyc.push_back(static_cast<Dart>(as_int(d, here + ".darts")));
            if (cyc.empty()) bad(here + ".darts", "dart cycle must be nonempty");
            curve.darts = std::move(cyc);
        }
        out.push_back(std::move(curve));
    }
    return out;
}

// ---------------------------------------------------------------------------
// serialization (normalized echo; reports append under "report")

json curve_to_json(const Curve& c) {
    json j;
    j["name"] = c.name;
    json cls = json::array();
    for (int k = 0; k < c.cls.size(); ++k)
        cls.push_back(c.cls(k).convert_to<long long>());
    j["class"] = std::move(cls);
    if (c.darts) {
        json da = json::array();
        for (Dart d : *c.darts) da.push_back(d);
        j["darts"] = std::move(da);
    }
    return j;
}

json intersection_to_json(const Intersection& x) {
    json j = json::array();
    j.push_back(x.first);
    j.push_back(x.second);
    if (x.sign) j.push_back(*x.sign);
    return j;
}

json word_to_json(const TwistWord& w) {
    json j = json::array();
    for (const TwistLetter& l : w)
        j.push_back((l.sign > 0 ? "+" : "-") + l.curve);
    return j;
}

json map_to_json(const CombinatorialMap& m) {
    json j;
    json darts = json::array();
    for (Dart d : m.darts()) darts.push_back(d);
    j["darts"] = std::move(darts);
    json alpha = json::array();
    for (Dart d : m.darts())
        if (d < m.alpha(d)) alpha.push_back(json::array({d, m.alpha(d)}));
    j["alpha"] = std::move(alpha);
    json sigma = json::array();
    for (const auto& cycle : m.vertices()) {
        json c = json::array();
        for (Dart d : cycle) c.push_back(d);
        sigma.push_back(std::move(c));
    }
    j["sigma"] = std::move(sigma);
    return j;
}

json instance_to_json(const Instance& inst) {
    json j;
    j["genus"] = inst.genus;
    json curves = json::array();
    for (const Curve& c : inst.system.curves) curves.push_back(curve_to_json(c));
    j["curves"] = std::move(curves);
    json xs = json::array();
    for (const Intersection& x : inst.system.intersections)
        xs.push_back(intersection_to_json(x));
    for (const Intersection& x : inst.negative.intersections)
        xs.push_back(intersection_to_json(x));
    for (const Intersection& x : inst.cross_intersections)
        xs.push_back(intersection_to_json(x));
    j["intersections"] = std::move(xs);
    if (inst.has_negative) {
        json neg = json::array();
        for (const Curve& c : inst.negative.curves) neg.push_back(curve_to_json(c));
        j["negative_curves"] = std::move(neg);
    }
    if (inst.word) j["word"] = word_to_json(*inst.word);
    if (inst.map) j["map"] = map_to_json(*inst.map);
    if (inst.matrix) {
        json rows = json::array();
        for (int r = 0; r < inst.matrix->rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < inst.matrix->cols(); ++c)
                row.push_back((*inst.matrix)(r, c).convert_to<long long>());
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    }
    return j;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_to_json(const IntPolynomial& p) {
    json out = json::array();
    for (const Int& c : p.coeffs()) out.push_back(c.str());
    return out;
}

json ranks_to_json(const FloerRanks& r) {
    json j;
    j["r0"] = r.r0;
    j["r1"] = r.r1;
    j["r2"] = r.r2;
    j["even"] = r.even();
    j["odd"] = r.odd();
    j["euler"] = r.euler();
    return j;
}

std::string matrix_to_text(const IntMatrix& m, const std::string& indent) {
    // column-aligned exact integers
    std::vector<size_t> width(m.cols(), 0);
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            width[c] = std::max(width[c], m(r, c).str().size());
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        out << indent << "[";
        for (int c = 0; c < m.cols(); ++c) {
            std::string s = m(r, c).str();
            out << std::string(width[c] - s.size(), ' ') << s
                << (c + 1 < m.cols() ? " " : "");
        }
        out << "]\n";
    }
    return out.str();
}

std::string ranks_to_text(const FloerRanks& r) {
    std::ostringstream out;
    out << "r0=" << r.r0 << " r1=" << r.r1 << " r2=" << r.r2 << " (even=" << r.even()
        << ", odd=" << r.odd() << ", euler=" << r.euler() << ")";
    return out.str();
}

std::string word_to_text(const TwistWord& w) {
    if (w.empty()) return "(empty)";
    std::string out;
    for (const TwistLetter& l : w)
        out += (out.empty() ? "" : " ") + std::string(l.sign > 0 ? "+" : "-") + l.curve;
    return out;
}

// ---------------------------------------------------------------------------
// shared command plumbing

CurveSystem merged_families(const Instance& inst) {
    CurveSystem merged = inst.system;
    merged.curves.insert(merged.curves.end(), inst.negative.curves.begin(),
                         inst.negative.curves.end());
    merged.intersections.insert(merged.intersections.end(),
                                inst.negative.intersections.begin(),
                                inst.negative.intersections.end());
    return merged;
}

ValidationReport run_validation(const Instance& inst) {
    const CombinatorialMap* map = inst.map ? &*inst.map : nullptr;
    ValidationReport rep;
    if (inst.has_negative)
        rep = validate_strongly_acceptable(inst.system, inst.negative, map);
    else
        rep = validate_acceptable(inst.system, map);
    for (const Intersection& x : inst.cross_intersections) {
        rep.pass = false;
        rep.violations.push_back("declared cross intersection (" + x.first + ", " +
                                 x.second + ") between the positive and negative families");
    }
    for (const std::string& v : inst.map_violations) {
        rep.pass = false;
        rep.violations.push_back("map: " + v);
    }
    return rep;
}

void render_validation(const ValidationReport& rep, const std::string& mode,
                       std::ostringstream& human, json& report) {
    human << "validation: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    human << "mode: " << mode << "\n";
    if (!rep.violations.empty()) {
        human << "violations:\n";
        for (const auto& v : rep.violations) human << "  - " << v << "\n";
    }
    if (!rep.caveats.empty()) {
        human << "caveats:\n";
        for (const auto& c : rep.caveats) human << "  - " << c << "\n";
    }
    report["mode"] = mode;
    report["pass"] = rep.pass;
    report["violations"] = rep.violations;
    report["caveats"] = rep.caveats;
}

CommandResult finish(const Instance& inst, const CommandOptions& opts, int exit_code,
                     const std::ostringstream& human, json report) {
    CommandResult res;
    res.exit_code = exit_code;
    res.human = human.str();
    if (opts.json) {
        json doc = instance_to_json(inst);
        doc["report"] = std::move(report);
        res.json = doc.dump(2) + "\n";
    }
    return res;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("instance: top level must be an object");
    check_keys(doc, "instance",
               {"genus", "curves", "intersections", "negative_curves", "word", "map",
                "matrix", "report"});

    Instance inst;
    const long long genus = as_int(field(doc, "instance", "genus"), "genus");
    if (genus < 1) bad("genus", "must be a positive integer");
    inst.genus = static_cast<int>(genus);
    inst.system.surface = standard_surface(inst.genus);
    inst.negative.surface = inst.system.surface;
    const int dim = inst.system.surface.dim();

    if (doc.contains("curves"))
        inst.system.curves = parse_curves(as_array(doc.at("curves"), "curves"),
                                          "curves", dim);
    if (doc.contains("negative_curves")) {
        inst.has_negative = true;
        inst.negative.curves = parse_curves(
            as_array(doc.at("negative_curves"), "negative_curves"), "negative_curves", dim);
    }

    std::set<std::string> pos_names, neg_names;
    for (const Curve& c : inst.system.curves)
        if (!pos_names.insert(c.name).second)
            bad("curves", "duplicate curve name '" + c.name + "'");
    for (const Curve& c : inst.negative.curves) {
        if (!neg_names.insert(c.name).second)
            bad("negative_curves", "duplicate curve name '" + c.name + "'");
        if (pos_names.count(c.name))
            bad("negative_curves", "curve name '" + c.name + "' already used in 'curves'");
    }

    if (doc.contains("intersections")) {
        const json& arr = as_array(doc.at("intersections"), "intersections");
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string here = "intersections[" + std::to_string(i) + "]";
            const json& e = as_array(arr.at(i), here);
            if (e.size() != 2 && e.size() != 3)
                bad(here, "expected [first, second] or [first, second, sign]");
            Intersection x;
            x.first = as_string(e.at(0), here);
            x.second = as_string(e.at(1), here);
            if (e.size() == 3) {
                const long long s = as_int(e.at(2), here + " sign");
                if (s != 1 && s != -1) bad(here, "sign must be +1 or -1");
                x.sign = static_cast<int>(s);
            }
            const bool p1 = pos_names.count(x.first), n1 = neg_names.count(x.first);
            const bool p2 = pos_names.count(x.second), n2 = neg_names.count(x.second);
            if ((!p1 && !n1) || (!p2 && !n2))
                bad(here, "references unknown curve '" +
                              (!p1 && !n1 ? x.first : x.second) + "'");
            if (p1 && p2)
                inst.system.intersections.push_back(std::move(x));
            else if (n1 && n2)
                inst.negative.intersections.push_back(std::move(x));
            else
                inst.cross_intersections.push_back(std::move(x));
        }
    }

    if (doc.contains("word")) {
        const json& arr = as_array(doc.at("word"), "word");
        TwistWord w;
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string here = "word[" + std::to_string(i) + "]";
            const std::string s = as_string(arr.at(i), here);
            if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
                bad(here, "expected \"+name\" or \"-name\"");
            TwistLetter l{s.substr(1), s[0] == '+' ? +1 : -1};
            if (!pos_names.count(l.curve) && !neg_names.count(l.curve))
                bad(here, "references unknown curve '" + l.curve + "'");
            w.push_back(std::move(l));
        }
        inst.word = std::move(w);
    }

    if (doc.contains("map")) {
        const json& m = as_object(doc.at("map"), "map");
        check_keys(m, "map", {"darts", "alpha", "sigma"});
        std::vector<Dart> darts;
        for (const auto& d : as_array(field(m, "map", "darts"), "map.darts"))
            darts.push_back(static_cast<Dart>(as_int(d, "map.darts")));
        std::map<Dart, Dart> alpha;
        const json& ap = as_array(field(m, "map", "alpha"), "map.alpha");
        for (size_t i = 0; i < ap.size(); ++i) {
            const std::string here = "map.alpha[" + std::to_string(i) + "]";
            const json& pair = as_array(ap.at(i), here);
            if (pair.size() != 2) bad(here, "expected a dart pair [d, e]");
            const Dart a = static_cast<Dart>(as_int(pair.at(0), here));
            const Dart b = static_cast<Dart>(as_int(pair.at(1), here));
            if (alpha.count(a) || alpha.count(b))
                bad(here, "dart listed in more than one alpha pair");
            alpha[a] = b;
            alpha[b] = a;
        }
        std::map<Dart, Dart> sigma;
        const json& sc = as_array(field(m, "map", "sigma"), "map.sigma");
        for (size_t i = 0; i < sc.size(); ++i) {
            const std::string here = "map.sigma[" + std::to_string(i) + "]";
            const json& cyc = as_array(sc.at(i), here);
            if (cyc.empty()) bad(here, "empty sigma cycle");
            std::vector<Dart> cycle;
            for (const auto& d : cyc)
                cycle.push_back(static_cast<Dart>(as_int(d, here)));
            for (size_t k = 0; k < cycle.size(); ++k) {
                if (sigma.count(cycle[k])) bad(here, "dart listed in more than one sigma cycle");
                sigma[cycle[k]] = cycle[(k + 1) % cycle.size()];
            }
        }
        MapReport mrep = validate_map(darts, alpha, sigma);
        if (mrep.pass)
            inst.map = CombinatorialMap(std::move(darts), std::move(alpha), std::move(sigma));
        else
            inst.map_violations = mrep.violations;
    }

    if (inst.map) {
        std::vector<const Curve*> all;
        for (const Curve& c : inst.system.curves) all.push_back(&c);
        for (const Curve& c : inst.negative.curves) all.push_back(&c);
        for (const Curve* c : all) {
            if (!c->darts) continue;
            for (Dart d : *c->darts)
                if (!inst.map->has_dart(d))
                    bad("curves", "curve '" + c->name + "' references unknown dart " +
                                      std::to_string(d));
        }
    }

    if (doc.contains("matrix")) {
        const json& rows = as_array(doc.at("matrix"), "matrix");
        if (static_cast<int>(rows.size()) != dim)
            bad("matrix", "must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                              " for genus " + std::to_string(inst.genus));
        IntMatrix mat(dim, dim);
        for (int r = 0; r < dim; ++r) {
            const std::string here = "matrix[" + std::to_string(r) + "]";
            const json& row = as_array(rows.at(r), here);
            if (static_cast<int>(row.size()) != dim) bad(here, "wrong row length");
            for (int c = 0; c < dim; ++c) mat(r, c) = Int(as_int(row.at(c), here));
        }
        inst.matrix = std::move(mat);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Instance inst = parse_instance(buf.str());
    inst.source_path = path;
    return inst;
}

CommandResult run_command(const std::string& cmd, const Instance& inst,
                          const CommandOptions& opts) {
    std::ostringstream human;
    json report;
    report["command"] = cmd;
    const std::string mode = inst.has_negative ? "strongly_acceptable" : "acceptable";

    if (cmd == "validate") {
        ValidationReport rep = run_validation(inst);
        render_validation(rep, mode, human, report);
        human << "curves: " << inst.system.size();
        if (inst.has_negative) human << " positive, " << inst.negative.size() << " negative";
        human << "\n";
        if (inst.map) {
            EulerGenus eg = euler_genus(*inst.map);
            human << "map: V=" << eg.vertices << " E=" << eg.edges << " F=" << eg.faces
                  << " chi=" << eg.chi << " genus=" << eg.genus << "\n";
            json mj;
            mj["vertices"] = eg.vertices;
            mj["edges"] = eg.edges;
            mj["faces"] = eg.faces;
            mj["chi"] = eg.chi;
            mj["genus"] = eg.genus;
            report["map"] = std::move(mj);
            if (eg.genus != inst.genus) {
                human << "note: map genus differs from declared genus\n";
                report["map_genus_matches"] = false;
            }
        }
        return finish(inst, opts, rep.pass ? 0 : 1, human, std::move(report));
    }

    if (cmd == "act") {
        if (!inst.word) throw input_error("act: instance has no word");
        const CurveSystem sys = merged_families(inst);
        const IntMatrix m = word_matrix(*inst.word, sys);
        const bool symp = preserves_form(m, sys.surface.J);
        human << "word: " << word_to_text(*inst.word) << "\n";
        human << "matrix (" << m.rows() << "x" << m.cols() << "):\n"
              << matrix_to_text(m, "  ");
        human << "trace: " << m.trace().str() << "\n";
        human << "det: " << det_bareiss(m).str() << "\n";
        human << "symplectic: " << (symp ? "yes" : "no") << "\n";
        report["word_length"] = inst.word->size();
        report["matrix"] = matrix_to_json(m);
        report["trace"] = m.trace().str();
        report["det"] = det_bareiss(m).str();
        report["symplectic"] = symp;
        return finish(inst, opts, 0, human, std::move(report));
    }

    if (cmd == "certify") {
        if (inst.matrix && inst.word)
            throw input_error("certify: supply exactly one of {curves+word, matrix}, not both");
        IntMatrix m;
        std::string source;
        if (inst.matrix) {
            m = *inst.matrix;
            source = "matrix";
        } else if (inst.word) {
            m = word_matrix(*inst.word, merged_families(inst));
            source = "word";
        } else {
            throw input_error("certify: instance needs either a matrix or curves plus a word");
        }
        CertificateReport rep = certify_casson_bleiler(m);
        human << "source: " << source << "\n";
        human << "verdict: " << CertificateReport::verdict_name(rep.verdict) << "\n";
        human << "form convention: " << rep.form_convention << "\n";
        human << "charpoly: " << rep.charpoly.str() << "\n";
        const char* status = rep.irreducibility.status == IrreducibilityResult::irreducible
                                 ? "irreducible"
                                 : rep.irreducibility.status == IrreducibilityResult::reducible
                                       ? "reducible"
                                       : "unknown";
        human << "irreducibility: " << status << " (" << rep.irreducibility.witness_text()
              << ")\n";
        human << "cyclotomic factors:";
        if (rep.cyclotomic_hits.empty()) human << " none";
        for (int m_hit : rep.cyclotomic_hits) human << " " << m_hit;
        human << "\n";
        human << "power pattern: n=" << rep.power_pattern.n
              << (rep.power_pattern.degenerate ? " (degenerate)" : "") << "\n";
        human << "caveat: " << rep.caveat << "\n";
        report["source"] = source;
        report["verdict"] = CertificateReport::verdict_name(rep.verdict);
        report["form_convention"] = rep.form_convention;
        report["charpoly"] = poly_to_json(rep.charpoly);
        json irr;
        irr["status"] = status;
        irr["witness"] = rep.irreducibility.witness_text();
        if (rep.irreducibility.eisenstein_witness) {
            irr["eisenstein_shift"] = rep.irreducibility.eisenstein_witness->first.str();
            irr["eisenstein_prime"] = rep.irreducibility.eisenstein_witness->second;
        }
        if (rep.irreducibility.mod_p_witness)
            irr["mod_p"] = *rep.irreducibility.mod_p_witness;
        if (rep.irreducibility.factor)
            irr["factor"] = poly_to_json(*rep.irreducibility.factor);
        irr["complete_search_exhausted"] = rep.irreducibility.complete_search_exhausted;
        irr["beyond_complete_bound"] = rep.irreducibility.beyond_complete_bound;
        report["irreducibility"] = std::move(irr);
        report["cyclotomic_hits"] = rep.cyclotomic_hits;
        json pp;
        pp["n"] = rep.power_pattern.n;
        pp["degenerate"] = rep.power_pattern.degenerate;
        report["power_pattern"] = std::move(pp);
        report["caveat"] = rep.caveat;
        return finish(inst, opts, 0, human, std::move(report));
    }

    if (cmd == "floer") {
        ValidationReport vrep = run_validation(inst);
        if (!vrep.pass) {
            render_validation(vrep, mode, human, report);
            return finish(inst, opts, 1, human, std::move(report));
        }
        human << "mode: " << mode << "\n";
        report["mode"] = mode;
        if (inst.has_negative) {
            if (!inst.map)
                throw input_error("floer: strongly acceptable ranks need a map "
                                  "(cut-based computation)");
            FloerRanks ranks =
                hf_ranks_strongly_acceptable(*inst.map, inst.system, inst.negative);
            human << "ranks: " << ranks_to_text(ranks) << "\n";
            report["ranks"] = ranks_to_json(ranks);
            return finish(inst, opts, 0, human, std::move(report));
        }
        const FloerRanks ranks = hf_ranks_acceptable(inst.system);
        human << "ranks: " << ranks_to_text(ranks) << "\n";
        report["ranks"] = ranks_to_json(ranks);

        const bool all_darted =
            std::all_of(inst.system.curves.begin(), inst.system.curves.end(),
                        [](const Curve& c) { return c.darts.has_value(); });
        if (inst.map && all_darted) {
            std::vector<int> all;
            for (int i = 0; i < inst.system.size(); ++i) all.push_back(i);
            const FloerRanks cell = relative_cohomology_ranks(
                *inst.map, curve_subcomplex(*inst.map, inst.system, all));
            human << "cellular ranks: " << ranks_to_text(cell) << "\n";
            human << "tier agreement: " << (cell == ranks ? "yes" : "NO") << "\n";
            report["cellular_ranks"] = ranks_to_json(cell);
            report["tiers_agree"] = cell == ranks;
        }

        const IntMatrix m = word_matrix(positive_word(inst.system), inst.system);
        const EulerLefschetzReport el = euler_lefschetz_check(inst.system, ranks, m);
        human << "euler-lefschetz: euler=" << el.graded_euler.str()
              << " formula=" << el.formula.str() << " lefschetz=" << el.lefschetz.str()
              << " -> " << (el.pass ? "pass" : "FAIL") << "\n";
        json elj;
        elj["graded_euler"] = el.graded_euler.str();
        elj["formula"] = el.formula.str();
        elj["lefschetz"] = el.lefschetz.str();
        elj["pass"] = el.pass;
        report["euler_lefschetz"] = std::move(elj);

        const CupActionScreen screen = cup_action_screen(inst.system);
        human << "H2 action trivial: " << (screen.h2_action_trivial ? "yes" : "no") << "\n";
        human << "H1 possibly nontrivial:";
        if (screen.h1_possibly_nontrivial.empty()) human << " none";
        for (const auto& n : screen.h1_possibly_nontrivial) human << " " << n;
        human << "\n";
        human << "H1 certified trivial:";
        if (screen.h1_certified_trivial.empty()) human << " none";
        for (const auto& n : screen.h1_certified_trivial) human << " " << n;
        human << "\n";
        json cup;
        cup["h2_action_trivial"] = screen.h2_action_trivial;
        cup["h1_possibly_nontrivial"] = screen.h1_possibly_nontrivial;
        cup["h1_certified_trivial"] = screen.h1_certified_trivial;
        report["cup_action"] = std::move(cup);
        return finish(inst, opts, 0, human, std::move(report));
    }

    if (cmd == "conjugate") {
        ValidationReport vrep = run_validation(inst);
        if (!vrep.pass) {
            render_validation(vrep, mode, human, report);
            return finish(inst, opts, 1, human, std::move(report));
        }
        const int n = inst.system.size();
        if (opts.perm.empty())
            throw input_error("conjugate: --perm is required (1-based target arrangement)");
        if (static_cast<int>(opts.perm.size()) != n)
            throw input_error("conjugate: --perm must list all " + std::to_string(n) +
                              " curves");
        std::vector<int> start, target;
        for (int i = 0; i < n; ++i) start.push_back(i);
        for (int p : opts.perm) {
            if (p < 1 || p > n)
                throw input_error("conjugate: --perm entries must be in 1.." +
                                  std::to_string(n));
            target.push_back(p - 1);
        }
        const ConjugationResult res = conjugate_reorder(inst.system, start, target);

        auto arrangement_names = [&](const std::vector<int>& arr) {
            std::string out;
            for (int i : arr)
                out += (out.empty() ? "" : " ") + inst.system.curves[i].name;
            return out;
        };
        human << "start: " << arrangement_names(start) << "\n";
        human << "target: " << arrangement_names(target) << "\n";
        human << "moves: " << res.moves.size() << "\n";
        for (const ReorderMove& mv : res.moves)
            human << "  " << (mv.kind == ReorderMove::interior_swap ? "interior_swap"
                                                                    : "wrap_swap")
                  << "(" << mv.pos1 << "," << mv.pos2 << ")\n";
        human << "conjugator: " << word_to_text(res.word) << "\n";
        human << "residual rotation: " << res.residual_rotation << "\n";
        human << "verified: " << (res.verified ? "yes" : "NO") << "\n";
        report["start"] = start;
        report["target"] = target;
        json moves = json::array();
        for (const ReorderMove& mv : res.moves) {
            json mj;
            mj["kind"] =
                mv.kind == ReorderMove::interior_swap ? "interior_swap" : "wrap_swap";
            mj["pos1"] = mv.pos1;
            mj["pos2"] = mv.pos2;
            moves.push_back(std::move(mj));
        }
        report["moves"] = std::move(moves);
        report["conjugator"] = word_to_json(res.word);
        report["residual_rotation"] = res.residual_rotation;
        report["verified"] = res.verified;
        report["start_matrix"] = matrix_to_json(res.start_matrix);
        report["target_matrix"] = matrix_to_json(res.target_matrix);
        report["conjugator_matrix"] = matrix_to_json(res.conjugator_matrix);
        return finish(inst, opts, 0, human, std::move(report));
    }

    if (cmd == "cut") {
        if (!inst.map) {
            if (!inst.map_violations.empty())
                throw input_error("cut: map invalid: " + inst.map_violations.front());
            throw input_error("cut: instance has no map");
        }
        std::vector<int> indices;
        std::string names;
        for (int i = 0; i < inst.system.size(); ++i)
            if (inst.system.curves[i].darts) {
                indices.push_back(i);
                names += (names.empty() ? "" : " ") + inst.system.curves[i].name;
            }
        const EulerGenus eg = euler_genus(*inst.map);
        const CutResult cut = cut_along(*inst.map, inst.system, indices);
        const bool identity = cut.chi == eg.chi - cut.chi_subgraph;
        human << "cut along: " << (names.empty() ? "(nothing)" : names) << "\n";
        human << "chi(map)=" << eg.chi << " chi(K)=" << cut.chi_subgraph
              << " chi(cut)=" << cut.chi << " -> identity "
              << (identity ? "pass" : "FAIL") << "\n";
        human << "boundary circles: " << cut.boundary_components << "\n";
        human << "complement components: " << cut.complement_components << "\n";
        human << "surviving darts: " << cut.surviving.size() << "\n";
        report["cut_along"] = indices;
        report["chi_map"] = eg.chi;
        report["chi_subgraph"] = cut.chi_subgraph;
        report["chi_cut"] = cut.chi;
        report["identity_pass"] = identity;
        report["boundary_components"] = cut.boundary_components;
        report["complement_components"] = cut.complement_components;
        report["surviving_darts"] = static_cast<int>(cut.surviving.size());
        return finish(inst, opts, 0, human, std::move(report));
    }

    throw input_error("unknown command '" + cmd + "'");
}

}  // namespace twistfloer
