#include "twistfloer/combmap.hpp"

#include "twistfloer/errors.hpp"

#include <algorithm>
#include <set>

namespace twistfloer {

namespace {

// Orbits of a permutation given as dart -> dart, in order of least dart.
std::vector<std::vector<Dart>> orbits_of(const std::vector<Dart>& darts,
                                         const std::map<Dart, Dart>& perm) {
    std::vector<std::vector<Dart>> out;
    std::set<Dart> seen;
    for (Dart d : darts) {
        if (seen.count(d)) continue;
        std::vector<Dart> orbit;
        Dart x = d;
        do {
            orbit.push_back(x);
            seen.insert(x);
            x = perm.at(x);
        } while (x != d);
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace

MapReport validate_map(const std::vector<Dart>& darts,
                       const std::map<Dart, Dart>& alpha,
                       const std::map<Dart, Dart>& sigma) {
    MapReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.pass = false;
        rep.violations.push_back(msg);
    };
    std::set<Dart> dart_set(darts.begin(), darts.end());
    if (dart_set.size() != darts.size()) fail("duplicate dart identifiers");

    auto check_perm = [&](const std::map<Dart, Dart>& p, const std::string& name) {
        bool ok = true;
        for (Dart d : dart_set) {
            if (!p.count(d)) {
                fail(name + " is undefined on dart " + std::to_string(d));
                ok = false;
            }
        }
        std::set<Dart> image;
        for (const auto& [k, v] : p) {
            if (!dart_set.count(k)) {
                fail(name + " acts on unknown dart " + std::to_string(k));
                ok = false;
            } else if (!dart_set.count(v)) {
                fail(name + " sends dart " + std::to_string(k) + " to unknown dart " +
                     std::to_string(v));
                ok = false;
            } else if (!image.insert(v).second) {
                fail(name + " repeats image dart " + std::to_string(v));
                ok = false;
            }
        }
        return ok;
    };

    bool alpha_perm = check_perm(alpha, "alpha");
    check_perm(sigma, "sigma");

    if (alpha_perm) {
        for (const auto& [d, e] : alpha) {
            if (d == e) {
                fail("alpha has a fixed point at dart " + std::to_string(d));
                break;
            }
            if (alpha.at(e) != d) {
                fail("alpha not an involution");
                break;
            }
        }
    }

    if (rep.pass && !darts.empty()) {
        // connectivity of the dart graph under alpha and sigma
        std::set<Dart> seen{darts.front()};
        std::vector<Dart> stack{darts.front()};
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart n : {alpha.at(d), sigma.at(d)})
                if (seen.insert(n).second) stack.push_back(n);
        }
        if (seen.size() != dart_set.size()) fail("map is not connected");
    }
    return rep;
}

CombinatorialMap::CombinatorialMap(std::vector<Dart> darts,
                                   std::map<Dart, Dart> alpha,
                                   std::map<Dart, Dart> sigma)
    : darts_(std::move(darts)), alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
    std::sort(darts_.begin(), darts_.end());
    MapReport rep = validate_map(darts_, alpha_, sigma_);
    // connectivity is a semantic property checked by euler_genus; construction
    // only enforces the permutation axioms
    for (const auto& v : rep.violations)
        if (v != "map is not connected") throw input_error("combinatorial map: " + v);
}

bool CombinatorialMap::has_dart(Dart d) const {
    return std::binary_search(darts_.begin(), darts_.end(), d);
}

int CombinatorialMap::position(Dart d) const {
    auto it = std::lower_bound(darts_.begin(), darts_.end(), d);
    if (it == darts_.end() || *it != d) throw input_error("unknown dart identifier");
    return static_cast<int>(it - darts_.begin());
}

Dart CombinatorialMap::alpha(Dart d) const {
    auto it = alpha_.find(d);
    if (it == alpha_.end()) throw input_error("unknown dart identifier");
    return it->second;
}

Dart CombinatorialMap::sigma(Dart d) const {
    auto it = sigma_.find(d);
    if (it == sigma_.end()) throw input_error("unknown dart identifier");
    return it->second;
}

std::vector<std::vector<Dart>> CombinatorialMap::vertices() const {
    return orbits_of(darts_, sigma_);
}

std::vector<std::vector<Dart>> CombinatorialMap::edges() const {
    return orbits_of(darts_, alpha_);
}

std::vector<std::vector<Dart>> CombinatorialMap::faces() const {
    std::map<Dart, Dart> phi_map;
    for (Dart d : darts_) phi_map[d] = sigma_.at(alpha_.at(d));
    return orbits_of(darts_, phi_map);
}

int CombinatorialMap::vertex_of(Dart d) const {
    if (vertex_index_.empty()) {
        vertex_index_.assign(darts_.size(), -1);
        auto vs = vertices();
        for (size_t vi = 0; vi < vs.size(); ++vi)
            for (Dart x : vs[vi]) vertex_index_[position(x)] = static_cast<int>(vi);
    }
    return vertex_index_[position(d)];
}

int CombinatorialMap::components() const {
    std::set<Dart> remaining(darts_.begin(), darts_.end());
    int count = 0;
    while (!remaining.empty()) {
        ++count;
        std::vector<Dart> stack{*remaining.begin()};
        remaining.erase(remaining.begin());
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart n : {alpha_.at(d), sigma_.at(d)}) {
                auto it = remaining.find(n);
                if (it != remaining.end()) {
                    remaining.erase(it);
                    stack.push_back(n);
                }
            }
        }
    }
    return count;
}

MapReport validate_map(const CombinatorialMap& m) {
    std::map<Dart, Dart> alpha, sigma;
    for (Dart d : m.darts()) {
        alpha[d] = m.alpha(d);
        sigma[d] = m.sigma(d);
    }
    return validate_map(m.darts(), alpha, sigma);
}

EulerGenus euler_genus(const CombinatorialMap& m) {
    if (m.empty()) throw input_error("euler_genus: empty map");
    if (m.components() != 1)
        throw input_error("euler_genus: map is not connected");
    EulerGenus eg;
    eg.vertices = static_cast<int>(m.vertices().size());
    eg.edges = static_cast<int>(m.edges().size());
    eg.faces = static_cast<int>(m.faces().size());
    eg.chi = eg.vertices - eg.edges + eg.faces;
    if ((2 - eg.chi) % 2 != 0)
        throw internal_error("euler_genus: odd Euler characteristic on a closed map");
    eg.genus = (2 - eg.chi) / 2;
    return eg;
}

BuiltMap build_from_faces(const std::vector<std::vector<std::string>>& face_words) {
    // Darts are word positions numbered 1..N across all faces; phi is the
    // cyclic successor within a face; alpha pairs the two occurrences of each
    // letter (one plain, one "-"-suffixed for orientability); sigma = phi o alpha.
    std::vector<Dart> darts;
    std::map<Dart, Dart> phi;
    struct Occurrence {
        Dart plain = 0, inverted = 0;
    };
    std::map<std::string, Occurrence> occ;
    Dart next = 1;
    for (const auto& word : face_words) {
        if (word.empty()) throw input_error("face word must be nonempty");
        Dart first = next;
        for (const auto& letter : word) {
            Dart d = next++;
            darts.push_back(d);
            bool inverted = !letter.empty() && letter.back() == '-';
            std::string name = inverted ? letter.substr(0, letter.size() - 1) : letter;
            if (name.empty()) throw input_error("empty edge letter in face word");
            auto& o = occ[name];
            Dart& slot = inverted ? o.inverted : o.plain;
            if (slot != 0)
                throw input_error("letter '" + name + (inverted ? "-" : "") +
                                  "' appears twice with the same orientation "
                                  "(gluing not orientable)");
            slot = d;
            phi[d] = d + 1;
        }
        phi[next - 1] = first;  // close the face cycle
    }
    std::map<Dart, Dart> alpha;
    BuiltMap out;
    for (const auto& [name, o] : occ) {
        if (o.plain == 0 || o.inverted == 0)
            throw input_error("letter '" + name + "' must appear exactly once plain "
                              "and once inverted");
        alpha[o.plain] = o.inverted;
        alpha[o.inverted] = o.plain;
        out.forward[name] = o.plain;
        out.backward[name] = o.inverted;
    }
    std::map<Dart, Dart> sigma;
    for (Dart d : darts) sigma[d] = phi.at(alpha.at(d));
    out.map = CombinatorialMap(std::move(darts), std::move(alpha), std::move(sigma));
    return out;
}

}  // namespace twistfloer
