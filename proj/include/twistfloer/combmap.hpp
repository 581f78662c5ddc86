#ifndef TWISTFLOER_COMBMAP_HPP
#define TWISTFLOER_COMBMAP_HPP

#include <map>
#include <string>
#include <vector>

namespace twistfloer {

using Dart = int;

/// Tier-2 cellular model: a combinatorial map (rotation system). Darts carry
/// arbitrary positive integer identifiers; alpha is the fixed-point-free edge
/// involution, sigma the counterclockwise rotation at each vertex. Vertices
/// are sigma-orbits, edges are alpha-orbits, and faces are orbits of
/// phi = sigma after alpha — that convention is frozen and fixes orientation.
class CombinatorialMap {
  public:
    CombinatorialMap() = default;

    /// Build from explicit permutations given as dart -> dart maps.
    /// Throws input_error when alpha/sigma are not permutations of the dart
    /// set or alpha is not a fixed-point-free involution.
    CombinatorialMap(std::vector<Dart> darts,
                     std::map<Dart, Dart> alpha,
                     std::map<Dart, Dart> sigma);

    const std::vector<Dart>& darts() const { return darts_; }
    bool has_dart(Dart d) const;
    Dart alpha(Dart d) const;
    Dart sigma(Dart d) const;
    Dart phi(Dart d) const { return sigma(alpha(d)); }

    std::vector<std::vector<Dart>> vertices() const;  // sigma-orbits
    std::vector<std::vector<Dart>> edges() const;     // alpha-orbits (pairs)
    std::vector<std::vector<Dart>> faces() const;     // phi-orbits

    /// Index of the vertex orbit containing d (orbits in vertices() order).
    int vertex_of(Dart d) const;

    /// Number of connected components of the dart adjacency graph generated
    /// by alpha and sigma; 1 for a valid closed connected map.
    int components() const;

    bool empty() const { return darts_.empty(); }

  private:
    friend struct MapChecks;
    std::vector<Dart> darts_;                 // sorted identifiers
    std::map<Dart, Dart> alpha_, sigma_;
    mutable std::vector<int> vertex_index_;   // cached dart-position -> vertex orbit
    int position(Dart d) const;
};

/// Report-style validation: involution/permutation axioms and connectivity.
/// Passes iff violations is empty; first_violation is the leading message.
struct MapReport {
    bool pass = true;
    std::vector<std::string> violations;
    std::string first_violation() const { return violations.empty() ? "" : violations.front(); }
};

/// Axioms checked without assuming a well-formed object: alpha fixed-point-free
/// involution, sigma a permutation of the darts, connectivity.
MapReport validate_map(const std::vector<Dart>& darts,
                       const std::map<Dart, Dart>& alpha,
                       const std::map<Dart, Dart>& sigma);
MapReport validate_map(const CombinatorialMap& m);

/// Euler characteristic chi = V - E + F from orbit counts, and the genus
/// (2 - chi)/2. Throws input_error for disconnected input and internal_error
/// for odd chi (impossible for valid closed oriented maps).
struct EulerGenus {
    int chi = 0;
    int genus = 0;
    int vertices = 0, edges = 0, faces = 0;
};
EulerGenus euler_genus(const CombinatorialMap& m);

/// Build a closed oriented map from polygon gluing words, one word per face,
/// e.g. {"a","b","a-","b-"} for the torus square. Each letter must appear
/// exactly twice overall, once plain and once with the "-" suffix (orientable
/// gluing). Darts are numbered 1..N in word order; phi is the cyclic successor
/// within each word, alpha pairs the two occurrences of each letter, and
/// sigma = phi after alpha. Returns the map plus the dart of each letter's
/// plain (forward) occurrence.
struct BuiltMap {
    CombinatorialMap map;
    std::map<std::string, Dart> forward;   // letter -> plain-occurrence dart
    std::map<std::string, Dart> backward;  // letter -> inverted-occurrence dart
};
BuiltMap build_from_faces(const std::vector<std::vector<std::string>>& face_words);

}  // namespace twistfloer

#endif
