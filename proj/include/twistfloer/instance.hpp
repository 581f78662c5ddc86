#ifndef TWISTFLOER_INSTANCE_HPP
#define TWISTFLOER_INSTANCE_HPP

#include "twistfloer/floer.hpp"
#include "twistfloer/reorder.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace twistfloer {

/// Parsed instance document. Field names in the JSON form are exactly:
/// genus, curves, name, class, darts, intersections, negative_curves, word,
/// map, alpha, sigma, matrix. Word entries are strings "+name" / "-name".
/// An emitted report document is itself a valid instance: the top-level
/// "report" key is ignored on input.
struct Instance {
    int genus = 0;
    CurveSystem system;                       // positive family (may be empty)
    CurveSystem negative;                     // negative family (may be empty)
    bool has_negative = false;
    /// Declared intersections pairing a positive with a negative curve; kept
    /// out of both systems so validation can flag them (strongly acceptable
    /// settings forbid cross intersections).
    std::vector<Intersection> cross_intersections;
    std::optional<TwistWord> word;
    /// Present only when the supplied map satisfies the permutation axioms
    /// and connectivity; otherwise map_violations carries the report.
    std::optional<CombinatorialMap> map;
    std::vector<std::string> map_violations;
    std::optional<IntMatrix> matrix;
    std::string source_path;
};

/// Parse and validate an instance document (UTF-8 JSON text). Schema
/// violations, duplicate names, bad class lengths and unresolvable
/// references throw input_error with field diagnostics.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Dispatch outcome: exit status plus rendered reports.
/// Exit codes: 0 success, 1 validation failure, 2 input error.
struct CommandResult {
    int exit_code = 0;
    std::string human;  // table-style text for stdout
    std::string json;   // single machine-readable document (--json)
};

struct CommandOptions {
    bool json = false;
    std::vector<int> perm;  // conjugate: 1-based target arrangement
};

/// Run one of: validate, act, certify, floer, conjugate, cut.
CommandResult run_command(const std::string& cmd, const Instance& inst,
                          const CommandOptions& opts);

}  // namespace twistfloer

#endif
