#ifndef TWISTFLOER_CERTIFY_HPP
#define TWISTFLOER_CERTIFY_HPP

#include "twistfloer/linalg.hpp"
#include "twistfloer/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistfloer {

/// Outcome of the irreducibility decision with the stage that decided it.
struct IrreducibilityResult {
    enum Status { irreducible, reducible, unknown } status = unknown;

    enum Stage { eisenstein, mod_p, kronecker, trivial } stage = trivial;

    /// Eisenstein witness: f(zeta + shift) satisfies the criterion at prime p.
    std::optional<std::pair<Int, int>> eisenstein_witness;
    /// Mod-p witness: the reduction mod p is irreducible.
    std::optional<int> mod_p_witness;
    /// A nontrivial factor, when reducible.
    std::optional<IntPolynomial> factor;
    /// Set when the complete stage exhausted the search without a factor.
    bool complete_search_exhausted = false;
    /// Degree exceeded the complete-decision bound; fast paths only.
    bool beyond_complete_bound = false;

    std::string witness_text() const;
};

/// Decision procedure for irreducibility over Z of the primitive part, in
/// three stages: (1) Eisenstein on f(zeta + a), shifts scanned center-out
/// over [-8, 8] with primes ascending to 97; (2) irreducibility mod p for
/// ascending primes to 97 not dividing the leading coefficient (Rabin test);
/// (3) complete Kronecker factor search (rational-root extraction, then
/// interpolated divisor tuples) for degree <= 8. Degree > 8 returns the
/// fast-path partial result flagged beyond_complete_bound (status unknown if
/// neither fast path decided). Polynomials with primitive part of degree <= 0
/// are not irreducible (units). f must be nonzero.
IrreducibilityResult is_irreducible_over_Z(const IntPolynomial& f);

/// All m >= 1 with Phi_m | f, enumerated over every m with phi(m) <= deg f
/// (m <= 2 deg^2 suffices since phi(m) >= sqrt(m/2)). f must be nonzero.
std::vector<int> cyclotomic_factor_check(const IntPolynomial& f);

/// Largest n >= 1 such that every exponent with nonzero coefficient is
/// divisible by n (gcd of the nonzero-coefficient exponents; the constant
/// term counts as exponent 0 and zeros are ignored). n = 1 is the good case.
/// Constant polynomials are degenerate: n = 1 with the flag set.
struct PowerPattern {
    int n = 1;
    bool degenerate = false;
};
PowerPattern power_pattern_check(const IntPolynomial& f);

/// Assembled sufficiency-only pseudo-Anosov certificate for the H1 action.
struct CertificateReport {
    enum Verdict {
        certified_pseudo_anosov,
        not_certified_reducible,
        not_certified_root_of_unity,
        not_certified_power_pattern,
        inconclusive
    } verdict = inconclusive;

    IntPolynomial charpoly;
    IrreducibilityResult irreducibility;
    std::vector<int> cyclotomic_hits;
    PowerPattern power_pattern;
    /// Which symplectic form the matrix preserves: "interleaved" or "split".
    std::string form_convention;
    /// Always emitted: the criterion is sufficient-only; a non-certified
    /// matrix may still represent a pseudo-Anosov class.
    std::string caveat;

    static std::string verdict_name(Verdict v);
};

/// Casson-Bleiler certification of a square 2g x 2g matrix. The matrix must
/// preserve a standard symplectic form — the interleaved convention
/// (block-diagonal [[0,1],[-1,0]]) or the split convention [[0,I],[-I,0]] —
/// otherwise input_error (such a matrix cannot be an orientation-preserving
/// mapping-class action). Verdict is certified iff the characteristic
/// polynomial is irreducible, has no cyclotomic factor, and is not a
/// polynomial in zeta^n for n > 1. Failing tags in precedence order:
/// root_of_unity (a cyclotomic hit is decided unconditionally, so it applies
/// even when irreducibility is undecided), then reducible, then
/// power_pattern; `inconclusive` is reserved for an undecided irreducibility
/// stage with no other disqualifier.
CertificateReport certify_casson_bleiler(const IntMatrix& m);

}  // namespace twistfloer

#endif
