#include "twistfloer/certify.hpp"

#include "twistfloer/errors.hpp"
#include "twistfloer/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

namespace twistfloer {

namespace {

constexpr std::array<int, 25> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                         29, 31, 37, 41, 43, 47, 53, 59, 61,
                                         67, 71, 73, 79, 83, 89, 97};

// ---------------------------------------------------------------------------
// Eisenstein stage

bool eisenstein_at(const IntPolynomial& h, int p) {
    if (h.leading() % p == 0) return false;
    for (int k = 0; k < h.degree(); ++k)
        if (h.coeff(k) % p != 0) return false;
    return h.coeff(0) % (Int(p) * p) != 0;
}

// ---------------------------------------------------------------------------
// Mod-p stage: Rabin irreducibility test over F_p. Polynomials are int
// coefficient vectors, constant first, trimmed; p <= 97 so int arithmetic
// never overflows.

using PolyP = std::vector<int>;

PolyP trim(PolyP v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int inv_mod(int a, int p) {
    int r = 1, b = ((a % p) + p) % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

PolyP make_monic(PolyP f, int p) {
    const int s = inv_mod(f.back(), p);
    for (int& c : f) c = c * s % p;
    return f;
}

// Remainder of a modulo the monic polynomial f.
PolyP mod_poly(PolyP a, const PolyP& f, int p) {
    a = trim(std::move(a));
    const int n = static_cast<int>(f.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= n) {
        const int k = static_cast<int>(a.size()) - 1 - n;
        const int c = a.back();
        for (int i = 0; i <= n; ++i)
            a[k + i] = ((a[k + i] - c * f[i]) % p + p) % p;
        a = trim(std::move(a));
    }
    return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& f, int p) {
    if (a.empty() || b.empty()) return {};
    PolyP prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return mod_poly(std::move(prod), f, p);
}

PolyP pow_mod(PolyP base, int e, const PolyP& f, int p) {
    PolyP r{1};
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// x^(p^k) modulo f by k-fold Frobenius.
PolyP frobenius_power(int k, const PolyP& f, int p) {
    PolyP r = mod_poly({0, 1}, f, p);
    for (int t = 0; t < k; ++t) r = pow_mod(std::move(r), p, f, p);
    return r;
}

PolyP gcd_p(PolyP a, PolyP b, int p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        b = make_monic(std::move(b), p);
        PolyP r = mod_poly(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool rabin_irreducible_mod_p(const IntPolynomial& g, int p) {
    const int n = g.degree();
    PolyP f(n + 1);
    for (int k = 0; k <= n; ++k)
        f[k] = static_cast<int>(((g.coeff(k) % p) + p) % p);
    if (f.back() == 0) return false;  // degree drops; caller filters this
    f = make_monic(std::move(f), p);

    for (int q : prime_divisors(n)) {
        PolyP h = frobenius_power(n / q, f, p);  // x^(p^(n/q)) mod f
        if (h.size() < 2) h.resize(2, 0);
        h[1] = ((h[1] - 1) % p + p) % p;  // h - x
        if (trim(gcd_p(f, std::move(h), p)).size() > 1) return false;
    }
    PolyP h = frobenius_power(n, f, p);
    return trim(std::move(h)) == mod_poly({0, 1}, f, p);
}

// ---------------------------------------------------------------------------
// Complete stage: rational roots, then Kronecker divisor interpolation.

std::vector<Int> positive_divisors(Int x) {
    x = boost::multiprecision::abs(x);
    std::vector<Int> out;
    for (Int i = 1; i * i <= x; ++i)
        if (x % i == 0) {
            out.push_back(i);
            if (i * i != x) out.push_back(x / i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IntPolynomial> rational_root_factor(const IntPolynomial& g) {
    if (g.coeff(0) == 0) return IntPolynomial::monomial(1, 1);
    const int n = g.degree();
    const auto nums = positive_divisors(g.coeff(0));
    const auto dens = positive_divisors(g.leading());
    for (const Int& den : dens) {
        std::vector<Int> den_pow(n + 1);
        den_pow[0] = 1;
        for (int k = 1; k <= n; ++k) den_pow[k] = den_pow[k - 1] * den;
        for (const Int& num_abs : nums) {
            for (int s : {1, -1}) {
                const Int num = s * num_abs;
                Int value = 0, num_pow = 1;
                for (int k = 0; k <= n; ++k) {
                    value += g.coeff(k) * num_pow * den_pow[n - k];
                    num_pow *= num;
                }
                if (value != 0) continue;
                const Int t = boost::multiprecision::gcd(num_abs, den);
                return IntPolynomial({-num / t, den / t});
            }
        }
    }
    return std::nullopt;
}

std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& g) {
    const int n = g.degree();
    // Evaluation points 0, 1, -1, 2, -2, ...; g has no rational (hence no
    // integer) roots here, so every value is nonzero.
    std::vector<Int> points{0};
    for (int k = 1; static_cast<int>(points.size()) < n / 2 + 1; ++k) {
        points.push_back(k);
        points.push_back(-k);
    }

    for (int d = 2; 2 * d <= n; ++d) {
        const int m = d + 1;
        std::vector<std::vector<Int>> choices(m);
        for (int i = 0; i < m; ++i) {
            const auto divs = positive_divisors(g.eval(points[i]));
            if (i == 0) {
                choices[0] = divs;  // factor sign fixed by delta_0 > 0
            } else {
                for (const Int& v : divs) {
                    choices[i].push_back(v);
                    choices[i].push_back(-v);
                }
            }
        }
        // Lagrange basis for the generic interpolation path.
        std::vector<IntPolynomial> numer(m);
        std::vector<Int> denom(m);
        for (int i = 0; i < m; ++i) {
            IntPolynomial prod = IntPolynomial::one();
            Int den = 1;
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                prod = prod * IntPolynomial({-points[j], Int(1)});
                den *= points[i] - points[j];
            }
            numer[i] = prod;
            denom[i] = den;
        }

        std::vector<size_t> idx(m, 0);
        while (true) {
            std::optional<IntPolynomial> candidate;
            if (d == 2) {
                // points are 0, 1, -1: integral interpolation by parity
                const Int& d0 = choices[0][idx[0]];
                const Int& d1 = choices[1][idx[1]];
                const Int& dm1 = choices[2][idx[2]];
                if ((d1 - dm1) % 2 == 0) {
                    const Int a = (d1 + dm1) / 2 - d0;
                    if (a != 0) candidate = IntPolynomial({d0, (d1 - dm1) / 2, a});
                }
            } else {
                std::vector<Rat> coef(d + 1, Rat(0));
                for (int i = 0; i < m; ++i) {
                    const Rat w = Rat(choices[i][idx[i]]) / Rat(denom[i]);
                    for (int k = 0; k <= d; ++k)
                        coef[k] += w * Rat(numer[i].coeff(k));
                }
                bool integral = true;
                for (const Rat& c : coef)
                    if (boost::multiprecision::denominator(c) != 1) {
                        integral = false;
                        break;
                    }
                if (integral && boost::multiprecision::numerator(coef[d]) != 0) {
                    std::vector<Int> cc(d + 1);
                    for (int k = 0; k <= d; ++k)
                        cc[k] = boost::multiprecision::numerator(coef[k]);
                    candidate = IntPolynomial(std::move(cc));
                }
            }
            if (candidate && poly_divides(*candidate, g))
                return primitive_part(*candidate);

            int pos = m - 1;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string IrreducibilityResult::witness_text() const {
    switch (stage) {
        case eisenstein:
            return "eisenstein criterion at shift " + eisenstein_witness->first.str() +
                   ", prime " + std::to_string(eisenstein_witness->second);
        case mod_p:
            return "irreducible modulo " + std::to_string(*mod_p_witness);
        case kronecker:
            return status == reducible ? "factor found: " + factor->str()
                                       : "complete factor search exhausted";
        case trivial:
            break;
    }
    if (status == irreducible) return "degree 1";
    if (status == reducible) return factor ? "factor found: " + factor->str()
                                           : "degree <= 0 (unit)";
    return "undecided: degree exceeds the complete-search bound";
}

IrreducibilityResult is_irreducible_over_Z(const IntPolynomial& f) {
    if (f.is_zero()) throw input_error("is_irreducible_over_Z: zero polynomial");
    const IntPolynomial g = primitive_part(f);
    IrreducibilityResult res;
    if (g.degree() <= 0) {
        res.status = IrreducibilityResult::reducible;  // a unit is not irreducible
        res.stage = IrreducibilityResult::trivial;
        return res;
    }
    if (g.degree() == 1) {
        res.status = IrreducibilityResult::irreducible;
        res.stage = IrreducibilityResult::trivial;
        return res;
    }

    // Stage 1: Eisenstein on shifted copies, center-out over [-8, 8].
    std::vector<Int> shifts{0};
    for (int a = 1; a <= 8; ++a) {
        shifts.push_back(a);
        shifts.push_back(-a);
    }
    for (const Int& a : shifts) {
        const IntPolynomial h = poly_shift(g, a);
        for (int p : kPrimes) {
            if (!eisenstein_at(h, p)) continue;
            res.status = IrreducibilityResult::irreducible;
            res.stage = IrreducibilityResult::eisenstein;
            res.eisenstein_witness = {a, p};
            return res;
        }
    }

    // Stage 2: irreducible mod p for some small p not dividing the leading
    // coefficient.
    for (int p : kPrimes) {
        if (g.leading() % p == 0) continue;
        if (!rabin_irreducible_mod_p(g, p)) continue;
        res.status = IrreducibilityResult::irreducible;
        res.stage = IrreducibilityResult::mod_p;
        res.mod_p_witness = p;
        return res;
    }

    if (g.degree() > 8) {
        res.status = IrreducibilityResult::unknown;
        res.beyond_complete_bound = true;
        return res;
    }

    // Stage 3: complete search — rational roots, then Kronecker interpolation.
    res.stage = IrreducibilityResult::kronecker;
    if (auto root_factor = rational_root_factor(g)) {
        res.status = IrreducibilityResult::reducible;
        res.factor = primitive_part(*root_factor);
        return res;
    }
    if (auto factor = kronecker_factor(g)) {
        res.status = IrreducibilityResult::reducible;
        res.factor = *factor;
        return res;
    }
    res.status = IrreducibilityResult::irreducible;
    res.complete_search_exhausted = true;
    return res;
}

std::vector<int> cyclotomic_factor_check(const IntPolynomial& f) {
    if (f.is_zero()) throw input_error("cyclotomic_factor_check: zero polynomial");
    const int deg = f.degree();
    std::vector<int> hits;
    if (deg < 1) return hits;
    const int bound = 2 * deg * deg;  // phi(m) >= sqrt(m/2)
    for (int m = 1; m <= bound; ++m) {
        if (euler_phi(m) > deg) continue;
        if (poly_divides(cyclotomic(m), f)) hits.push_back(m);
    }
    return hits;
}

PowerPattern power_pattern_check(const IntPolynomial& f) {
    PowerPattern res;
    if (f.degree() <= 0) {
        res.degenerate = true;
        return res;
    }
    int n = 0;
    for (int k = 1; k <= f.degree(); ++k)
        if (f.coeff(k) != 0) n = std::gcd(n, k);
    res.n = n == 0 ? 1 : n;
    return res;
}

std::string CertificateReport::verdict_name(Verdict v) {
    switch (v) {
        case certified_pseudo_anosov: return "certified_pseudo_anosov";
        case not_certified_reducible: return "not_certified_reducible";
        case not_certified_root_of_unity: return "not_certified_root_of_unity";
        case not_certified_power_pattern: return "not_certified_power_pattern";
        case inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

CertificateReport certify_casson_bleiler(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
        throw input_error("certify: matrix must be square of even dimension 2g");
    const int g = static_cast<int>(m.rows()) / 2;

    CertificateReport rep;
    if (preserves_form(m, standard_form(g)))
        rep.form_convention = "interleaved";
    else if (preserves_form(m, split_form(g)))
        rep.form_convention = "split";
    else
        throw input_error("certify: matrix preserves no standard symplectic form, "
                          "so it is not an orientation-preserving mapping-class action");

    rep.charpoly = charpoly(m);
    rep.irreducibility = is_irreducible_over_Z(rep.charpoly);
    rep.cyclotomic_hits = cyclotomic_factor_check(rep.charpoly);
    rep.power_pattern = power_pattern_check(rep.charpoly);
    rep.caveat = "the criterion is sufficient only: a class that fails to certify "
                 "may still be pseudo-Anosov";

    // The cyclotomic disqualifier outranks reducibility: it is decided
    // unconditionally (divisibility needs no factorization), so it still tags
    // inputs whose irreducibility stage came back undecided, and it names the
    // sharper obstruction when both apply (e.g. (zeta-1)^2g for the identity).
    if (!rep.cyclotomic_hits.empty())
        rep.verdict = CertificateReport::not_certified_root_of_unity;
    else if (rep.irreducibility.status == IrreducibilityResult::reducible)
        rep.verdict = CertificateReport::not_certified_reducible;
    else if (rep.power_pattern.n > 1)
        rep.verdict = CertificateReport::not_certified_power_pattern;
    else if (rep.irreducibility.status == IrreducibilityResult::irreducible)
        rep.verdict = CertificateReport::certified_pseudo_anosov;
    else
        rep.verdict = CertificateReport::inconclusive;
    return rep;
}

}  // namespace twistfloer
