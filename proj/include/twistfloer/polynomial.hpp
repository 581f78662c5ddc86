#ifndef TWISTFLOER_POLYNOMIAL_HPP
#define TWISTFLOER_POLYNOMIAL_HPP

#include "twistfloer/scalars.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace twistfloer {

/// Exact integer polynomial, coefficients indexed by exponent (constant term
/// first). The zero polynomial stores no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> constant_first);
    explicit IntPolynomial(std::vector<Int> constant_first);

    /// Monomial c * zeta^k.
    static IntPolynomial monomial(Int c, int k);
    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of zeta^k (0 beyond the degree).
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int leading() const;

    Int eval(const Int& x) const;

    bool is_monic() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator*(const Int& s) const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Human-readable form, e.g. "z^4 + 14*z^3 + 46*z^2 + 14*z + 1".
    std::string str() const;

  private:
    void normalize();
    std::vector<Int> c_;  // c_[k] multiplies zeta^k
};

/// f(zeta + a), computed exactly (Horner over the shifted variable).
IntPolynomial poly_shift(const IntPolynomial& f, const Int& a);

/// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
Int poly_content(const IntPolynomial& f);

/// f divided by its content, sign-normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);

/// Classical pseudo-remainder of f by d (d nonzero): the remainder of
/// lc(d)^(deg f - deg d + 1) * f under long division by d.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& d);

/// True iff d divides f exactly in Z[zeta]. Requires d nonzero (domain error
/// otherwise). Primitive parts are compared via pseudo-division and the
/// contents via integer divisibility, which together decide Z-divisibility.
bool poly_divides(const IntPolynomial& d, const IntPolynomial& f);

/// Exact quotient f / d; requires the division to be exact (internal error
/// otherwise). Used where divisibility is already known.
IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& d);

/// The m-th cyclotomic polynomial via the divisibility recursion
/// Phi_m = (zeta^m - 1) / prod_{d | m, d < m} Phi_d.
IntPolynomial cyclotomic(int m);

/// Euler's totient by trial factorization (small m).
int euler_phi(int m);

}  // namespace twistfloer

#endif
