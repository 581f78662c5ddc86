#include "twistfloer/polynomial.hpp"

#include "twistfloer/errors.hpp"

#include <map>
#include <sstream>

namespace twistfloer {

IntPolynomial::IntPolynomial(std::initializer_list<Int> constant_first)
    : c_(constant_first) {
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<Int> constant_first)
    : c_(std::move(constant_first)) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(Int c, int k) {
    if (k < 0) throw input_error("monomial exponent must be nonnegative");
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

Int IntPolynomial::leading() const {
    return c_.empty() ? Int(0) : c_.back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool IntPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> v(c_);
    for (auto& x : v) x *= s;
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPolynomial poly_shift(const IntPolynomial& f, const Int& a) {
    // Horner in the shifted variable: f(z+a) = c0 + (z+a)(c1 + (z+a)(...)).
    IntPolynomial acc;
    IntPolynomial za({a, Int(1)});
    for (int k = f.degree(); k >= 0; --k)
        acc = acc * za + IntPolynomial({f.coeff(k)});
    return acc;
}

Int poly_content(const IntPolynomial& f) {
    Int g(0);
    for (const Int& c : f.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    Int g = poly_content(f);
    std::vector<Int> v(f.coeffs());
    for (auto& c : v) c /= g;
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& d) {
    if (d.is_zero()) throw input_error("pseudo-division by the zero polynomial");
    IntPolynomial r = f;
    const Int lc = d.leading();
    const int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        // r <- lc(d) * r - lc(r) * z^(deg r - deg d) * d
        IntPolynomial shift_d = IntPolynomial::monomial(r.leading(), r.degree() - dd) * d;
        r = r * lc - shift_d;
    }
    return r;
}

bool poly_divides(const IntPolynomial& d, const IntPolynomial& f) {
    if (d.is_zero()) throw input_error("divisibility test by the zero polynomial");
    if (f.is_zero()) return true;
    if (f.degree() < d.degree()) return false;
    if (!pseudo_remainder(primitive_part(f), primitive_part(d)).is_zero()) return false;
    // Gauss: primitive parts divide; contents must divide as well for Z[z].
    return poly_content(f) % poly_content(d) == 0;
}

IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& d) {
    if (d.is_zero()) throw input_error("exact division by the zero polynomial");
    if (f.is_zero()) return IntPolynomial();
    if (f.degree() < d.degree())
        throw internal_error("exact_quotient: divisor degree exceeds dividend");
    std::vector<Int> q(f.degree() - d.degree() + 1, Int(0));
    IntPolynomial r = f;
    const Int lc = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Int t = r.leading();
        if (t % lc != 0) throw internal_error("exact_quotient: inexact division");
        Int coef = t / lc;
        int k = r.degree() - d.degree();
        q[k] = coef;
        r = r - IntPolynomial::monomial(coef, k) * d;
    }
    if (!r.is_zero()) throw internal_error("exact_quotient: nonzero remainder");
    return IntPolynomial(std::move(q));
}

int euler_phi(int m) {
    if (m <= 0) throw input_error("euler_phi of a nonpositive integer");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) result -= result / n;
    return result;
}

IntPolynomial cyclotomic(int m) {
    if (m <= 0) throw input_error("cyclotomic index must be positive");
    static std::map<int, IntPolynomial> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> xm(m + 1, Int(0));
    xm[0] = -1;
    xm[m] = 1;
    IntPolynomial num(std::move(xm));
    IntPolynomial den = IntPolynomial::one();
    for (int d = 1; d < m; ++d)
        if (m % d == 0) den = den * cyclotomic(d);
    IntPolynomial phi = exact_quotient(num, den);
    cache.emplace(m, phi);
    return phi;
}

}  // namespace twistfloer
