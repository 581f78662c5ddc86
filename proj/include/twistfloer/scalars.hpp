#ifndef TWISTFLOER_SCALARS_HPP
#define TWISTFLOER_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>  // Eigen NumTraits for multiprecision numbers
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>

namespace twistfloer {

/// Exact arbitrary-precision integer; the scalar for all homology arithmetic.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used internally (factor interpolation).
using Rat = boost::multiprecision::cpp_rational;

/// The two-element field, usable as an Eigen scalar.
///
/// Values are the residues 0 and 1 with xor addition; subtraction equals
/// addition and every nonzero element is its own inverse.
class F2 {
  public:
    constexpr F2() : v_(0) {}
    constexpr F2(int x) : v_(static_cast<std::uint8_t>(x & 1)) {}
    explicit constexpr F2(const Int& x) : v_(static_cast<std::uint8_t>(x % 2 != 0)) {}

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr int value() const { return v_; }

    friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.v_ ^ b.v_); }
    friend constexpr F2 operator-(F2 a, F2 b) { return F2(a.v_ ^ b.v_); }
    friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.v_ & b.v_); }
    friend constexpr F2 operator/(F2 a, F2 b) { return F2(a.v_ & b.v_); }  // b must be 1
    constexpr F2 operator-() const { return *this; }

    F2& operator+=(F2 b) { v_ ^= b.v_; return *this; }
    F2& operator-=(F2 b) { v_ ^= b.v_; return *this; }
    F2& operator*=(F2 b) { v_ &= b.v_; return *this; }

    friend constexpr bool operator==(F2 a, F2 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(F2 a, F2 b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, F2 a);

  private:
    std::uint8_t v_;
};

inline std::ostream& operator<<(std::ostream& os, F2 a) { return os << int(a.value()); }

}  // namespace twistfloer

namespace Eigen {

template <>
struct NumTraits<twistfloer::F2> {
    using Real = twistfloer::F2;
    using NonInteger = twistfloer::F2;
    using Nested = twistfloer::F2;
    using Literal = int;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1
    };
    static inline Real epsilon() { return twistfloer::F2(0); }
    static inline Real dummy_precision() { return twistfloer::F2(0); }
    static inline int digits10() { return 1; }
};

}  // namespace Eigen

#endif
