#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace polysym {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

/// Renders `a/b`, or `a` when the denominator is 1.
std::string to_string(const Rational& q);

/// Renders `\frac{a}{b}` (with a leading minus outside the fraction), or `a`.
std::string to_latex(const Rational& q);

/// Accepts `a`, `-a`, `a/b`; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(int n);

}  // namespace polysym

namespace Eigen {

template <>
struct NumTraits<polysym::Rational> : GenericNumTraits<polysym::Rational> {
  using Real = polysym::Rational;
  using NonInteger = polysym::Rational;
  using Nested = polysym::Rational;
  using Literal = polysym::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
