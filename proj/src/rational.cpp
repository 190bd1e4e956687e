#include "polysym/rational.hpp"

#include <stdexcept>

namespace polysym {

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

std::string to_latex(const Rational& q) {
  const Integer den = denominator_of(q);
  const Integer num = numerator_of(q);
  if (den == 1) return num.str();
  if (num < 0) return "-\\frac{" + Integer(-num).str() + "}{" + den.str() + "}";
  return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)));
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty rational");
  text = text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer factorial(int n) {
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace polysym
