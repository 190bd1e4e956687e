#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polysym/polysym_core.hpp"
#include "polysym/rational.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

/// x_{d,i}^e.
struct VarPower {
  int degree = 1;
  int index = 1;
  int exponent = 1;
  friend bool operator==(const VarPower&, const VarPower&) = default;
  friend auto operator<=>(const VarPower&, const VarPower&) = default;
};

/// Sorted by (degree, index); exponents positive.
using Monomial = std::vector<VarPower>;

int monomial_weight(const Monomial& m);

/// Polynomial in x_{d,i} (1 ≤ d ≤ cap, 1 ≤ i ≤ width) with every term of
/// weight Σ d·e above the cap discarded.
class TruncatedPoly {
 public:
  TruncatedPoly(int cap, int width);
  static TruncatedPoly constant(int cap, int width, const Rational& c);

  int cap() const { return cap_; }
  int width() const { return width_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// Adds c·m, dropping it when its weight exceeds the cap.
  void add_term(const Monomial& m, const Rational& c);

  TruncatedPoly& operator+=(const TruncatedPoly& other);
  TruncatedPoly operator*(const TruncatedPoly& other) const;
  TruncatedPoly scaled(const Rational& c) const;
  /// x_{d,i} ↦ x_{d,i}^r in every term (then truncated).
  TruncatedPoly substitute_power(int r) const;

  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

 private:
  int cap_;
  int width_;
  std::map<Monomial, Rational> terms_;
};

/// Expands the defining formula of a basis element: f⊗_τ for the pure
/// bases, or the product over the blocks of τ for P, H, E⁺, E. Requires
/// width ≥ cap; throws std::invalid_argument otherwise.
TruncatedPoly generate(PolyBasis basis, const SplitType& index, int cap, int width);
/// F_{d^m} for F ∈ {P, H, E⁺, E}.
TruncatedPoly generate_block(PolyBasis family, const Block& block, int cap, int width);

/// Reads coefficients of the dominant monomials of weight n into an m⊗
/// expansion. Throws DomainError when spot checks find the input asymmetric
/// and std::invalid_argument when width < n.
PolyExpr extract_m_tensor(const TruncatedPoly& poly, int n);

/// M(F, G) from monomial expansions and an exact solve.
PolyMatrix oracle_transition(PolyBasis from, PolyBasis to, int n);

struct Mismatch {
  SplitType row;
  SplitType column;
  Rational rules_value;
  Rational oracle_value;
};

struct FamilyCheck {
  PolyBasis family;
  PolyBasis target;
  std::vector<Mismatch> mismatches;
  bool matched() const { return mismatches.empty(); }
};

struct CrossCheckReport {
  int weight = 0;
  std::vector<FamilyCheck> families;
  bool passed() const;
  int matched_count() const;
};

/// Compares M(F, T) from the combinatorial rules against the oracle for
/// F ∈ {P, H, E⁺, E} and T ∈ {s⊗, p⊗, m⊗}.
CrossCheckReport cross_check(int n);

std::string to_string(const CrossCheckReport& report);

}  // namespace polysym
