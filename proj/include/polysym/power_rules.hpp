#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polysym/polysym_core.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

enum class ConstantRowFamily { ICRPT, ICRHT };

/// A tensor diagram of shape τ whose rows each carry a single label; rows
/// labeled 0 form σ.
struct ConstantRowTableau {
  ConstantRowFamily family = ConstantRowFamily::ICRPT;
  SplitType inner;
  SplitType shape;
  BlockSequence content;
  /// ICRPT: the divisor k_i | d_i chosen at step i.
  std::vector<int> divisors;
  /// ICRHT: the type ρ^{(i)} ⊩ d_i chosen at step i.
  std::vector<SplitType> types;
  /// ∏ k_i for ICRPT, ∏ 1/z⊗_{ρ^{(i)}} for ICRHT.
  Rational weight{1};
  /// ICRHT: ∏ (−1)^{ℓ(ρ)} sgn(ρ). Always +1 for ICRPT.
  int sign_plus = 1;
  /// ICRHT: (−1)^{number of rows with a positive label}. Always +1 for ICRPT.
  int sign_minus = 1;

  /// Per degree, the (length, label) of every row from top to bottom. Rows
  /// are ordered by decreasing length, and equal-length rows by label.
  std::map<int, std::vector<std::pair<int, int>>> rows() const;
};

/// p⊗-expansion of a single block F_{d^r}, F ∈ {P, H, E⁺, E}.
PolyExpr block_in_p(PolyBasis family, int d, int r);

/// expr · F_{d^m} in p⊗.
PolyExpr p_times_block(const PolyExpr& expr, PolyBasis family, int d, int m);
/// expr · F_δ in p⊗, applying the blocks left to right.
PolyExpr p_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta);

std::vector<ConstantRowTableau> enumerate_ICRPT(const SplitType& tau, const SplitType& sigma,
                                                const BlockSequence& delta);
/// The tableaux serve H, E⁺ and E alike; pick the weight and sign that apply.
std::vector<ConstantRowTableau> enumerate_ICRHT(const SplitType& tau, const SplitType& sigma,
                                                const BlockSequence& delta);

/// M(F, p⊗) at weight n.
PolyMatrix transition_to_p(PolyBasis family, int n);

}  // namespace polysym
