#pragma once

#include <map>
#include <vector>

#include "polysym/bricks.hpp"
#include "polysym/polysym_core.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

enum class BrickFamily { PTBT, HTBT, ETBT };

/// A tiling of every component diagram of τ by labeled bricks; 0-bricks have
/// the lengths of the parts of σ.
struct TensorBrickTabloid {
  BrickFamily family = BrickFamily::PTBT;
  SplitType inner;
  SplitType shape;
  BlockSequence content;
  /// PTBT: the divisor k_i | d_i chosen for block i.
  std::vector<int> divisors;
  /// HTBT and ETBT: the partition λ^{(i)} ⊢ d_i chosen for block i.
  std::vector<Partition> partitions;
  /// Per degree, the rows of the component with their bricks left to right.
  std::map<int, BrickFilling> components;
  /// ∏ k_i for PTBT; 1 otherwise.
  Rational weight{1};
  /// ETBT: (−1)^{Σ ℓ(λ^{(i)})}, the sign used for E. +1 otherwise.
  int sign = 1;
};

std::vector<TensorBrickTabloid> enumerate_PTBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta);
std::vector<TensorBrickTabloid> enumerate_HTBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta);
std::vector<TensorBrickTabloid> enumerate_ETBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta);

/// m⊗-expansion of expr · F_δ by weighted tabloid counts.
PolyExpr m_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta);
PolyExpr m_times_P(const PolyExpr& expr, const BlockSequence& delta);
PolyExpr m_times_H(const PolyExpr& expr, const BlockSequence& delta);
/// `signed_variant` selects E instead of E⁺.
PolyExpr m_times_E(const PolyExpr& expr, const BlockSequence& delta, bool signed_variant);

/// M(F, m⊗) at weight n.
PolyMatrix transition_to_m(PolyBasis family, int n);

}  // namespace polysym
