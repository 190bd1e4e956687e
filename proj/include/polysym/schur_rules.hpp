#pragma once

#include <map>
#include <vector>

#include "polysym/polysym_core.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

enum class TableauFamily { TRHT, TPRT, dual_TPRT };

struct TableauStep {
  /// TRHT: the tensor position k_i receiving the ribbon.
  int position = 0;
  /// TPRT and dual TPRT: the partition λ^{(i)} ⊢ d_i.
  Partition associated;
  /// Product of the ribbon signs added in this step.
  int sign = 1;
};

/// A chain σ = τ_(0) ⊆ ⋯ ⊆ τ_(s) = τ recording block insertions in s⊗.
struct TensorTableau {
  TableauFamily family = TableauFamily::TRHT;
  SplitType inner;
  SplitType shape;
  BlockSequence content;
  std::vector<SplitType> chain;
  std::vector<TableauStep> steps;
  /// sgn for TRHT and TPRT; sgn⁺ for dual TPRT.
  int sign = 1;
  /// sgn⁻ for dual TPRT; equal to `sign` otherwise.
  int sign_minus = 1;
  /// ∏ k_i for TRHT; 1 otherwise.
  Rational weight{1};

  /// Per degree, the rows of the component diagram with each cell's label;
  /// cells of the inner shape carry 0.
  std::map<int, std::vector<std::vector<int>>> cell_labels() const;
};

/// One way to multiply s⊗_σ by a single block.
struct BlockInsertion {
  SplitType result;
  TableauStep step;
  int sign = 1;        ///< sgn, or sgn⁺ for the dual families
  int sign_minus = 1;  ///< sgn⁻ for the dual families
  Rational weight{1};
};

/// All insertions of the block into s⊗_σ for family F ∈ {P, H, E⁺, E}.
/// E⁺ and E share the dual insertions and differ only in which sign applies.
std::vector<BlockInsertion> block_insertions(const SplitType& sigma, PolyBasis family, const Block& block);

PolyExpr s_times_P_block(const PolyExpr& expr, int d, int m);
PolyExpr s_times_H_block(const PolyExpr& expr, int d, int r);
/// `signed_variant` selects E (sgn⁻) instead of E⁺ (sgn⁺).
PolyExpr s_times_E_block(const PolyExpr& expr, int d, int r, bool signed_variant);
/// s⊗-expansion of expr · F_δ, applying the blocks of δ left to right.
PolyExpr s_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta);

std::vector<TensorTableau> enumerate_TRHT(const SplitType& tau, const SplitType& sigma, const BlockSequence& delta);
std::vector<TensorTableau> enumerate_TPRT(const SplitType& tau, const SplitType& sigma, const BlockSequence& delta,
                                          bool dual);

/// M(F, s⊗) at weight n; column σ is F_σ built from s⊗_∅ by block rules.
PolyMatrix transition_to_s(PolyBasis family, int n);

}  // namespace polysym
