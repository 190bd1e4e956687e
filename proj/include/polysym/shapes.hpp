#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polysym/partition.hpp"

namespace polysym {

/// outer/inner with dg(inner) ⊆ dg(outer).
class SkewShape {
 public:
  /// Throws std::invalid_argument when inner is not contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.area() - inner_.area(); }
  SkewShape conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }
  /// Cells as 1-based (row, column) pairs, row by row.
  std::vector<std::pair<int, int>> cells() const;

 private:
  Partition outer_;
  Partition inner_;
};

/// One way of adding a ribbon to a partition.
struct RibbonStep {
  Partition result;
  int sign = 1;         ///< (−1)^{rows − 1}
  int top_row = 0;      ///< 1-based row of the north-east end
  int left_column = 0;  ///< 1-based column of the south-west end
  int rows = 0;         ///< number of rows spanned
};

/// Every ν with ν/μ a k-ribbon, sorted by ν in decreasing lexicographic order.
std::vector<RibbonStep> add_ribbons(const Partition& mu, int k);

struct PolyribbonDecomposition {
  int count = 0;  ///< n, the number of ribbons
  int sign = 1;
  /// μ = γ_(0) ⊆ γ_(1) ⊆ ⋯ ⊆ γ_(n) = λ.
  std::vector<Partition> chain;
};

/// Present iff the shape is an r^n-polyribbon; the sign is the product of the
/// ribbon signs. Throws std::invalid_argument when r < 1.
std::optional<PolyribbonDecomposition> polyribbon_decompose(const SkewShape& shape, int r);
/// As above for dual polyribbons, where the bottom columns of the ribbons
/// weakly decrease along the chain.
std::optional<PolyribbonDecomposition> dual_polyribbon_decompose(const SkewShape& shape, int r);

struct SignedPartition {
  Partition shape;
  int sign = 1;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// Every λ ⊇ μ such that λ/μ is a (dual) r^n-polyribbon, with its sign, sorted
/// by λ in decreasing lexicographic order.
std::vector<SignedPartition> add_polyribbons(const Partition& mu, int r, int n, bool dual);

}  // namespace polysym
