#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polysym/partition.hpp"
#include "polysym/rational.hpp"

namespace polysym {

/// A block d^m: degree d, multiplicity m, both positive.
struct Block {
  int degree = 1;
  int multiplicity = 1;

  Block() = default;
  /// Throws std::invalid_argument when either component is not positive.
  Block(int d, int m);

  int weight() const { return degree * multiplicity; }

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// An ordered list of blocks with no constraint on order; indexes products
/// such as P_δ = P_{δ_1} P_{δ_2} ⋯.
using BlockSequence = std::vector<Block>;

int sequence_weight(const BlockSequence& seq);

/// A splitting type, stored as degree → partition of multiplicities.
///
/// Empty restrictions are never stored, so structural equality is equality of
/// types. Comparison uses the canonical order: block sequences sorted
/// descending, compared lexicographically.
class SplitType {
 public:
  SplitType() = default;
  explicit SplitType(const std::map<int, Partition>& restrictions);
  static SplitType from_blocks(const BlockSequence& blocks);
  /// A type with a single nonempty restriction.
  static SplitType single(int degree, const Partition& part);

  const std::map<int, Partition>& restrictions() const { return restrictions_; }
  /// τ|_d, or the empty partition.
  const Partition& restriction(int degree) const;
  /// Canonical descending block list.
  const BlockSequence& blocks() const { return blocks_; }

  int weight() const;
  int length() const;
  /// (−1)^{Σ_d area(τ|_d)}.
  int sign() const;
  bool empty() const { return restrictions_.empty(); }

  /// Young-diagram containment in every component.
  bool contains(const SplitType& inner) const;
  /// Multiset containment of parts in every component.
  bool contains_parts(const SplitType& inner) const;

  friend bool operator==(const SplitType& a, const SplitType& b) {
    return a.restrictions_ == b.restrictions_;
  }
  friend std::strong_ordering operator<=>(const SplitType& a, const SplitType& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::map<int, Partition> restrictions_;
  BlockSequence blocks_;
};

/// (σ ∪ ρ)|_k = σ|_k ∪ ρ|_k.
SplitType type_union(const SplitType& a, const SplitType& b);
/// τ^r: every multiplicity multiplied by r.
SplitType type_scale(const SplitType& t, int r);

struct TypeStats {
  int weight = 0;
  int length = 0;
  int sign = 1;
  Rational z_tensor{1};
};

TypeStats type_stats(const SplitType& t);
/// z⊗_τ = ∏_k z_{τ|_k}.
Integer z_tensor(const SplitType& t);

/// All types of weight n in canonical ascending order.
std::vector<SplitType> enumerate_types(int n);

}  // namespace polysym
