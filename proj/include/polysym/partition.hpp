#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polysym/rational.hpp"

namespace polysym {

/// A weakly decreasing list of positive integers. The empty partition is the
/// default value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into weakly decreasing order and drops zeros; negative entries throw.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int area() const;
  bool empty() const { return parts_.empty(); }
  /// Zero-based row access that returns 0 past the last row.
  int at(int row) const { return row < length() ? parts_[static_cast<std::size_t>(row)] : 0; }
  /// Number of parts equal to `value`.
  int multiplicity(int value) const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  /// True when the Young diagram of `inner` sits inside this one.
  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Multiset union of parts.
Partition partition_union(const Partition& a, const Partition& b);
/// Multiplies every part by r.
Partition partition_scale(const Partition& p, int r);
/// z_λ = ∏ i^{m_i} m_i!.
Integer z_factor(const Partition& p);

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// "(3,1)"; the empty partition renders as "()".
std::string to_string(const Partition& p);

}  // namespace polysym
