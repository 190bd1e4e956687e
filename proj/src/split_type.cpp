#include "polysym/split_type.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polysym {

Block::Block(int d, int m) : degree(d), multiplicity(m) {
  if (d < 1 || m < 1) throw std::invalid_argument("block degree and multiplicity must be positive");
}

int sequence_weight(const BlockSequence& seq) {
  int w = 0;
  for (const Block& b : seq) w += b.weight();
  return w;
}

SplitType::SplitType(const std::map<int, Partition>& restrictions) {
  for (const auto& [degree, part] : restrictions) {
    if (degree < 1) throw std::invalid_argument("type degrees must be positive");
    if (!part.empty()) restrictions_.emplace(degree, part);
  }
  for (auto it = restrictions_.rbegin(); it != restrictions_.rend(); ++it) {
    for (int m : it->second.parts()) blocks_.emplace_back(it->first, m);
  }
}

SplitType SplitType::from_blocks(const BlockSequence& blocks) {
  std::map<int, std::vector<int>> parts;
  for (const Block& b : blocks) parts[b.degree].push_back(b.multiplicity);
  std::map<int, Partition> restrictions;
  for (auto& [degree, list] : parts) restrictions.emplace(degree, Partition::from_unsorted(std::move(list)));
  return SplitType(restrictions);
}

SplitType SplitType::single(int degree, const Partition& part) {
  return SplitType(std::map<int, Partition>{{degree, part}});
}

const Partition& SplitType::restriction(int degree) const {
  static const Partition kEmpty;
  const auto it = restrictions_.find(degree);
  return it == restrictions_.end() ? kEmpty : it->second;
}

int SplitType::weight() const {
  int w = 0;
  for (const auto& [degree, part] : restrictions_) w += degree * part.area();
  return w;
}

int SplitType::length() const {
  int l = 0;
  for (const auto& [degree, part] : restrictions_) l += part.length();
  return l;
}

int SplitType::sign() const {
  int total = 0;
  for (const auto& [degree, part] : restrictions_) total += part.area();
  return total % 2 == 0 ? 1 : -1;
}

bool SplitType::contains(const SplitType& inner) const {
  for (const auto& [degree, part] : inner.restrictions_) {
    if (!restriction(degree).contains(part)) return false;
  }
  return true;
}

bool SplitType::contains_parts(const SplitType& inner) const {
  for (const auto& [degree, part] : inner.restrictions_) {
    const Partition& outer = restriction(degree);
    for (int value : part.parts()) {
      if (outer.multiplicity(value) < part.multiplicity(value)) return false;
    }
  }
  return true;
}

SplitType type_union(const SplitType& a, const SplitType& b) {
  std::map<int, Partition> merged = a.restrictions();
  for (const auto& [degree, part] : b.restrictions()) {
    merged[degree] = partition_union(merged[degree], part);
  }
  return SplitType(merged);
}

SplitType type_scale(const SplitType& t, int r) {
  if (r < 1) throw std::invalid_argument("type scale factor must be positive");
  std::map<int, Partition> scaled;
  for (const auto& [degree, part] : t.restrictions()) scaled.emplace(degree, partition_scale(part, r));
  return SplitType(scaled);
}

Integer z_tensor(const SplitType& t) {
  Integer z = 1;
  for (const auto& [degree, part] : t.restrictions()) z *= z_factor(part);
  return z;
}

TypeStats type_stats(const SplitType& t) {
  return TypeStats{t.weight(), t.length(), t.sign(), Rational(z_tensor(t))};
}

namespace {

// Distributes the remaining weight over degrees d, d-1, ..., 1.
void types_rec(int degree, int remaining, std::map<int, Partition>& current,
               std::vector<SplitType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (degree == 0) return;
  for (int area = remaining / degree; area >= 0; --area) {
    if (area == 0) {
      types_rec(degree - 1, remaining, current, out);
      continue;
    }
    for (const Partition& part : enumerate_partitions(area)) {
      current[degree] = part;
      types_rec(degree - 1, remaining - degree * area, current, out);
    }
    current.erase(degree);
  }
}

}  // namespace

std::vector<SplitType> enumerate_types(int n) {
  if (n < 0) throw std::invalid_argument("type weight must be nonnegative");
  std::vector<SplitType> out;
  std::map<int, Partition> current;
  types_rec(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polysym
