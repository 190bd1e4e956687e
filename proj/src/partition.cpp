#include "polysym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace polysym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::area() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> result(static_cast<std::size_t>(max_part()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.at(i) > at(i)) return false;
  }
  return true;
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

Partition partition_scale(const Partition& p, int r) {
  if (r < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> parts = p.parts();
  for (int& x : parts) x *= r;
  return Partition(std::move(parts));
}

Integer z_factor(const Partition& p) {
  Integer z = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int m = static_cast<int>(j - i);
    Integer power = 1;
    for (int k = 0; k < m; ++k) power *= parts[i];
    z *= power * factorial(m);
    i = j;
  }
  return z;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(p.at(i));
  }
  return s + ")";
}

}  // namespace polysym
