#include "polysym/shapes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace polysym {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("skew shape inner partition is not contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < outer_.length(); ++i) {
    for (int j = inner_.at(i); j < outer_.at(i); ++j) out.emplace_back(i + 1, j + 1);
  }
  return out;
}

namespace {

// Beta numbers λ_i + (L − 1 − i) for i = 0..L−1, strictly decreasing.
std::vector<int> beta_set(const Partition& p, int length) {
  std::vector<int> beta(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = p.at(i) + (length - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

struct Removal {
  Partition result;
  int rows = 0;
};

// Removes the r-ribbon whose north-east cell ends row `row` (0-based) of λ.
std::optional<Removal> remove_ribbon_with_head(const Partition& lambda, int row, int r) {
  const int length = lambda.length() + r;
  std::vector<int> beta = beta_set(lambda, length);
  const int from = beta[static_cast<std::size_t>(row)];
  const int to = from - r;
  if (to < 0) return std::nullopt;
  const std::set<int> occupied(beta.begin(), beta.end());
  if (occupied.count(to) != 0) return std::nullopt;
  int between = 0;
  for (int b : beta) {
    if (b > to && b < from) ++between;
  }
  beta[static_cast<std::size_t>(row)] = to;
  return Removal{from_beta_set(std::move(beta)), between + 1};
}

int first_differing_row(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < outer.length(); ++i) {
    if (outer.at(i) != inner.at(i)) return i;
  }
  return -1;
}

template <typename Peel>
std::optional<PolyribbonDecomposition> peel_all(const SkewShape& shape, int r, Peel peel) {
  if (r < 1) throw std::invalid_argument("ribbon length must be positive");
  if (shape.size() % r != 0) return std::nullopt;
  PolyribbonDecomposition out;
  Partition current = shape.outer();
  std::vector<Partition> chain{current};
  while (current != shape.inner()) {
    auto step = peel(current);
    if (!step || !step->first.contains(shape.inner())) return std::nullopt;
    current = std::move(step->first);
    out.sign *= step->second;
    chain.push_back(current);
    ++out.count;
  }
  std::reverse(chain.begin(), chain.end());
  out.chain = std::move(chain);
  return out;
}

}  // namespace

std::vector<RibbonStep> add_ribbons(const Partition& mu, int k) {
  if (k < 1) throw std::invalid_argument("ribbon length must be positive");
  const int length = mu.length() + k;
  const std::vector<int> beta = beta_set(mu, length);
  const std::set<int> occupied(beta.begin(), beta.end());
  std::vector<RibbonStep> out;
  for (int i = 0; i < length; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from + k;
    if (occupied.count(to) != 0) continue;
    int between = 0;
    int above = 0;
    for (int b : beta) {
      if (b > from && b < to) ++between;
      if (b > to) ++above;
    }
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    RibbonStep step;
    step.result = from_beta_set(std::move(moved));
    step.rows = between + 1;
    step.sign = between % 2 == 0 ? 1 : -1;
    step.top_row = above + 1;
    step.left_column = mu.at(i) + 1;
    out.push_back(std::move(step));
  }
  std::sort(out.begin(), out.end(), [](const RibbonStep& a, const RibbonStep& b) { return a.result > b.result; });
  return out;
}

std::optional<PolyribbonDecomposition> polyribbon_decompose(const SkewShape& shape, int r) {
  const Partition& inner = shape.inner();
  return peel_all(shape, r, [&](const Partition& current) -> std::optional<std::pair<Partition, int>> {
    const int top = first_differing_row(current, inner);
    auto removal = remove_ribbon_with_head(current, top, r);
    if (!removal) return std::nullopt;
    return std::make_pair(std::move(removal->result), removal->rows % 2 == 1 ? 1 : -1);
  });
}

std::optional<PolyribbonDecomposition> dual_polyribbon_decompose(const SkewShape& shape, int r) {
  const Partition inner_conj = shape.inner().conjugate();
  return peel_all(shape, r, [&](const Partition& current) -> std::optional<std::pair<Partition, int>> {
    // The leftmost column of the skew region holds the tail of the last ribbon;
    // in the conjugate it is the head at the topmost row.
    const Partition conj = current.conjugate();
    const int column = first_differing_row(conj, inner_conj);
    auto removal = remove_ribbon_with_head(conj, column, r);
    if (!removal) return std::nullopt;
    const int rows = r + 1 - removal->rows;
    return std::make_pair(removal->result.conjugate(), rows % 2 == 1 ? 1 : -1);
  });
}

namespace {

void polyribbons_rec(const Partition& current, int r, int remaining, bool dual, int bound, int sign,
                     std::vector<SignedPartition>& out) {
  if (remaining == 0) {
    out.push_back({current, sign});
    return;
  }
  for (const RibbonStep& step : add_ribbons(current, r)) {
    const int key = dual ? step.left_column : step.top_row;
    if (key > bound) continue;
    polyribbons_rec(step.result, r, remaining - 1, dual, key, sign * step.sign, out);
  }
}

}  // namespace

std::vector<SignedPartition> add_polyribbons(const Partition& mu, int r, int n, bool dual) {
  if (r < 1) throw std::invalid_argument("ribbon length must be positive");
  if (n < 0) throw std::invalid_argument("ribbon count must be nonnegative");
  std::vector<SignedPartition> out;
  polyribbons_rec(mu, r, n, dual, std::numeric_limits<int>::max(), 1, out);
  std::sort(out.begin(), out.end(),
            [](const SignedPartition& a, const SignedPartition& b) { return a.shape > b.shape; });
  return out;
}

}  // namespace polysym
