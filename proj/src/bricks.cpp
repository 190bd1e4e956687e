#include "polysym/bricks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polysym {

namespace {

struct Kind {
  int label;
  int length;
};

struct Inventory {
  std::vector<Kind> kinds;
  std::vector<int> counts;
};

Inventory normalize(const std::vector<BrickStock>& stock) {
  std::map<std::pair<int, int>, int> grouped;
  for (const BrickStock& s : stock) {
    if (s.label < 0 || s.length < 1 || s.count < 0) throw std::invalid_argument("invalid brick stock");
    if (s.count > 0) grouped[{s.label, s.length}] += s.count;
  }
  Inventory inv;
  for (const auto& [key, count] : grouped) {
    inv.kinds.push_back({key.first, key.second});
    inv.counts.push_back(count);
  }
  return inv;
}

// Enumerates every multiset of bricks drawn from `counts` that fills a row of
// length `length`, calling visit(used) with per-kind usage.
template <typename Visit>
void row_choices(const Inventory& inv, const std::vector<int>& counts, int length, RowRule rule, Visit&& visit) {
  const std::size_t k = inv.kinds.size();
  std::vector<int> used(k, 0);
  // Whether a label already appears in the row (for the per-label cap).
  std::map<int, int> label_use;
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      visit(used);
      return;
    }
    if (idx == k) return;
    const Kind& kind = inv.kinds[idx];
    const bool single = kind.label == 0 || rule == RowRule::distinct_labels;
    int cap = counts[idx];
    if (single) cap = label_use[kind.label] > 0 ? 0 : std::min(cap, 1);
    cap = std::min(cap, remaining / kind.length);
    for (int c = cap; c >= 0; --c) {
      used[idx] = c;
      label_use[kind.label] += c;
      self(self, idx + 1, remaining - c * kind.length);
      label_use[kind.label] -= c;
    }
    used[idx] = 0;
  };
  rec(rec, 0, length);
}

}  // namespace

std::vector<BrickFilling> fill_with_bricks(const Partition& shape, const std::vector<BrickStock>& stock,
                                           RowRule rule) {
  const Inventory inv = normalize(stock);
  std::vector<BrickFilling> out;
  BrickFilling current;
  auto rec = [&](auto&& self, int row, std::vector<int>& counts) -> void {
    if (row == shape.length()) {
      if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; })) out.push_back(current);
      return;
    }
    std::vector<std::vector<int>> options;
    row_choices(inv, counts, shape.at(row), rule, [&](const std::vector<int>& used) { options.push_back(used); });
    for (const auto& used : options) {
      BrickRow bricks;
      for (std::size_t i = 0; i < used.size(); ++i) {
        for (int c = 0; c < used[i]; ++c) bricks.emplace_back(inv.kinds[i].label, inv.kinds[i].length);
        counts[i] -= used[i];
      }
      current.push_back(std::move(bricks));
      self(self, row + 1, counts);
      current.pop_back();
      for (std::size_t i = 0; i < used.size(); ++i) counts[i] += used[i];
    }
  };
  std::vector<int> counts = inv.counts;
  rec(rec, 0, counts);
  return out;
}

Integer count_brick_fillings(const Partition& shape, const std::vector<BrickStock>& stock, RowRule rule) {
  const Inventory inv = normalize(stock);
  int total = 0;
  for (std::size_t i = 0; i < inv.kinds.size(); ++i) total += inv.kinds[i].length * inv.counts[i];
  if (total != shape.area()) return 0;
  std::map<std::pair<int, std::vector<int>>, Integer> memo;
  auto rec = [&](auto&& self, int row, const std::vector<int>& counts) -> Integer {
    if (row == shape.length()) return 1;
    const auto key = std::make_pair(row, counts);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer sum = 0;
    row_choices(inv, counts, shape.at(row), rule, [&](const std::vector<int>& used) {
      std::vector<int> next = counts;
      for (std::size_t i = 0; i < used.size(); ++i) next[i] -= used[i];
      sum += self(self, row + 1, next);
    });
    memo.emplace(key, sum);
    return sum;
  };
  return rec(rec, 0, inv.counts);
}

}  // namespace polysym
