#pragma once

#include <utility>
#include <vector>

#include "polysym/partition.hpp"
#include "polysym/rational.hpp"

namespace polysym {

/// `count` interchangeable bricks with the given label and length. Label 0
/// marks bricks coming from the inner shape; a row holds at most one of them.
struct BrickStock {
  int label = 0;
  int length = 1;
  int count = 1;
};

enum class RowRule {
  distinct_labels,    ///< labels strictly increase along each row
  weakly_increasing,  ///< labels weakly increase along each row
};

/// (label, length) bricks of one row, left to right.
using BrickRow = std::vector<std::pair<int, int>>;
using BrickFilling = std::vector<BrickRow>;

/// Every way to tile the rows of `shape` with the whole stock. Rows are
/// filled top to bottom; within a row bricks appear by ascending label.
std::vector<BrickFilling> fill_with_bricks(const Partition& shape, const std::vector<BrickStock>& stock,
                                           RowRule rule);

/// Number of fillings, memoized on (row, remaining stock).
Integer count_brick_fillings(const Partition& shape, const std::vector<BrickStock>& stock, RowRule rule);

}  // namespace polysym
