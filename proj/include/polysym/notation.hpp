#pragma once

#include <string>
#include <string_view>

#include "polysym/errors.hpp"
#include "polysym/partition.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

/// Parses `blockgroup+` where a group is `d^{a,b,...}` or `d^m`. Groups may be
/// separated by whitespace and repeated degrees merge. `()` and the empty
/// string denote the empty type. Throws ParseError.
SplitType parse_type(std::string_view text);

/// Degree-descending groups separated by spaces: `2^2 1^{3,1}`; `()` if empty.
std::string to_string(const SplitType& t);

/// LaTeX label: `2^{1}1^{2}`, `1^{31}`. Parts are comma separated
/// when any exceeds 9.
std::string to_latex_label(const SplitType& t);

/// Comma separated blocks `d^m`, a bare `d` meaning `d^1`; optional enclosing
/// parentheses. Throws ParseError.
BlockSequence parse_block_sequence(std::string_view text);
/// `(4^2,3^2,6^1)`.
std::string to_string(const BlockSequence& seq);

/// `3,2,1`, `(3,2,1)`, or `()`. Throws ParseError.
Partition parse_partition(std::string_view text);

}  // namespace polysym
