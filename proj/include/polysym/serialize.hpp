#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polysym/matrix.hpp"
#include "polysym/monomial_rules.hpp"
#include "polysym/polysym_core.hpp"
#include "polysym/power_rules.hpp"
#include "polysym/schur_rules.hpp"
#include "polysym/shapes.hpp"
#include "polysym/sym_kernel.hpp"

namespace polysym {

using Json = nlohmann::ordered_json;

/// `[[d,m],…]` in canonical descending order.
Json to_json(const SplitType& t);
SplitType type_from_json(const Json& j);
Json to_json(const Partition& p);
/// `[num, den]`; components that do not fit in 64 bits are emitted as strings.
Json to_json(const Rational& q);
Json to_json(const SymExpr& e);
Json to_json(const PolyExpr& e);
Json to_json(const PolyMatrix& m);
Json to_json(const ClassicalMatrix& m);
Json to_json(const TensorTableau& t);
Json to_json(const ConstantRowTableau& t);
Json to_json(const TensorBrickTabloid& t);

std::string to_csv(const PolyMatrix& m);
std::string to_csv(const ClassicalMatrix& m);
/// A `\bbmatrix{…}` block with type labels on the border.
std::string to_latex(const PolyMatrix& m);
std::string to_latex(const ClassicalMatrix& m);
/// Right-aligned plain-text grid.
std::string to_text(const PolyMatrix& m);
std::string to_text(const ClassicalMatrix& m);

/// `p[1^6] + 2 p[2^3]`; `0` when empty.
std::string to_text(const PolyExpr& e);

/// Parses `coeff? SYMBOL[type] ((+|-) coeff? SYMBOL[type])*` where SYMBOL is
/// one of m, p, s, h, e, P, H, E+, E and all terms share one symbol. A
/// coefficient is an integer or fraction, optionally followed by `*`.
/// Throws ParseError.
PolyExpr parse_expression(std::string_view text);
/// As parse_expression but symbols may differ between terms; returns one
/// expression per basis in order of first appearance.
std::vector<PolyExpr> parse_mixed_expression(std::string_view text);

/// Tensor diagrams drawn component by component, one row of labels per line.
std::string render_ascii(const std::map<int, std::vector<std::vector<int>>>& components);

/// One type per non-empty line; lines starting with `#` are skipped.
std::vector<SplitType> read_order_file(const std::string& path);

}  // namespace polysym
