#include "polysym/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "polysym/errors.hpp"
#include "polysym/notation.hpp"

namespace polysym {

namespace {

Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(z));
  }
  return Json(z.str());
}

template <typename Label, typename Render>
std::string grid_csv(const LabeledMatrix<Label>& m, Render render) {
  std::ostringstream out;
  out << "\"\"";
  for (const Label& l : m.labels()) out << ",\"" << render(l) << "\"";
  out << "\n";
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    out << "\"" << render(m.labels()[static_cast<std::size_t>(i)]) << "\"";
    for (Eigen::Index j = 0; j < m.size(); ++j) out << "," << to_string(m.entries()(i, j));
    out << "\n";
  }
  return out.str();
}

template <typename Label, typename Render>
std::string grid_latex(const LabeledMatrix<Label>& m, Render render) {
  std::ostringstream out;
  out << "\\bbmatrix{\n~";
  for (const Label& l : m.labels()) out << " & " << render(l);
  out << " \\cr\n";
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    out << render(m.labels()[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < m.size(); ++j) out << " & " << to_latex(m.entries()(i, j));
    out << " \\cr\n";
  }
  out << "}\n";
  return out.str();
}

template <typename Label, typename Render>
std::string grid_text(const LabeledMatrix<Label>& m, Render render) {
  const auto n = static_cast<std::size_t>(m.size());
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = render(m.labels()[j]);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i + 1][0] = render(m.labels()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      cells[i + 1][j + 1] = to_string(m.entries()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == 0) {
        out << row[j] << std::string(width[j] - row[j].size(), ' ');
      } else {
        out << "  " << std::string(width[j] - row[j].size(), ' ') << row[j];
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string partition_label(const Partition& p) { return to_string(p); }
std::string type_label(const SplitType& t) { return to_string(t); }

Json chain_json(const std::vector<SplitType>& chain) {
  Json out = Json::array();
  for (const SplitType& t : chain) out.push_back(to_json(t));
  return out;
}

Json blocks_json(const BlockSequence& seq) {
  Json out = Json::array();
  for (const Block& b : seq) out.push_back({b.degree, b.multiplicity});
  return out;
}

const char* family_name(TableauFamily f) {
  switch (f) {
    case TableauFamily::TRHT: return "TRHT";
    case TableauFamily::TPRT: return "TPRT";
    case TableauFamily::dual_TPRT: return "dualTPRT";
  }
  return "?";
}

const char* family_name(BrickFamily f) {
  switch (f) {
    case BrickFamily::PTBT: return "PTBT";
    case BrickFamily::HTBT: return "HTBT";
    case BrickFamily::ETBT: return "ETBT";
  }
  return "?";
}

}  // namespace

Json to_json(const SplitType& t) { return blocks_json(t.blocks()); }

SplitType type_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("type JSON must be a list of [degree, multiplicity] pairs");
  BlockSequence blocks;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError("type JSON must be a list of [degree, multiplicity] pairs");
    }
    const int d = pair[0].get<int>();
    const int m = pair[1].get<int>();
    if (d < 1 || m < 1) throw ParseError("block degree and multiplicity must be positive");
    blocks.emplace_back(d, m);
  }
  return SplitType::from_blocks(blocks);
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Rational& q) { return Json::array({integer_json(numerator_of(q)), integer_json(denominator_of(q))}); }

Json to_json(const SymExpr& e) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : e.terms) {
    terms.push_back({{"partition", to_json(index)},
                     {"num", integer_json(numerator_of(coeff))},
                     {"den", integer_json(denominator_of(coeff))}});
  }
  return {{"basis", basis_name(e.basis)}, {"terms", terms}};
}

Json to_json(const PolyExpr& e) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : e.terms) {
    terms.push_back({{"type", to_json(index)},
                     {"num", integer_json(numerator_of(coeff))},
                     {"den", integer_json(denominator_of(coeff))}});
  }
  return {{"basis", basis_name(e.basis)}, {"terms", terms}};
}

Json to_json(const PolyMatrix& m) {
  Json order = Json::array();
  for (const SplitType& t : m.labels()) order.push_back(to_json(t));
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    for (Eigen::Index j = 0; j < m.size(); ++j) entries.push_back(to_json(m.entries()(i, j)));
  }
  return {{"weight", m.weight()}, {"order", order}, {"entries", entries}};
}

Json to_json(const ClassicalMatrix& m) {
  Json order = Json::array();
  for (const Partition& p : m.labels()) order.push_back(to_json(p));
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    for (Eigen::Index j = 0; j < m.size(); ++j) entries.push_back(to_json(m.entries()(i, j)));
  }
  return {{"weight", m.weight()}, {"order", order}, {"entries", entries}};
}

Json to_json(const TensorTableau& t) {
  Json steps = Json::array();
  for (const TableauStep& s : t.steps) {
    Json step = {{"sign", s.sign}};
    if (t.family == TableauFamily::TRHT) {
      step["position"] = s.position;
    } else {
      step["partition"] = to_json(s.associated);
    }
    steps.push_back(step);
  }
  Json labels = Json::object();
  for (const auto& [degree, rows] : t.cell_labels()) labels[std::to_string(degree)] = rows;
  Json out = {{"family", family_name(t.family)},
              {"shape", to_json(t.shape)},
              {"inner", to_json(t.inner)},
              {"content", blocks_json(t.content)},
              {"chain", chain_json(t.chain)},
              {"steps", steps},
              {"labels", labels},
              {"weight", to_json(t.weight)}};
  if (t.family == TableauFamily::dual_TPRT) {
    out["sign_plus"] = t.sign;
    out["sign_minus"] = t.sign_minus;
  } else {
    out["sign"] = t.sign;
  }
  return out;
}

Json to_json(const ConstantRowTableau& t) {
  Json rows = Json::object();
  for (const auto& [degree, list] : t.rows()) {
    Json component = Json::array();
    for (const auto& [length, label] : list) component.push_back({{"length", length}, {"label", label}});
    rows[std::to_string(degree)] = component;
  }
  Json out = {{"family", t.family == ConstantRowFamily::ICRPT ? "ICRPT" : "ICRHT"},
              {"shape", to_json(t.shape)},
              {"inner", to_json(t.inner)},
              {"content", blocks_json(t.content)}};
  if (t.family == ConstantRowFamily::ICRPT) {
    out["divisors"] = t.divisors;
  } else {
    Json types = Json::array();
    for (const SplitType& rho : t.types) types.push_back(to_json(rho));
    out["types"] = types;
  }
  out["rows"] = rows;
  out["weight"] = to_json(t.weight);
  out["sign_plus"] = t.sign_plus;
  out["sign_minus"] = t.sign_minus;
  return out;
}

Json to_json(const TensorBrickTabloid& t) {
  Json components = Json::object();
  for (const auto& [degree, filling] : t.components) {
    Json rows = Json::array();
    for (const BrickRow& row : filling) {
      Json bricks = Json::array();
      for (const auto& [label, length] : row) bricks.push_back({label, length});
      rows.push_back(bricks);
    }
    components[std::to_string(degree)] = rows;
  }
  Json out = {{"family", family_name(t.family)},
              {"shape", to_json(t.shape)},
              {"inner", to_json(t.inner)},
              {"content", blocks_json(t.content)}};
  if (t.family == BrickFamily::PTBT) {
    out["divisors"] = t.divisors;
  } else {
    Json parts = Json::array();
    for (const Partition& p : t.partitions) parts.push_back(to_json(p));
    out["partitions"] = parts;
  }
  out["components"] = components;
  out["weight"] = to_json(t.weight);
  out["sign"] = t.sign;
  return out;
}

std::string to_csv(const PolyMatrix& m) { return grid_csv(m, type_label); }
std::string to_csv(const ClassicalMatrix& m) { return grid_csv(m, partition_label); }
std::string to_latex(const PolyMatrix& m) { return grid_latex(m, to_latex_label); }
std::string to_latex(const ClassicalMatrix& m) {
  return grid_latex(m, [](const Partition& p) { return to_string(p); });
}
std::string to_text(const PolyMatrix& m) { return grid_text(m, type_label); }
std::string to_text(const ClassicalMatrix& m) { return grid_text(m, partition_label); }

std::string to_text(const PolyExpr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  const std::string symbol = basis_symbol(e.basis);
  bool first = true;
  for (const auto& [index, coeff] : e.terms) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += symbol + "[" + to_string(index) + "]";
    first = false;
  }
  return out;
}

std::vector<PolyExpr> parse_mixed_expression(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<PolyExpr> groups;
  bool first = true;
  skip();
  if (pos == text.size()) fail("empty expression");
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Rational coeff(1);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      try {
        coeff = parse_rational(text.substr(start, pos - start));
      } catch (const std::invalid_argument& err) {
        fail(err.what());
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    const std::size_t sym_start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '+' && pos + 1 < text.size() && text[pos + 1] == '[') ++pos;
    const std::string symbol(text.substr(sym_start, pos - sym_start));
    if (symbol.empty()) fail("expected a basis symbol");
    PolyBasis basis{};
    try {
      basis = parse_poly_basis(symbol);
    } catch (const ParseError&) {
      fail("unknown basis symbol '" + symbol + "'");
    }
    if (pos == text.size() || text[pos] != '[') fail("expected '['");
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) fail("missing ']'");
    const SplitType index = parse_type(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const PolyExpr& g) { return g.basis == basis; });
    if (it == groups.end()) {
      groups.emplace_back(basis);
      it = groups.end() - 1;
    }
    it->add(index, coeff * sign);
    first = false;
  }
  return groups;
}

PolyExpr parse_expression(std::string_view text) {
  std::vector<PolyExpr> groups = parse_mixed_expression(text);
  if (groups.size() != 1) throw ParseError("expression mixes several bases: '" + std::string(text) + "'");
  return groups.front();
}

std::string render_ascii(const std::map<int, std::vector<std::vector<int>>>& components) {
  std::size_t width = 1;
  for (const auto& [degree, rows] : components) {
    for (const auto& row : rows) {
      for (int label : row) width = std::max(width, std::to_string(label).size());
    }
  }
  std::ostringstream out;
  for (auto it = components.rbegin(); it != components.rend(); ++it) {
    out << "degree " << it->first << ":\n";
    for (const auto& row : it->second) {
      out << " ";
      for (int label : row) {
        const std::string cell = label == 0 ? "." : std::to_string(label);
        out << " " << std::string(width - cell.size(), ' ') << cell;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<SplitType> read_order_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read order file '" + path + "'");
  std::vector<SplitType> order;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    order.push_back(parse_type(line));
  }
  return order;
}

}  // namespace polysym
