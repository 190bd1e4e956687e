#include "polysym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polysym/errors.hpp"
#include "polysym/monomial_rules.hpp"
#include "polysym/notation.hpp"
#include "polysym/oracle.hpp"
#include "polysym/power_rules.hpp"
#include "polysym/schur_rules.hpp"
#include "polysym/serialize.hpp"
#include "polysym/shapes.hpp"

namespace polysym::cli {

namespace {

struct Options {
  std::vector<std::string> expressions;
  std::string basis;
  int weight = -1;
  std::string format = "text";
  std::string from;
  std::string to;
  std::string engine = "rules";
  std::string order_file;
  std::string out_path;
  std::string family;
  std::string shape;
  std::string inner;
  std::string content;
  int length = 0;
  int count = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sums the terms of a possibly mixed expression after converting each group.
PolyExpr expression_in(const std::string& text, PolyBasis target) {
  PolyExpr total(target);
  for (const PolyExpr& group : parse_mixed_expression(text)) total.add(convert(group, target));
  return total;
}

void check_weight(const PolyExpr& e, int weight, const std::string& text) {
  if (weight < 0 || e.terms.empty()) return;
  if (!e.weight() || *e.weight() != weight) {
    throw DomainError("expression '" + text + "' is not of weight " + std::to_string(weight));
  }
}

void print_expr(std::ostream& out, const PolyExpr& e, const std::string& format) {
  if (format == "json") {
    out << to_json(e).dump() << "\n";
  } else if (format == "text") {
    out << to_text(e) << "\n";
  } else {
    throw UsageError("expressions support --format text or json");
  }
}

template <typename Matrix>
void print_matrix(std::ostream& out, const Matrix& m, const std::string& format) {
  if (format == "json") {
    out << to_json(m).dump() << "\n";
  } else if (format == "csv") {
    out << to_csv(m);
  } else if (format == "latex") {
    out << to_latex(m);
  } else {
    out << to_text(m);
  }
}

bool is_classical_name(const std::string& name) {
  return name == "m" || name == "h" || name == "e" || name == "p" || name == "s";
}

int do_expand(const Options& opt, std::ostream& out) {
  const PolyBasis target = parse_poly_basis(opt.basis);
  const PolyExpr result = expression_in(opt.expressions.front(), target);
  check_weight(result, opt.weight, opt.expressions.front());
  print_expr(out, result, opt.format);
  return kSuccess;
}

int do_multiply(const Options& opt, std::ostream& out) {
  const PolyBasis target = parse_poly_basis(opt.basis);
  PolyExpr product = PolyExpr::single(PolyBasis::p_tensor, SplitType());
  for (const std::string& text : opt.expressions) {
    product = multiply_p_tensor({product, expression_in(text, PolyBasis::p_tensor)});
  }
  const PolyExpr result = convert(product, target);
  check_weight(result, opt.weight, "product");
  print_expr(out, result, opt.format);
  return kSuccess;
}

int do_matrix(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.weight < 0) throw UsageError("--weight is required");
  // Two single-letter names select the classical matrix; otherwise a letter
  // stands for its pure tensor basis.
  if (is_classical_name(opt.from) && is_classical_name(opt.to)) {
    print_matrix(out, classical_transition(parse_sym_basis(opt.from), parse_sym_basis(opt.to), opt.weight),
                 opt.format);
    return kSuccess;
  }
  const PolyBasis from = parse_poly_basis(opt.from);
  const PolyBasis to = parse_poly_basis(opt.to);
  if (opt.engine != "rules" && opt.engine != "oracle" && opt.engine != "both") {
    throw UsageError("--engine must be rules, oracle or both");
  }
  PolyMatrix m = transition(from, to, opt.weight, opt.engine == "oracle" ? Engine::oracle : Engine::rules);
  int status = kSuccess;
  if (opt.engine == "both" && transition(from, to, opt.weight, Engine::oracle) != m) {
    err << "engines disagree on M(" << opt.from << ", " << opt.to << ") at weight " << opt.weight << "\n";
    status = kMismatch;
  }
  if (!opt.order_file.empty()) m = m.reordered(read_order_file(opt.order_file));
  print_matrix(out, m, opt.format);
  return status;
}

template <typename Items, typename Coefficient>
void print_objects(std::ostream& out, const Items& items, const std::string& format, Coefficient coefficient) {
  for (const auto& item : items) out << to_json(item).dump() << "\n";
  if (format == "text") out << items.size() << " objects, coefficient " << to_string(coefficient) << "\n";
}

int do_enumerate(const Options& opt, std::ostream& out) {
  const std::string& f = opt.family;
  if (f == "ribbons" || f == "polyribbons" || f == "dual-polyribbons") {
    if (opt.length < 1) throw UsageError("--length must be positive");
    const Partition mu = parse_partition(opt.inner);
    std::vector<SignedPartition> shapes;
    if (f == "ribbons") {
      for (const RibbonStep& s : add_ribbons(mu, opt.length)) shapes.push_back({s.result, s.sign});
    } else {
      if (opt.count < 0) throw UsageError("--count must be nonnegative");
      shapes = add_polyribbons(mu, opt.length, opt.count, f == "dual-polyribbons");
    }
    for (const SignedPartition& sp : shapes) {
      if (opt.format == "json") {
        out << Json{{"shape", to_json(sp.shape)}, {"sign", sp.sign}}.dump() << "\n";
      } else {
        out << (sp.sign > 0 ? "+ " : "- ") << to_string(sp.shape) << "\n";
      }
    }
    return kSuccess;
  }

  const SplitType tau = parse_type(opt.shape);
  const SplitType sigma = parse_type(opt.inner);
  const BlockSequence delta = parse_block_sequence(opt.content);
  if (tau.weight() != sigma.weight() + sequence_weight(delta)) {
    throw DomainError("weight mismatch: |shape| = " + std::to_string(tau.weight()) + " but |inner| + |content| = " +
                      std::to_string(sigma.weight() + sequence_weight(delta)));
  }
  if (f == "TRHT" || f == "TPRT" || f == "dualTPRT") {
    const auto items = f == "TRHT" ? enumerate_TRHT(tau, sigma, delta) : enumerate_TPRT(tau, sigma, delta, f == "dualTPRT");
    Rational total(0);
    Rational total_minus(0);
    for (const TensorTableau& t : items) {
      total += t.weight * t.sign;
      total_minus += t.weight * t.sign_minus;
      if (opt.format == "json") {
        out << to_json(t).dump() << "\n";
      } else {
        out << "sign " << t.sign;
        if (f == "dualTPRT") out << " (signed variant " << t.sign_minus << ")";
        out << ", weight " << to_string(t.weight) << "\n" << render_ascii(t.cell_labels()) << "\n";
      }
    }
    if (opt.format != "json") {
      out << items.size() << " objects, coefficient " << to_string(total);
      if (f == "dualTPRT") out << " (signed variant " << to_string(total_minus) << ")";
      out << "\n";
    }
    return kSuccess;
  }
  if (f == "ICRPT" || f == "ICRHT") {
    const auto items = f == "ICRPT" ? enumerate_ICRPT(tau, sigma, delta) : enumerate_ICRHT(tau, sigma, delta);
    Rational h(0), plus(0), minus(0);
    for (const ConstantRowTableau& t : items) {
      h += t.weight;
      plus += t.weight * t.sign_plus;
      minus += t.weight * t.sign_minus;
    }
    for (const auto& t : items) out << to_json(t).dump() << "\n";
    if (opt.format != "json") {
      out << items.size() << " objects, coefficient " << to_string(h);
      if (f == "ICRHT") out << " (E+ " << to_string(plus) << ", E " << to_string(minus) << ")";
      out << "\n";
    }
    return kSuccess;
  }
  if (f == "PTBT" || f == "HTBT" || f == "ETBT") {
    const auto items = f == "PTBT" ? enumerate_PTBT(tau, sigma, delta)
                       : f == "HTBT" ? enumerate_HTBT(tau, sigma, delta)
                                     : enumerate_ETBT(tau, sigma, delta);
    Rational total(0), signed_total(0);
    for (const TensorBrickTabloid& t : items) {
      total += t.weight;
      signed_total += t.weight * t.sign;
    }
    for (const auto& t : items) out << to_json(t).dump() << "\n";
    if (opt.format != "json") {
      out << items.size() << " objects, coefficient " << to_string(total);
      if (f == "ETBT") out << " (E " << to_string(signed_total) << ")";
      out << "\n";
    }
    return kSuccess;
  }
  throw UsageError("unknown family '" + f + "'");
}

int do_check(const Options& opt, std::ostream& out) {
  const int weight = opt.weight < 0 ? 4 : opt.weight;
  const CrossCheckReport report = cross_check(weight);
  if (opt.format == "json") {
    Json families = Json::array();
    for (const FamilyCheck& f : report.families) {
      Json mismatches = Json::array();
      for (const Mismatch& m : f.mismatches) {
        mismatches.push_back({{"row", to_json(m.row)},
                              {"column", to_json(m.column)},
                              {"rules", to_json(m.rules_value)},
                              {"oracle", to_json(m.oracle_value)}});
      }
      families.push_back({{"from", basis_name(f.family)}, {"to", basis_name(f.target)}, {"mismatches", mismatches}});
    }
    out << Json{{"weight", weight}, {"passed", report.passed()}, {"families", families}}.dump() << "\n";
  } else {
    out << to_string(report);
  }
  return report.passed() ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polysymmetric function computations", "polysym"};
  app.require_subcommand(1);
  Options opt;

  auto* expand = app.add_subcommand("expand", "Rewrite an expression in another basis");
  expand->add_option("expression", opt.expressions, "e.g. \"P[2^3]\" or \"2 p[1^6] - H[2^1 1^2]\"")
      ->required()
      ->expected(1);
  expand->add_option("--basis", opt.basis, "Target basis")->required();
  expand->add_option("--weight", opt.weight, "Expected weight");
  expand->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  expand->add_option("--out", opt.out_path, "Write output to a file");

  auto* multiply_cmd = app.add_subcommand("multiply", "Multiply expressions");
  multiply_cmd->add_option("expressions", opt.expressions)->required()->expected(1, -1);
  multiply_cmd->add_option("--basis", opt.basis, "Target basis")->required();
  multiply_cmd->add_option("--weight", opt.weight, "Expected weight of the product");
  multiply_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  multiply_cmd->add_option("--out", opt.out_path);

  auto* matrix = app.add_subcommand("matrix", "Print a transition matrix M(from, to)");
  matrix->add_option("--from", opt.from)->required();
  matrix->add_option("--to", opt.to)->required();
  matrix->add_option("--weight", opt.weight)->required();
  matrix->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  matrix->add_option("--engine", opt.engine)->check(CLI::IsMember({"rules", "oracle", "both"}));
  matrix->add_option("--order-file", opt.order_file, "Label order, one type per line");
  matrix->add_option("--out", opt.out_path);

  auto* enumerate = app.add_subcommand("enumerate", "List tableaux, tabloids or ribbon insertions");
  enumerate->add_option("--family", opt.family,
                        "ribbons, polyribbons, dual-polyribbons, TRHT, TPRT, dualTPRT, ICRPT, ICRHT, PTBT, HTBT, ETBT")
      ->required();
  enumerate->add_option("--shape", opt.shape, "Outer type");
  enumerate->add_option("--inner", opt.inner, "Inner type (a partition for ribbon families)");
  enumerate->add_option("--content", opt.content, "Block sequence, e.g. 2^2,4,2^2");
  enumerate->add_option("--length", opt.length, "Ribbon length");
  enumerate->add_option("--count", opt.count, "Number of ribbons in a polyribbon");
  enumerate->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", opt.out_path);

  auto* check = app.add_subcommand("check", "Compare the combinatorial rules with the oracle");
  check->add_option("--weight", opt.weight, "Weight to check (default 4)");
  check->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", opt.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ostringstream buffer;
  int status = kSuccess;
  try {
    if (opt.weight < -1) throw UsageError("--weight must be nonnegative");
    if (*expand) {
      status = do_expand(opt, buffer);
    } else if (*multiply_cmd) {
      status = do_multiply(opt, buffer);
    } else if (*matrix) {
      status = do_matrix(opt, buffer, err);
    } else if (*enumerate) {
      status = do_enumerate(opt, buffer);
    } else {
      status = do_check(opt, buffer);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  if (opt.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return kUsageError;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace polysym::cli
