#include "polysym/sym_kernel.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "polysym/bricks.hpp"
#include "polysym/errors.hpp"
#include "polysym/shapes.hpp"

namespace polysym {

std::string basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::h: return "h";
    case SymBasis::e: return "e";
    case SymBasis::p: return "p";
    case SymBasis::s: return "s";
  }
  return "?";
}

SymBasis parse_sym_basis(const std::string& name) {
  for (SymBasis b : kSymBases) {
    if (basis_name(b) == name) return b;
  }
  throw ParseError("unknown classical basis '" + name + "'");
}

SymExpr SymExpr::single(SymBasis b, const Partition& index, const Rational& coeff) {
  SymExpr out(b);
  out.add(index, coeff);
  return out;
}

void SymExpr::add(const Partition& index, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Rational SymExpr::coefficient(const Partition& index) const {
  const auto it = terms.find(index);
  return it == terms.end() ? Rational(0) : it->second;
}

std::optional<int> SymExpr::degree() const {
  std::optional<int> d;
  for (const auto& [index, coeff] : terms) {
    if (d && *d != index.area()) return std::nullopt;
    d = index.area();
  }
  return d;
}

namespace {

// Calls visit(ν) for each ν with λ/ν a horizontal strip of size c.
template <typename Visit>
void horizontal_strips_below(const Partition& lambda, int c, Visit&& visit) {
  std::vector<int> nu(static_cast<std::size_t>(lambda.length()));
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == lambda.length()) {
      if (remaining == 0) visit(Partition::from_unsorted(nu));
      return;
    }
    const int hi = lambda.at(row);
    const int lo = lambda.at(row + 1);
    for (int v = hi; v >= lo; --v) {
      if (hi - v > remaining) break;
      nu[static_cast<std::size_t>(row)] = v;
      self(self, row + 1, remaining - (hi - v));
    }
  };
  rec(rec, 0, c);
}

std::vector<BrickStock> classical_stock(const Partition& mu, const std::vector<int>& alpha, SymBasis family) {
  std::vector<BrickStock> stock;
  for (int part : mu.parts()) stock.push_back({0, part, 1});
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 1) throw std::invalid_argument("composition entries must be positive");
    const int label = static_cast<int>(i) + 1;
    if (family == SymBasis::p) {
      stock.push_back({label, alpha[i], 1});
    } else {
      stock.push_back({label, 1, alpha[i]});
    }
  }
  return stock;
}

RowRule classical_rule(SymBasis family) {
  return family == SymBasis::h ? RowRule::weakly_increasing : RowRule::distinct_labels;
}

// Coefficient of m_λ in f_μ.
Integer monomial_coefficient(SymBasis f, const Partition& mu, const Partition& lambda) {
  switch (f) {
    case SymBasis::m: return mu == lambda ? 1 : 0;
    case SymBasis::s: return kostka(mu, lambda.parts());
    case SymBasis::h:
    case SymBasis::e:
    case SymBasis::p:
      return count_brick_fillings(lambda, classical_stock(Partition(), mu.parts(), f), classical_rule(f));
  }
  return 0;
}

// M(f,m) at degree n, memoized.
const ClassicalMatrix& monomial_matrix(SymBasis f, int n) {
  static std::mutex mutex;
  static std::map<std::pair<SymBasis, int>, ClassicalMatrix> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(f, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::vector<Partition> labels = enumerate_partitions(n);
  const auto size = static_cast<Eigen::Index>(labels.size());
  DenseMatrix<Rational> entries = DenseMatrix<Rational>::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i < size; ++i) {
      entries(i, j) = Rational(monomial_coefficient(f, labels[static_cast<std::size_t>(j)],
                                                    labels[static_cast<std::size_t>(i)]));
    }
  }
  return cache.emplace(key, ClassicalMatrix(n, labels, std::move(entries))).first->second;
}

std::map<int, SymExpr> split_by_degree(const SymExpr& expr) {
  std::map<int, SymExpr> parts;
  for (const auto& [index, coeff] : expr.terms) {
    auto [it, inserted] = parts.try_emplace(index.area(), SymExpr(expr.basis));
    it->second.add(index, coeff);
  }
  return parts;
}

}  // namespace

Integer kostka(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
    total += c;
  }
  if (total != shape.area()) return 0;
  std::map<std::pair<Partition, std::size_t>, Integer> memo;
  auto rec = [&](auto&& self, const Partition& lambda, std::size_t used) -> Integer {
    if (used == 0) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer sum = 0;
    horizontal_strips_below(lambda, content[used - 1], [&](const Partition& nu) { sum += self(self, nu, used - 1); });
    memo.emplace(key, sum);
    return sum;
  };
  return rec(rec, shape, content.size());
}

SymExpr to_monomial(const SymExpr& expr, int n) {
  const ClassicalMatrix& mono = monomial_matrix(expr.basis, n);
  SymExpr out(SymBasis::m);
  for (const auto& [index, coeff] : expr.terms) {
    if (index.area() != n) {
      throw DomainError("to_monomial: term " + to_string(index) + " is not of degree " + std::to_string(n));
    }
    const Eigen::Index j = mono.index_of(index);
    for (Eigen::Index i = 0; i < mono.size(); ++i) {
      const Rational& entry = mono.entries()(i, j);
      if (entry != 0) out.add(mono.labels()[static_cast<std::size_t>(i)], coeff * entry);
    }
  }
  return out;
}

SymExpr multiply_m_by(const Partition& mu, const std::vector<int>& alpha, SymBasis family) {
  if (family != SymBasis::p && family != SymBasis::h && family != SymBasis::e) {
    throw std::invalid_argument("multiply_m_by: family must be p, h or e");
  }
  const std::vector<BrickStock> stock = classical_stock(mu, alpha, family);
  int n = mu.area();
  for (int a : alpha) n += a;
  SymExpr out(SymBasis::m);
  for (const Partition& nu : enumerate_partitions(n)) {
    out.add(nu, Rational(count_brick_fillings(nu, stock, classical_rule(family))));
  }
  return out;
}

SymExpr mn_multiply(const SymExpr& schur_expr, int k) {
  if (schur_expr.basis != SymBasis::s) throw std::invalid_argument("mn_multiply expects a Schur expansion");
  SymExpr out(SymBasis::s);
  for (const auto& [mu, coeff] : schur_expr.terms) {
    for (const RibbonStep& step : add_ribbons(mu, k)) out.add(step.result, coeff * step.sign);
  }
  return out;
}

SymExpr pleth_pr(const SymExpr& expr, int r) {
  if (r < 1) throw std::invalid_argument("plethysm exponent must be positive");
  const SymExpr in_p = change_basis(expr, SymBasis::p);
  SymExpr out(SymBasis::p);
  for (const auto& [index, coeff] : in_p.terms) out.add(partition_scale(index, r), coeff);
  return out;
}

SymExpr omega(const SymExpr& expr) {
  SymExpr out(expr.basis);
  switch (expr.basis) {
    case SymBasis::h:
    case SymBasis::e:
      out.basis = expr.basis == SymBasis::h ? SymBasis::e : SymBasis::h;
      out.terms = expr.terms;
      return out;
    case SymBasis::p:
      for (const auto& [index, coeff] : expr.terms) {
        out.add(index, (index.area() - index.length()) % 2 == 0 ? coeff : Rational(-coeff));
      }
      return out;
    case SymBasis::s:
      for (const auto& [index, coeff] : expr.terms) out.add(index.conjugate(), coeff);
      return out;
    case SymBasis::m:
      return change_basis(omega(change_basis(expr, SymBasis::p)), SymBasis::m);
  }
  return out;
}

ClassicalMatrix classical_transition(SymBasis f, SymBasis g, int n) {
  static std::mutex mutex;
  static std::map<std::tuple<SymBasis, SymBasis, int>, ClassicalMatrix> cache;
  const auto key = std::make_tuple(f, g, n);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const ClassicalMatrix& a = monomial_matrix(f, n);
  ClassicalMatrix result;
  if (g == SymBasis::m) {
    result = a;
  } else {
    const ClassicalMatrix& b = monomial_matrix(g, n);
    result = ClassicalMatrix(n, a.labels(), solve_exact<Rational>(b.entries(), a.entries()));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

SymExpr change_basis(const SymExpr& expr, SymBasis target) {
  if (expr.basis == target) return expr;
  SymExpr out(target);
  for (const auto& [n, component] : split_by_degree(expr)) {
    const ClassicalMatrix m = classical_transition(expr.basis, target, n);
    for (const auto& [index, coeff] : component.terms) {
      const Eigen::Index j = m.index_of(index);
      for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Rational& entry = m.entries()(i, j);
        if (entry != 0) out.add(m.labels()[static_cast<std::size_t>(i)], coeff * entry);
      }
    }
  }
  return out;
}

SymExpr multiply(const SymExpr& a, const SymExpr& b) {
  const bool direct = a.basis == b.basis && (a.basis == SymBasis::p || a.basis == SymBasis::h || a.basis == SymBasis::e);
  const SymExpr left = direct ? a : change_basis(a, SymBasis::p);
  const SymExpr right = direct ? b : change_basis(b, SymBasis::p);
  SymExpr product(left.basis);
  for (const auto& [i, ci] : left.terms) {
    for (const auto& [j, cj] : right.terms) product.add(partition_union(i, j), ci * cj);
  }
  return change_basis(product, a.basis);
}

}  // namespace polysym
