#include "polysym/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polysym/errors.hpp"
#include "polysym/notation.hpp"

namespace polysym {

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const VarPower& v : m) w += v.degree * v.exponent;
  return w;
}

namespace {

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && std::tie(a[i].degree, a[i].index) < std::tie(b[j].degree, b[j].index))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || std::tie(b[j].degree, b[j].index) < std::tie(a[i].degree, a[i].index)) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].degree, a[i].index, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

// Per degree: exponents sorted decreasing on indices 1, 2, ...
Monomial canonical_form(const Monomial& m) {
  std::map<int, std::vector<int>> by_degree;
  for (const VarPower& v : m) by_degree[v.degree].push_back(v.exponent);
  Monomial out;
  for (auto& [degree, exps] : by_degree) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    for (std::size_t i = 0; i < exps.size(); ++i) out.push_back({degree, static_cast<int>(i) + 1, exps[i]});
  }
  return out;
}

void check_width(int cap, int width) {
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  if (width < cap) throw std::invalid_argument("variable width must be at least the degree cap");
}

// ---- classical functions in the variables x_{d,1..N} ----

TruncatedPoly power_sum(int d, int k, int cap, int width) {
  TruncatedPoly out(cap, width);
  for (int i = 1; i <= width; ++i) out.add_term({{d, i, k}}, Rational(1));
  return out;
}

TruncatedPoly monomial_symmetric(int d, const Partition& lambda, int cap, int width) {
  TruncatedPoly out(cap, width);
  if (lambda.length() > width) return out;
  std::vector<int> exps(static_cast<std::size_t>(width), 0);
  for (int i = 0; i < lambda.length(); ++i) exps[static_cast<std::size_t>(width - 1 - i)] = lambda.at(i);
  do {
    Monomial m;
    for (int i = 0; i < width; ++i) {
      if (exps[static_cast<std::size_t>(i)] > 0) m.push_back({d, i + 1, exps[static_cast<std::size_t>(i)]});
    }
    out.add_term(m, Rational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

TruncatedPoly complete_homogeneous(int d, int k, int cap, int width, bool square_free) {
  TruncatedPoly out(cap, width);
  Monomial current;
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (remaining == 0) {
      out.add_term(current, Rational(1));
      return;
    }
    if (index > width) return;
    const int max_e = square_free ? std::min(1, remaining) : remaining;
    for (int e = max_e; e >= 0; --e) {
      if (e > 0) current.push_back({d, index, e});
      self(self, index + 1, remaining - e);
      if (e > 0) current.pop_back();
    }
  };
  rec(rec, 1, k);
  return out;
}

TruncatedPoly schur_polynomial(int d, const Partition& lambda, int cap, int width) {
  TruncatedPoly out(cap, width);
  // s_λ(x_1..x_N) as a sum over chains of horizontal strips; entry i fills λ^{(i)}/λ^{(i−1)}.
  Monomial current;
  auto rec = [&](auto&& self, const Partition& shape, int var) -> void {
    if (shape.empty()) {
      Monomial m = current;
      std::sort(m.begin(), m.end());
      out.add_term(m, Rational(1));
      return;
    }
    if (var == 0 || shape.length() > var) return;
    std::vector<int> nu(static_cast<std::size_t>(shape.length()));
    auto strips = [&](auto&& strip, int row) -> void {
      if (row == shape.length()) {
        const Partition below = Partition::from_unsorted(nu);
        const int removed = shape.area() - below.area();
        if (removed > 0) current.push_back({d, var, removed});
        self(self, below, var - 1);
        if (removed > 0) current.pop_back();
        return;
      }
      for (int v = shape.at(row); v >= shape.at(row + 1); --v) {
        nu[static_cast<std::size_t>(row)] = v;
        strip(strip, row + 1);
      }
    };
    strips(strips, 0);
  };
  rec(rec, lambda, width);
  return out;
}

TruncatedPoly classical_in_degree(SymBasis f, int d, const Partition& lambda, int cap, int width) {
  if (d * lambda.area() > cap) return TruncatedPoly(cap, width);
  switch (f) {
    case SymBasis::m: return monomial_symmetric(d, lambda, cap, width);
    case SymBasis::s: return schur_polynomial(d, lambda, cap, width);
    default: break;
  }
  TruncatedPoly out = TruncatedPoly::constant(cap, width, Rational(1));
  for (int part : lambda.parts()) {
    if (f == SymBasis::p) {
      out = out * power_sum(d, part, cap, width);
    } else {
      out = out * complete_homogeneous(d, part, cap, width, f == SymBasis::e);
    }
  }
  return out;
}

// H_d, E⁺_d or E_d over all variables of degree ≤ d.
TruncatedPoly family_generator(PolyBasis family, int d, int cap, int width) {
  TruncatedPoly out(cap, width);
  if (d > cap) return out;
  if (family == PolyBasis::P) {
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      for (int j = 1; j <= width; ++j) out.add_term({{k, j, d / k}}, Rational(k));
    }
    return out;
  }
  const bool square_free = family != PolyBasis::H;
  const bool signed_terms = family == PolyBasis::E;
  std::vector<std::pair<int, int>> vars;
  for (int k = 1; k <= d; ++k) {
    for (int j = 1; j <= width; ++j) vars.emplace_back(k, j);
  }
  Monomial current;
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      const bool odd = current.size() % 2 == 1;
      out.add_term(current, Rational(signed_terms && odd ? -1 : 1));
      return;
    }
    if (idx == vars.size()) return;
    const auto [k, j] = vars[idx];
    int max_e = remaining / k;
    if (square_free) max_e = std::min(max_e, 1);
    for (int e = max_e; e >= 0; --e) {
      if (e > 0) current.push_back({k, j, e});
      self(self, idx + 1, remaining - e * k);
      if (e > 0) current.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

TruncatedPoly::TruncatedPoly(int cap, int width) : cap_(cap), width_(width) {
  if (cap < 0 || width < 0) throw std::invalid_argument("cap and width must be nonnegative");
}

TruncatedPoly TruncatedPoly::constant(int cap, int width, const Rational& c) {
  TruncatedPoly out(cap, width);
  out.add_term({}, c);
  return out;
}

Rational TruncatedPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || monomial_weight(m) > cap_) return;
  for (const VarPower& v : m) {
    if (v.degree < 1 || v.index < 1 || v.index > width_ || v.exponent < 1) {
      throw std::invalid_argument("monomial variable outside the truncation window");
    }
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& other) const {
  TruncatedPoly out(std::min(cap_, other.cap_), std::min(width_, other.width_));
  for (const auto& [a, ca] : terms_) {
    const int wa = monomial_weight(a);
    for (const auto& [b, cb] : other.terms_) {
      if (wa + monomial_weight(b) > out.cap_) continue;
      out.add_term(multiply_monomials(a, b), ca * cb);
    }
  }
  return out;
}

TruncatedPoly TruncatedPoly::scaled(const Rational& c) const {
  TruncatedPoly out(cap_, width_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

TruncatedPoly TruncatedPoly::substitute_power(int r) const {
  if (r < 1) throw std::invalid_argument("substitution exponent must be positive");
  TruncatedPoly out(cap_, width_);
  for (const auto& [m, c] : terms_) {
    Monomial powered = m;
    for (VarPower& v : powered) v.exponent *= r;
    out.add_term(powered, c);
  }
  return out;
}

TruncatedPoly generate_block(PolyBasis family, const Block& block, int cap, int width) {
  check_width(cap, width);
  if (!is_family(family)) throw std::invalid_argument("generate_block expects one of P, H, E+, E");
  if (block.weight() > cap) return TruncatedPoly(cap, width);
  return family_generator(family, block.degree, cap, width).substitute_power(block.multiplicity);
}

TruncatedPoly generate(PolyBasis basis, const SplitType& index, int cap, int width) {
  check_width(cap, width);
  TruncatedPoly out = TruncatedPoly::constant(cap, width, Rational(1));
  if (index.weight() > cap) return TruncatedPoly(cap, width);
  if (is_pure(basis)) {
    for (const auto& [degree, part] : index.restrictions()) {
      out = out * classical_in_degree(classical_factor(basis), degree, part, cap, width);
    }
    return out;
  }
  for (const Block& b : index.blocks()) out = out * generate_block(basis, b, cap, width);
  return out;
}

namespace {

// Number of distinct monomials obtained by permuting indices within each degree.
Integer orbit_size(const Monomial& m, int width) {
  std::map<int, std::map<int, int>> exponent_counts;
  for (const VarPower& v : m) ++exponent_counts[v.degree][v.exponent];
  Integer total = 1;
  for (const auto& [degree, counts] : exponent_counts) {
    int used = 0;
    Integer denominator = 1;
    for (const auto& [exponent, k] : counts) {
      used += k;
      denominator *= factorial(k);
    }
    total *= factorial(width) / factorial(width - used) / denominator;
  }
  return total;
}

}  // namespace

PolyExpr extract_m_tensor(const TruncatedPoly& poly, int n) {
  if (poly.width() < n) throw std::invalid_argument("variable width is smaller than the extraction weight");
  PolyExpr out(PolyBasis::m_tensor);
  std::vector<const Monomial*> of_weight;
  for (const auto& [m, c] : poly.terms()) {
    if (monomial_weight(m) == n) of_weight.push_back(&m);
  }
  constexpr std::size_t kSampleLimit = 4000;
  std::mt19937 rng(0x5eed);
  const std::size_t checks = std::min(of_weight.size(), kSampleLimit);
  for (std::size_t s = 0; s < checks; ++s) {
    const Monomial& m = of_weight.size() <= kSampleLimit
                            ? *of_weight[s]
                            : *of_weight[std::uniform_int_distribution<std::size_t>(0, of_weight.size() - 1)(rng)];
    if (poly.coefficient(m) != poly.coefficient(canonical_form(m))) {
      throw DomainError("polynomial is not symmetric within each degree");
    }
  }
  // Every permutation of a present monomial must be present as well.
  std::map<Monomial, Integer> orbit_counts;
  for (const Monomial* m : of_weight) orbit_counts[canonical_form(*m)] += 1;
  for (const auto& [canonical, count] : orbit_counts) {
    if (count != orbit_size(canonical, poly.width())) {
      throw DomainError("polynomial is not symmetric within each degree");
    }
  }
  for (const Monomial* m : of_weight) {
    if (canonical_form(*m) != *m) continue;
    std::map<int, std::vector<int>> parts;
    for (const VarPower& v : *m) parts[v.degree].push_back(v.exponent);
    std::map<int, Partition> restrictions;
    for (auto& [degree, list] : parts) restrictions.emplace(degree, Partition(std::move(list)));
    out.add(SplitType(restrictions), poly.coefficient(*m));
  }
  return out;
}

PolyMatrix oracle_transition(PolyBasis from, PolyBasis to, int n) {
  const std::vector<SplitType> labels = enumerate_types(n);
  const auto size = static_cast<Eigen::Index>(labels.size());
  auto monomial_matrix = [&](PolyBasis basis) {
    DenseMatrix<Rational> m = DenseMatrix<Rational>::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
      const PolyExpr col = extract_m_tensor(generate(basis, labels[static_cast<std::size_t>(j)], n, n), n);
      for (Eigen::Index i = 0; i < size; ++i) m(i, j) = col.coefficient(labels[static_cast<std::size_t>(i)]);
    }
    return m;
  };
  const DenseMatrix<Rational> a = monomial_matrix(from);
  if (to == PolyBasis::m_tensor) return PolyMatrix(n, labels, a);
  return PolyMatrix(n, labels, solve_exact<Rational>(monomial_matrix(to), a));
}

bool CrossCheckReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.matched(); });
}

int CrossCheckReport::matched_count() const {
  return static_cast<int>(std::count_if(families.begin(), families.end(), [](const FamilyCheck& f) { return f.matched(); }));
}

CrossCheckReport cross_check(int n) {
  CrossCheckReport report;
  report.weight = n;
  for (PolyBasis family : kFamilies) {
    for (PolyBasis target : {PolyBasis::s_tensor, PolyBasis::p_tensor, PolyBasis::m_tensor}) {
      FamilyCheck check{family, target, {}};
      const PolyMatrix rules = transition(family, target, n, Engine::rules);
      const PolyMatrix oracle = transition(family, target, n, Engine::oracle);
      for (const SplitType& col : rules.labels()) {
        for (const SplitType& row : rules.labels()) {
          const Rational& a = rules.at(row, col);
          const Rational& b = oracle.at(row, col);
          if (a != b) check.mismatches.push_back({row, col, a, b});
        }
      }
      report.families.push_back(std::move(check));
    }
  }
  return report;
}

std::string to_string(const CrossCheckReport& report) {
  std::ostringstream out;
  out << "weight " << report.weight << "\n";
  for (const FamilyCheck& f : report.families) {
    out << "  M(" << basis_name(f.family) << ", " << basis_name(f.target) << "): ";
    if (f.matched()) {
      out << "match\n";
      continue;
    }
    out << f.mismatches.size() << " mismatches\n";
    for (const Mismatch& m : f.mismatches) {
      out << "    row " << to_string(m.row) << ", column " << to_string(m.column) << ": rules "
          << to_string(m.rules_value) << ", oracle " << to_string(m.oracle_value) << "\n";
    }
  }
  out << report.matched_count() << "/" << report.families.size() << " families match\n";
  return out.str();
}

}  // namespace polysym
