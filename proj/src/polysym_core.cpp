#include "polysym/polysym_core.hpp"

#include <stdexcept>

#include "polysym/errors.hpp"

namespace polysym {

std::string basis_name(PolyBasis b) {
  switch (b) {
    case PolyBasis::m_tensor: return "m-tensor";
    case PolyBasis::p_tensor: return "p-tensor";
    case PolyBasis::s_tensor: return "s-tensor";
    case PolyBasis::h_tensor: return "h-tensor";
    case PolyBasis::e_tensor: return "e-tensor";
    case PolyBasis::P: return "P";
    case PolyBasis::H: return "H";
    case PolyBasis::E_plus: return "E+";
    case PolyBasis::E: return "E";
  }
  return "?";
}

std::string basis_symbol(PolyBasis b) {
  if (is_pure(b)) return basis_name(classical_factor(b));
  return basis_name(b);
}

PolyBasis parse_poly_basis(const std::string& text) {
  for (PolyBasis b : kPolyBases) {
    if (basis_name(b) == text || basis_symbol(b) == text) return b;
  }
  throw ParseError("unknown polysymmetric basis '" + text + "'");
}

bool is_pure(PolyBasis b) {
  return b == PolyBasis::m_tensor || b == PolyBasis::p_tensor || b == PolyBasis::s_tensor ||
         b == PolyBasis::h_tensor || b == PolyBasis::e_tensor;
}

bool is_family(PolyBasis b) { return !is_pure(b); }

SymBasis classical_factor(PolyBasis b) {
  switch (b) {
    case PolyBasis::m_tensor: return SymBasis::m;
    case PolyBasis::p_tensor: return SymBasis::p;
    case PolyBasis::s_tensor: return SymBasis::s;
    case PolyBasis::h_tensor: return SymBasis::h;
    case PolyBasis::e_tensor: return SymBasis::e;
    default: break;
  }
  throw std::invalid_argument("basis " + basis_name(b) + " is not a pure tensor basis");
}

PolyBasis tensor_basis(SymBasis b) {
  switch (b) {
    case SymBasis::m: return PolyBasis::m_tensor;
    case SymBasis::p: return PolyBasis::p_tensor;
    case SymBasis::s: return PolyBasis::s_tensor;
    case SymBasis::h: return PolyBasis::h_tensor;
    case SymBasis::e: return PolyBasis::e_tensor;
  }
  return PolyBasis::m_tensor;
}

PolyExpr PolyExpr::single(PolyBasis b, const SplitType& index, const Rational& coeff) {
  PolyExpr out(b);
  out.add(index, coeff);
  return out;
}

void PolyExpr::add(const SplitType& index, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

void PolyExpr::add(const PolyExpr& other, const Rational& scale) {
  if (other.basis != basis) throw std::invalid_argument("cannot add expressions in different bases");
  for (const auto& [index, coeff] : other.terms) add(index, coeff * scale);
}

Rational PolyExpr::coefficient(const SplitType& index) const {
  const auto it = terms.find(index);
  return it == terms.end() ? Rational(0) : it->second;
}

std::optional<int> PolyExpr::weight() const {
  std::optional<int> w;
  for (const auto& [index, coeff] : terms) {
    if (w && *w != index.weight()) return std::nullopt;
    w = index.weight();
  }
  return w;
}

PolyExpr multiply_p_tensor(const std::vector<PolyExpr>& exprs) {
  PolyExpr product = PolyExpr::single(PolyBasis::p_tensor, SplitType());
  for (const PolyExpr& factor : exprs) {
    if (factor.basis != PolyBasis::p_tensor) throw std::invalid_argument("multiply_p_tensor expects p-tensor operands");
    PolyExpr next(PolyBasis::p_tensor);
    for (const auto& [a, ca] : product.terms) {
      for (const auto& [b, cb] : factor.terms) next.add(type_union(a, b), ca * cb);
    }
    product = std::move(next);
  }
  return product;
}

namespace {

std::map<int, int> area_profile(const SplitType& t) {
  std::map<int, int> profile;
  for (const auto& [degree, part] : t.restrictions()) profile.emplace(degree, part.area());
  return profile;
}

}  // namespace

PolyMatrix tensor_transition(SymBasis f, SymBasis g, int n) {
  const std::vector<SplitType> labels = enumerate_types(n);
  std::vector<std::map<int, int>> profiles;
  profiles.reserve(labels.size());
  for (const SplitType& t : labels) profiles.push_back(area_profile(t));
  std::map<int, ClassicalMatrix> classical;
  for (int a = 0; a <= n; ++a) classical.emplace(a, classical_transition(f, g, a));

  PolyMatrix out = PolyMatrix::zero(n, labels);
  const auto size = static_cast<Eigen::Index>(labels.size());
  for (Eigen::Index j = 0; j < size; ++j) {
    const SplitType& sigma = labels[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < size; ++i) {
      if (profiles[static_cast<std::size_t>(i)] != profiles[static_cast<std::size_t>(j)]) continue;
      const SplitType& tau = labels[static_cast<std::size_t>(i)];
      Rational entry(1);
      for (const auto& [degree, part] : sigma.restrictions()) {
        entry *= classical.at(part.area()).at(tau.restriction(degree), part);
        if (entry == 0) break;
      }
      out.entries()(i, j) = entry;
    }
  }
  return out;
}

PolyExpr expand_pure(const PolyExpr& expr, PolyBasis target) {
  const SymBasis f = classical_factor(expr.basis);
  const SymBasis g = classical_factor(target);
  if (f == g) return expr;
  PolyExpr out(target);
  for (const auto& [sigma, coeff] : expr.terms) {
    // Tensor product of the per-degree classical expansions.
    std::vector<std::pair<std::map<int, Partition>, Rational>> partial{{{}, coeff}};
    for (const auto& [degree, part] : sigma.restrictions()) {
      const SymExpr factor = change_basis(SymExpr::single(f, part), g);
      std::vector<std::pair<std::map<int, Partition>, Rational>> next;
      for (const auto& [restr, c] : partial) {
        for (const auto& [lambda, cl] : factor.terms) {
          auto extended = restr;
          extended.emplace(degree, lambda);
          next.emplace_back(std::move(extended), c * cl);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [restr, c] : partial) out.add(SplitType(restr), c);
  }
  return out;
}

PolyExpr matrix_column(const PolyMatrix& m, const SplitType& sigma, PolyBasis target) {
  PolyExpr out(target);
  const Eigen::Index j = m.index_of(sigma);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    out.add(m.labels()[static_cast<std::size_t>(i)], m.entries()(i, j));
  }
  return out;
}

PolyExpr apply_matrix(const PolyMatrix& m, const PolyExpr& expr, PolyBasis target) {
  PolyExpr out(target);
  for (const auto& [sigma, coeff] : expr.terms) out.add(matrix_column(m, sigma, target), coeff);
  return out;
}

}  // namespace polysym
