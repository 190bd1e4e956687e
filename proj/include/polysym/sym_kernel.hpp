#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polysym/matrix.hpp"
#include "polysym/partition.hpp"
#include "polysym/rational.hpp"

namespace polysym {

enum class SymBasis { m, h, e, p, s };

std::string basis_name(SymBasis b);
/// Inverse of basis_name; throws ParseError.
SymBasis parse_sym_basis(const std::string& name);
inline constexpr SymBasis kSymBases[] = {SymBasis::m, SymBasis::h, SymBasis::e, SymBasis::p, SymBasis::s};

/// A sparse combination of one classical basis. Zero coefficients are never stored.
struct SymExpr {
  SymBasis basis = SymBasis::m;
  std::map<Partition, Rational> terms;

  SymExpr() = default;
  explicit SymExpr(SymBasis b) : basis(b) {}
  static SymExpr single(SymBasis b, const Partition& index, const Rational& coeff = Rational(1));

  void add(const Partition& index, const Rational& coeff);
  Rational coefficient(const Partition& index) const;
  /// The common degree of all terms, or nullopt when mixed or empty.
  std::optional<int> degree() const;

  friend bool operator==(const SymExpr&, const SymExpr&) = default;
};

/// Number of semistandard tableaux of the given shape and content.
Integer kostka(const Partition& shape, const std::vector<int>& content);

/// m-expansion of a homogeneous expression of degree n. Throws DomainError on
/// mixed degree.
SymExpr to_monomial(const SymExpr& expr, int n);

/// m_μ · f_α for f ∈ {p, h, e}, counted by brick tabloids.
SymExpr multiply_m_by(const Partition& mu, const std::vector<int>& alpha, SymBasis family);

/// expr · p_k in the Schur basis via ribbon additions.
SymExpr mn_multiply(const SymExpr& schur_expr, int k);

/// expr[p_r] expressed in the power-sum basis.
SymExpr pleth_pr(const SymExpr& expr, int r);

SymExpr omega(const SymExpr& expr);

/// M(f,g) at degree n: f_μ = Σ_λ M_{λμ} g_λ. Labels follow enumerate_partitions.
ClassicalMatrix classical_transition(SymBasis f, SymBasis g, int n);

/// Rewrites expr in the target basis (per homogeneous component).
SymExpr change_basis(const SymExpr& expr, SymBasis target);

/// Product, returned in the basis of `a`. p, h and e multiply by index
/// concatenation; other bases route through p.
SymExpr multiply(const SymExpr& a, const SymExpr& b);

}  // namespace polysym
