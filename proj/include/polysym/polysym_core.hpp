#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polysym/matrix.hpp"
#include "polysym/split_type.hpp"
#include "polysym/sym_kernel.hpp"

namespace polysym {

enum class PolyBasis { m_tensor, p_tensor, s_tensor, h_tensor, e_tensor, P, H, E_plus, E };

inline constexpr PolyBasis kPolyBases[] = {PolyBasis::m_tensor, PolyBasis::p_tensor, PolyBasis::s_tensor,
                                           PolyBasis::h_tensor, PolyBasis::e_tensor, PolyBasis::P,
                                           PolyBasis::H,        PolyBasis::E_plus,   PolyBasis::E};
inline constexpr PolyBasis kFamilies[] = {PolyBasis::P, PolyBasis::H, PolyBasis::E_plus, PolyBasis::E};

/// Command-line name: `m-tensor` … `e-tensor`, `P`, `H`, `E+`, `E`.
std::string basis_name(PolyBasis b);
/// Symbol used in expressions: `m`, `p`, `s`, `h`, `e`, `P`, `H`, `E+`, `E`.
std::string basis_symbol(PolyBasis b);
/// Accepts either the name or the symbol; throws ParseError.
PolyBasis parse_poly_basis(const std::string& text);

bool is_pure(PolyBasis b);
/// One of P, H, E⁺, E.
bool is_family(PolyBasis b);
/// The classical basis underlying a pure tensor basis.
SymBasis classical_factor(PolyBasis b);
PolyBasis tensor_basis(SymBasis b);

/// A sparse combination of one polysymmetric basis. Zero coefficients are never stored.
struct PolyExpr {
  PolyBasis basis = PolyBasis::m_tensor;
  std::map<SplitType, Rational> terms;

  PolyExpr() = default;
  explicit PolyExpr(PolyBasis b) : basis(b) {}
  static PolyExpr single(PolyBasis b, const SplitType& index, const Rational& coeff = Rational(1));

  void add(const SplitType& index, const Rational& coeff);
  void add(const PolyExpr& other, const Rational& scale = Rational(1));
  Rational coefficient(const SplitType& index) const;
  /// Common weight of all terms; nullopt when mixed or empty.
  std::optional<int> weight() const;

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;
};

/// Bilinear extension of p⊗_σ · p⊗_ρ = p⊗_{σ∪ρ}. Throws std::invalid_argument
/// when an operand is not in p⊗.
PolyExpr multiply_p_tensor(const std::vector<PolyExpr>& exprs);

/// Entry (τ,σ) is ∏_d M(f,g)_{τ|_d,σ|_d}.
PolyMatrix tensor_transition(SymBasis f, SymBasis g, int n);

/// Rewrites a pure tensor expression in another pure tensor basis term by
/// term, factoring each term per degree.
PolyExpr expand_pure(const PolyExpr& expr, PolyBasis target);

/// Column σ of a transition matrix as an expression in `target`.
PolyExpr matrix_column(const PolyMatrix& m, const SplitType& sigma, PolyBasis target);

/// Applies M(F,G) to an F-expansion, giving the G-expansion.
PolyExpr apply_matrix(const PolyMatrix& m, const PolyExpr& expr, PolyBasis target);

enum class Engine { rules, oracle };

/// M(from, to) at weight n. The rules engine composes registered matrices
/// along the shortest path; the oracle engine solves directly from monomial
/// expansions. Results are memoized.
PolyMatrix transition(PolyBasis from, PolyBasis to, int n, Engine engine = Engine::rules);

/// Exact change of basis for a homogeneous expression of weight n. Throws
/// DomainError when the expression is not homogeneous of weight n.
PolyExpr convert(const PolyExpr& expr, PolyBasis target, int n);
/// As above with n taken from the expression.
PolyExpr convert(const PolyExpr& expr, PolyBasis target);

/// Product of two homogeneous expressions, computed in p⊗ and returned in `target`.
PolyExpr multiply(const PolyExpr& a, const PolyExpr& b, PolyBasis target);

}  // namespace polysym
