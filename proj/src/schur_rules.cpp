#include "polysym/schur_rules.hpp"

#include <stdexcept>

#include "polysym/shapes.hpp"

namespace polysym {

namespace {

void require_family(PolyBasis family) {
  if (!is_family(family)) throw std::invalid_argument("expected one of the families P, H, E+, E");
}

void require_schur(const PolyExpr& expr) {
  if (expr.basis != PolyBasis::s_tensor) throw std::invalid_argument("expected an s-tensor expansion");
}

SplitType with_restriction(const SplitType& t, int degree, const Partition& part) {
  auto restrictions = t.restrictions();
  restrictions[degree] = part;
  return SplitType(restrictions);
}

// Adds one polyribbon per distinct part k of λ, each to component k.
void polyribbon_insertions(const SplitType& sigma, const Partition& lambda, int r, bool dual,
                           std::vector<BlockInsertion>& out) {
  std::vector<std::pair<int, int>> parts;  // (k, m_k(λ))
  for (int k : lambda.parts()) {
    if (parts.empty() || parts.back().first != k) parts.emplace_back(k, 0);
    ++parts.back().second;
  }
  const int length_sign = lambda.length() % 2 == 0 ? 1 : -1;
  auto rec = [&](auto&& self, std::size_t idx, const SplitType& current, int sign) -> void {
    if (idx == parts.size()) {
      BlockInsertion ins;
      ins.result = current;
      ins.step.associated = lambda;
      ins.step.sign = sign;
      ins.sign = sign;
      ins.sign_minus = dual ? sign * length_sign : sign;
      out.push_back(std::move(ins));
      return;
    }
    const auto [k, count] = parts[idx];
    for (const SignedPartition& sp : add_polyribbons(current.restriction(k), r, count, dual)) {
      self(self, idx + 1, with_restriction(current, k, sp.shape), sign * sp.sign);
    }
  };
  rec(rec, 0, sigma, 1);
}

int family_sign(PolyBasis family, const BlockInsertion& ins) {
  return family == PolyBasis::E ? ins.sign_minus : ins.sign;
}

PolyExpr times_block(const PolyExpr& expr, PolyBasis family, const Block& block) {
  require_schur(expr);
  PolyExpr out(PolyBasis::s_tensor);
  for (const auto& [sigma, coeff] : expr.terms) {
    for (const BlockInsertion& ins : block_insertions(sigma, family, block)) {
      out.add(ins.result, coeff * ins.weight * family_sign(family, ins));
    }
  }
  return out;
}

std::vector<TensorTableau> enumerate_chains(const SplitType& tau, const SplitType& sigma, const BlockSequence& delta,
                                            PolyBasis family, TableauFamily tag) {
  std::vector<TensorTableau> out;
  if (!tau.contains(sigma) || tau.weight() != sigma.weight() + sequence_weight(delta)) return out;
  TensorTableau current;
  current.family = tag;
  current.inner = sigma;
  current.shape = tau;
  current.content = delta;
  current.chain.push_back(sigma);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == delta.size()) {
      if (current.chain.back() == tau) out.push_back(current);
      return;
    }
    const TensorTableau saved = current;
    for (BlockInsertion& ins : block_insertions(current.chain.back(), family, delta[idx])) {
      if (!tau.contains(ins.result)) continue;
      current.chain.push_back(ins.result);
      current.steps.push_back(ins.step);
      current.sign *= ins.sign;
      current.sign_minus *= ins.sign_minus;
      current.weight *= ins.weight;
      self(self, idx + 1);
      current = saved;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::map<int, std::vector<std::vector<int>>> TensorTableau::cell_labels() const {
  std::map<int, std::vector<std::vector<int>>> labels;
  for (const auto& [degree, part] : shape.restrictions()) {
    auto& rows = labels[degree];
    for (int row : part.parts()) rows.emplace_back(static_cast<std::size_t>(row), 0);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Partition& before = chain[i - 1].restriction(degree);
      const Partition& after = chain[i].restriction(degree);
      for (int r = 0; r < after.length(); ++r) {
        for (int c = before.at(r); c < after.at(r); ++c) {
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(i);
        }
      }
    }
  }
  return labels;
}

std::vector<BlockInsertion> block_insertions(const SplitType& sigma, PolyBasis family, const Block& block) {
  require_family(family);
  std::vector<BlockInsertion> out;
  const int d = block.degree;
  const int m = block.multiplicity;
  if (family == PolyBasis::P) {
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      for (const RibbonStep& step : add_ribbons(sigma.restriction(k), d * m / k)) {
        BlockInsertion ins;
        ins.result = with_restriction(sigma, k, step.result);
        ins.step.position = k;
        ins.step.sign = step.sign;
        ins.sign = step.sign;
        ins.sign_minus = step.sign;
        ins.weight = k;
        out.push_back(std::move(ins));
      }
    }
    return out;
  }
  const bool dual = family != PolyBasis::H;
  for (const Partition& lambda : enumerate_partitions(d)) polyribbon_insertions(sigma, lambda, m, dual, out);
  return out;
}

PolyExpr s_times_P_block(const PolyExpr& expr, int d, int m) { return times_block(expr, PolyBasis::P, Block(d, m)); }

PolyExpr s_times_H_block(const PolyExpr& expr, int d, int r) { return times_block(expr, PolyBasis::H, Block(d, r)); }

PolyExpr s_times_E_block(const PolyExpr& expr, int d, int r, bool signed_variant) {
  return times_block(expr, signed_variant ? PolyBasis::E : PolyBasis::E_plus, Block(d, r));
}

PolyExpr s_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta) {
  require_family(family);
  PolyExpr current = expr;
  for (const Block& block : delta) current = times_block(current, family, block);
  return current;
}

std::vector<TensorTableau> enumerate_TRHT(const SplitType& tau, const SplitType& sigma, const BlockSequence& delta) {
  return enumerate_chains(tau, sigma, delta, PolyBasis::P, TableauFamily::TRHT);
}

std::vector<TensorTableau> enumerate_TPRT(const SplitType& tau, const SplitType& sigma, const BlockSequence& delta,
                                          bool dual) {
  return enumerate_chains(tau, sigma, delta, dual ? PolyBasis::E_plus : PolyBasis::H,
                          dual ? TableauFamily::dual_TPRT : TableauFamily::TPRT);
}

PolyMatrix transition_to_s(PolyBasis family, int n) {
  require_family(family);
  const std::vector<SplitType> labels = enumerate_types(n);
  PolyMatrix out = PolyMatrix::zero(n, labels);
  const PolyExpr unit = PolyExpr::single(PolyBasis::s_tensor, SplitType());
  for (const SplitType& sigma : labels) {
    const PolyExpr column = s_times(unit, family, sigma.blocks());
    for (const auto& [tau, coeff] : column.terms) out.at(tau, sigma) = coeff;
  }
  return out;
}

}  // namespace polysym
