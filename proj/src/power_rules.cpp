#include "polysym/power_rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysym {

namespace {

void require_family(PolyBasis family) {
  if (!is_family(family)) throw std::invalid_argument("expected one of the families P, H, E+, E");
}

Rational type_coefficient(PolyBasis family, const SplitType& rho) {
  Rational c(Integer(1), z_tensor(rho));
  const int length_sign = rho.length() % 2 == 0 ? 1 : -1;
  if (family == PolyBasis::E_plus) c *= length_sign * rho.sign();
  if (family == PolyBasis::E) c *= length_sign;
  return c;
}

SplitType insert_part(const SplitType& t, int degree, int part) {
  return type_union(t, SplitType::single(degree, Partition{part}));
}

}  // namespace

std::map<int, std::vector<std::pair<int, int>>> ConstantRowTableau::rows() const {
  std::map<int, std::vector<std::pair<int, int>>> out;
  for (const auto& [degree, part] : inner.restrictions()) {
    for (int len : part.parts()) out[degree].emplace_back(len, 0);
  }
  for (std::size_t i = 0; i < content.size(); ++i) {
    const int label = static_cast<int>(i) + 1;
    const Block& b = content[i];
    if (family == ConstantRowFamily::ICRPT) {
      const int k = divisors[i];
      out[k].emplace_back(b.degree * b.multiplicity / k, label);
    } else {
      for (const auto& [degree, part] : types[i].restrictions()) {
        for (int len : part.parts()) out[degree].emplace_back(len * b.multiplicity, label);
      }
    }
  }
  for (auto& [degree, list] : out) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
  }
  return out;
}

PolyExpr block_in_p(PolyBasis family, int d, int r) {
  require_family(family);
  if (d < 1 || r < 1) throw std::invalid_argument("block degree and multiplicity must be positive");
  PolyExpr out(PolyBasis::p_tensor);
  if (family == PolyBasis::P) {
    for (int k = 1; k <= d; ++k) {
      if (d % k == 0) out.add(SplitType::from_blocks({Block(k, r * d / k)}), Rational(k));
    }
    return out;
  }
  for (const SplitType& rho : enumerate_types(d)) out.add(type_scale(rho, r), type_coefficient(family, rho));
  return out;
}

PolyExpr p_times_block(const PolyExpr& expr, PolyBasis family, int d, int m) {
  if (expr.basis != PolyBasis::p_tensor) throw std::invalid_argument("expected a p-tensor expansion");
  return multiply_p_tensor({expr, block_in_p(family, d, m)});
}

PolyExpr p_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta) {
  PolyExpr current = expr;
  for (const Block& b : delta) current = p_times_block(current, family, b.degree, b.multiplicity);
  return current;
}

std::vector<ConstantRowTableau> enumerate_ICRPT(const SplitType& tau, const SplitType& sigma,
                                                const BlockSequence& delta) {
  std::vector<ConstantRowTableau> out;
  if (tau.weight() != sigma.weight() + sequence_weight(delta) || !tau.contains_parts(sigma)) return out;
  ConstantRowTableau current;
  current.family = ConstantRowFamily::ICRPT;
  current.inner = sigma;
  current.shape = tau;
  current.content = delta;
  auto rec = [&](auto&& self, std::size_t idx, const SplitType& filled) -> void {
    if (idx == delta.size()) {
      if (filled == tau) out.push_back(current);
      return;
    }
    const Block& b = delta[idx];
    for (int k = 1; k <= b.degree; ++k) {
      if (b.degree % k != 0) continue;
      const SplitType next = insert_part(filled, k, b.weight() / k);
      if (!tau.contains_parts(next)) continue;
      current.divisors.push_back(k);
      const Rational saved = current.weight;
      current.weight *= k;
      self(self, idx + 1, next);
      current.weight = saved;
      current.divisors.pop_back();
    }
  };
  rec(rec, 0, sigma);
  return out;
}

std::vector<ConstantRowTableau> enumerate_ICRHT(const SplitType& tau, const SplitType& sigma,
                                                const BlockSequence& delta) {
  std::vector<ConstantRowTableau> out;
  if (tau.weight() != sigma.weight() + sequence_weight(delta) || !tau.contains_parts(sigma)) return out;
  std::map<int, std::vector<SplitType>> choices;
  for (const Block& b : delta) {
    if (!choices.count(b.degree)) choices.emplace(b.degree, enumerate_types(b.degree));
  }
  ConstantRowTableau current;
  current.family = ConstantRowFamily::ICRHT;
  current.inner = sigma;
  current.shape = tau;
  current.content = delta;
  auto rec = [&](auto&& self, std::size_t idx, const SplitType& filled) -> void {
    if (idx == delta.size()) {
      if (filled == tau) out.push_back(current);
      return;
    }
    const Block& b = delta[idx];
    for (const SplitType& rho : choices.at(b.degree)) {
      const SplitType next = type_union(filled, type_scale(rho, b.multiplicity));
      if (!tau.contains_parts(next)) continue;
      const ConstantRowTableau saved = current;
      const int length_sign = rho.length() % 2 == 0 ? 1 : -1;
      current.types.push_back(rho);
      current.weight /= Rational(z_tensor(rho));
      current.sign_plus *= length_sign * rho.sign();
      current.sign_minus *= length_sign;
      self(self, idx + 1, next);
      current = saved;
    }
  };
  rec(rec, 0, sigma);
  return out;
}

PolyMatrix transition_to_p(PolyBasis family, int n) {
  require_family(family);
  const std::vector<SplitType> labels = enumerate_types(n);
  PolyMatrix out = PolyMatrix::zero(n, labels);
  const PolyExpr unit = PolyExpr::single(PolyBasis::p_tensor, SplitType());
  for (const SplitType& sigma : labels) {
    const PolyExpr column = p_times(unit, family, sigma.blocks());
    for (const auto& [tau, coeff] : column.terms) out.at(tau, sigma) = coeff;
  }
  return out;
}

}  // namespace polysym
