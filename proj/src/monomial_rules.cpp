#include "polysym/monomial_rules.hpp"

#include <set>
#include <stdexcept>

namespace polysym {

namespace {

// One choice of divisors (PTBT) or partitions (HTBT/ETBT), with the bricks it
// places in each component.
struct BrickChoice {
  std::vector<int> divisors;
  std::vector<Partition> partitions;
  std::map<int, std::vector<BrickStock>> stock;
  Rational weight{1};
  int sign = 1;
};

BrickFamily brick_family(PolyBasis family) {
  switch (family) {
    case PolyBasis::P: return BrickFamily::PTBT;
    case PolyBasis::H: return BrickFamily::HTBT;
    case PolyBasis::E_plus:
    case PolyBasis::E: return BrickFamily::ETBT;
    default: break;
  }
  throw std::invalid_argument("expected one of the families P, H, E+, E");
}

RowRule row_rule(BrickFamily family) {
  return family == BrickFamily::HTBT ? RowRule::weakly_increasing : RowRule::distinct_labels;
}

std::vector<BrickChoice> brick_choices(const SplitType& sigma, const BlockSequence& delta, BrickFamily family) {
  BrickChoice base;
  for (const auto& [degree, part] : sigma.restrictions()) {
    for (int len : part.parts()) base.stock[degree].push_back({0, len, 1});
  }
  std::vector<BrickChoice> out;
  auto rec = [&](auto&& self, std::size_t idx, BrickChoice& current) -> void {
    if (idx == delta.size()) {
      out.push_back(current);
      return;
    }
    const Block& b = delta[idx];
    const int label = static_cast<int>(idx) + 1;
    if (family == BrickFamily::PTBT) {
      for (int k = 1; k <= b.degree; ++k) {
        if (b.degree % k != 0) continue;
        BrickChoice next = current;
        next.divisors.push_back(k);
        next.stock[k].push_back({label, b.weight() / k, 1});
        next.weight *= k;
        self(self, idx + 1, next);
      }
      return;
    }
    for (const Partition& lambda : enumerate_partitions(b.degree)) {
      BrickChoice next = current;
      next.partitions.push_back(lambda);
      for (int k : std::set<int>(lambda.parts().begin(), lambda.parts().end())) {
        next.stock[k].push_back({label, b.multiplicity, lambda.multiplicity(k)});
      }
      if (lambda.length() % 2 == 1) next.sign = -next.sign;
      self(self, idx + 1, next);
    }
  };
  rec(rec, 0, base);
  return out;
}

int stock_area(const std::vector<BrickStock>& stock) {
  int area = 0;
  for (const BrickStock& s : stock) area += s.length * s.count;
  return area;
}

bool areas_match(const SplitType& tau, const std::map<int, std::vector<BrickStock>>& stock) {
  for (const auto& [degree, list] : stock) {
    if (stock_area(list) != tau.restriction(degree).area()) return false;
  }
  for (const auto& [degree, part] : tau.restrictions()) {
    if (!stock.count(degree)) return false;
  }
  return true;
}

std::vector<TensorBrickTabloid> enumerate_tabloids(const SplitType& tau, const SplitType& sigma,
                                                   const BlockSequence& delta, BrickFamily family) {
  std::vector<TensorBrickTabloid> out;
  if (tau.weight() != sigma.weight() + sequence_weight(delta)) return out;
  for (const BrickChoice& choice : brick_choices(sigma, delta, family)) {
    if (!areas_match(tau, choice.stock)) continue;
    std::vector<std::pair<int, std::vector<BrickFilling>>> per_component;
    bool empty = false;
    for (const auto& [degree, list] : choice.stock) {
      auto fillings = fill_with_bricks(tau.restriction(degree), list, row_rule(family));
      if (fillings.empty()) {
        empty = true;
        break;
      }
      per_component.emplace_back(degree, std::move(fillings));
    }
    if (empty) continue;
    TensorBrickTabloid current;
    current.family = family;
    current.inner = sigma;
    current.shape = tau;
    current.content = delta;
    current.divisors = choice.divisors;
    current.partitions = choice.partitions;
    current.weight = choice.weight;
    current.sign = family == BrickFamily::ETBT ? choice.sign : 1;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (idx == per_component.size()) {
        out.push_back(current);
        return;
      }
      for (const BrickFilling& filling : per_component[idx].second) {
        current.components[per_component[idx].first] = filling;
        self(self, idx + 1);
      }
      current.components.erase(per_component[idx].first);
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace

std::vector<TensorBrickTabloid> enumerate_PTBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta) {
  return enumerate_tabloids(tau, sigma, delta, BrickFamily::PTBT);
}

std::vector<TensorBrickTabloid> enumerate_HTBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta) {
  return enumerate_tabloids(tau, sigma, delta, BrickFamily::HTBT);
}

std::vector<TensorBrickTabloid> enumerate_ETBT(const SplitType& tau, const SplitType& sigma,
                                               const BlockSequence& delta) {
  return enumerate_tabloids(tau, sigma, delta, BrickFamily::ETBT);
}

PolyExpr m_times(const PolyExpr& expr, PolyBasis family, const BlockSequence& delta) {
  if (expr.basis != PolyBasis::m_tensor) throw std::invalid_argument("expected an m-tensor expansion");
  const BrickFamily bf = brick_family(family);
  const bool use_sign = family == PolyBasis::E;
  PolyExpr out(PolyBasis::m_tensor);
  for (const auto& [sigma, coeff] : expr.terms) {
    for (const BrickChoice& choice : brick_choices(sigma, delta, bf)) {
      // Every component shape that admits a filling, with its count.
      std::vector<std::pair<int, std::vector<std::pair<Partition, Integer>>>> per_component;
      bool empty = false;
      for (const auto& [degree, list] : choice.stock) {
        std::vector<std::pair<Partition, Integer>> shapes;
        for (const Partition& lambda : enumerate_partitions(stock_area(list))) {
          Integer count = count_brick_fillings(lambda, list, row_rule(bf));
          if (count != 0) shapes.emplace_back(lambda, std::move(count));
        }
        if (shapes.empty()) {
          empty = true;
          break;
        }
        per_component.emplace_back(degree, std::move(shapes));
      }
      if (empty) continue;
      const Rational base = coeff * choice.weight * (use_sign ? choice.sign : 1);
      std::map<int, Partition> restrictions;
      auto rec = [&](auto&& self, std::size_t idx, const Rational& c) -> void {
        if (idx == per_component.size()) {
          out.add(SplitType(restrictions), c);
          return;
        }
        for (const auto& [lambda, count] : per_component[idx].second) {
          restrictions[per_component[idx].first] = lambda;
          self(self, idx + 1, c * Rational(count));
        }
        restrictions.erase(per_component[idx].first);
      };
      rec(rec, 0, base);
    }
  }
  return out;
}

PolyExpr m_times_P(const PolyExpr& expr, const BlockSequence& delta) { return m_times(expr, PolyBasis::P, delta); }

PolyExpr m_times_H(const PolyExpr& expr, const BlockSequence& delta) { return m_times(expr, PolyBasis::H, delta); }

PolyExpr m_times_E(const PolyExpr& expr, const BlockSequence& delta, bool signed_variant) {
  return m_times(expr, signed_variant ? PolyBasis::E : PolyBasis::E_plus, delta);
}

PolyMatrix transition_to_m(PolyBasis family, int n) {
  brick_family(family);
  const std::vector<SplitType> labels = enumerate_types(n);
  PolyMatrix out = PolyMatrix::zero(n, labels);
  const PolyExpr unit = PolyExpr::single(PolyBasis::m_tensor, SplitType());
  for (const SplitType& sigma : labels) {
    const PolyExpr column = m_times(unit, family, sigma.blocks());
    for (const auto& [tau, coeff] : column.terms) out.at(tau, sigma) = coeff;
  }
  return out;
}

}  // namespace polysym
