#include <algorithm>
#include <deque>
#include <mutex>
#include <tuple>

#include "polysym/errors.hpp"
#include "polysym/monomial_rules.hpp"
#include "polysym/notation.hpp"
#include "polysym/oracle.hpp"
#include "polysym/polysym_core.hpp"
#include "polysym/power_rules.hpp"
#include "polysym/schur_rules.hpp"

namespace polysym {

namespace {

constexpr PolyBasis kRuleTargets[] = {PolyBasis::p_tensor, PolyBasis::m_tensor, PolyBasis::s_tensor};

bool is_rule_target(PolyBasis b) {
  return b == PolyBasis::s_tensor || b == PolyBasis::p_tensor || b == PolyBasis::m_tensor;
}

// Neighbours in the conversion graph, cheapest first.
std::vector<PolyBasis> neighbours(PolyBasis b) {
  std::vector<PolyBasis> out;
  if (is_family(b)) {
    out.assign(std::begin(kRuleTargets), std::end(kRuleTargets));
    return out;
  }
  for (PolyBasis t : {PolyBasis::p_tensor, PolyBasis::m_tensor, PolyBasis::s_tensor, PolyBasis::h_tensor,
                      PolyBasis::e_tensor}) {
    if (t != b) out.push_back(t);
  }
  if (is_rule_target(b)) out.insert(out.end(), std::begin(kFamilies), std::end(kFamilies));
  return out;
}

PolyMatrix rule_matrix(PolyBasis family, PolyBasis target, int n) {
  switch (target) {
    case PolyBasis::s_tensor: return transition_to_s(family, n);
    case PolyBasis::p_tensor: return transition_to_p(family, n);
    case PolyBasis::m_tensor: return transition_to_m(family, n);
    default: break;
  }
  throw DomainError("no combinatorial rule into " + basis_name(target));
}

PolyMatrix direct_edge(PolyBasis from, PolyBasis to, int n) {
  if (is_pure(from) && is_pure(to)) return tensor_transition(classical_factor(from), classical_factor(to), n);
  if (is_family(from)) return rule_matrix(from, to, n);
  return inverse(rule_matrix(to, from, n));
}

std::vector<PolyBasis> shortest_path(PolyBasis from, PolyBasis to) {
  std::map<PolyBasis, PolyBasis> parent;
  std::deque<PolyBasis> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    const PolyBasis b = queue.front();
    queue.pop_front();
    if (b == to) break;
    for (PolyBasis next : neighbours(b)) {
      if (parent.emplace(next, b).second) queue.push_back(next);
    }
  }
  if (!parent.count(to)) throw DomainError("no conversion path from " + basis_name(from) + " to " + basis_name(to));
  std::vector<PolyBasis> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// Applies the block rules to each term, so no weight-n matrix is built.
PolyExpr expand_family(const PolyExpr& expr, PolyBasis target) {
  const PolyExpr one = PolyExpr::single(target, SplitType());
  PolyExpr out(target);
  for (const auto& [index, coeff] : expr.terms) {
    const BlockSequence& delta = index.blocks();
    switch (target) {
      case PolyBasis::s_tensor: out.add(s_times(one, expr.basis, delta), coeff); break;
      case PolyBasis::p_tensor: out.add(p_times(one, expr.basis, delta), coeff); break;
      default: out.add(m_times(one, expr.basis, delta), coeff); break;
    }
  }
  return out;
}

}  // namespace

PolyMatrix transition(PolyBasis from, PolyBasis to, int n, Engine engine) {
  static std::mutex mutex;
  static std::map<std::tuple<PolyBasis, PolyBasis, int, Engine>, PolyMatrix> cache;
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  const auto key = std::make_tuple(from, to, n, engine);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  PolyMatrix result;
  if (from == to) {
    result = PolyMatrix::identity(n, enumerate_types(n));
  } else if (engine == Engine::oracle) {
    result = oracle_transition(from, to, n);
  } else {
    const std::vector<PolyBasis> path = shortest_path(from, to);
    result = direct_edge(path[0], path[1], n);
    for (std::size_t i = 2; i < path.size(); ++i) result = compose(direct_edge(path[i - 1], path[i], n), result);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

PolyExpr convert(const PolyExpr& expr, PolyBasis target, int n) {
  for (const auto& [index, coeff] : expr.terms) {
    if (index.weight() != n) {
      throw DomainError("term " + basis_symbol(expr.basis) + "[" + to_string(index) + "] does not have weight " +
                        std::to_string(n));
    }
  }
  if (expr.basis == target) return expr;
  if (is_pure(expr.basis) && is_pure(target)) return expand_pure(expr, target);
  if (is_family(expr.basis) && is_rule_target(target)) return expand_family(expr, target);
  if (is_family(expr.basis) && is_pure(target)) return expand_pure(expand_family(expr, PolyBasis::p_tensor), target);
  return apply_matrix(transition(expr.basis, target, n), expr, target);
}

PolyExpr convert(const PolyExpr& expr, PolyBasis target) {
  if (expr.terms.empty()) return PolyExpr(target);
  const auto w = expr.weight();
  if (!w) throw DomainError("expression is not homogeneous");
  return convert(expr, target, *w);
}

PolyExpr multiply(const PolyExpr& a, const PolyExpr& b, PolyBasis target) {
  const PolyExpr product = multiply_p_tensor({convert(a, PolyBasis::p_tensor), convert(b, PolyBasis::p_tensor)});
  return convert(product, target);
}

}  // namespace polysym
