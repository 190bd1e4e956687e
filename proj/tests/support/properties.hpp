#pragma once

// Randomized and exhaustive property checks shared by the standalone property
// suite and the acceptance runner. Each check returns a PropertyResult whose
// detail names the first counterexample.

#include <random>
#include <string>

#include "brute.hpp"
#include "polysym/monomial_rules.hpp"
#include "polysym/notation.hpp"
#include "polysym/power_rules.hpp"
#include "polysym/schur_rules.hpp"
#include "polysym/shapes.hpp"
#include "polysym/split_type.hpp"

namespace props {

using namespace polysym;

struct PropertyResult {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

inline Partition random_partition(std::mt19937& rng, int area) {
  const auto all = enumerate_partitions(area);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

/// add_polyribbons followed by decomposition returns the same count and sign.
inline PropertyResult polyribbon_round_trip(int cases, std::uint32_t seed = 20240601) {
  PropertyResult res;
  std::mt19937 rng(seed);
  int checked = 0;
  for (int c = 0; c < cases; ++c) {
    const int r = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(0, 12 / r)(rng);
    const int mu_area = std::uniform_int_distribution<int>(0, 12 - r * n)(rng);
    const bool dual = rng() % 2 == 0;
    const Partition mu = random_partition(rng, mu_area);
    for (const auto& sp : add_polyribbons(mu, r, n, dual)) {
      const SkewShape shape(sp.shape, mu);
      const auto d = dual ? dual_polyribbon_decompose(shape, r) : polyribbon_decompose(shape, r);
      ++checked;
      if (!d || d->count != n || d->sign != sp.sign) {
        res.fail(to_string(sp.shape) + "/" + to_string(mu) + " r=" + std::to_string(r) +
                 (dual ? " dual" : "") + " does not decompose back");
      }
    }
  }
  res.detail = res.ok ? std::to_string(cases) + " cases, " + std::to_string(checked) + " shapes" : res.detail;
  return res;
}

/// r = 1 gives horizontal strips with sign +1; n = 1 gives single ribbons.
inline PropertyResult polyribbon_specializations() {
  PropertyResult res;
  for (int area = 0; area <= 7; ++area) {
    for (const auto& mu : enumerate_partitions(area)) {
      for (int n = 0; n <= 4; ++n) {
        std::set<Partition> strips;
        for (const auto& lambda : enumerate_partitions(area + n)) {
          if (!lambda.contains(mu)) continue;
          bool horizontal = true;
          for (int i = 0; i + 1 <= lambda.length(); ++i) horizontal &= lambda.at(i + 1) <= mu.at(i);
          if (horizontal) strips.insert(lambda);
        }
        std::set<Partition> got;
        for (const auto& sp : add_polyribbons(mu, 1, n, false)) {
          got.insert(sp.shape);
          if (sp.sign != 1) res.fail("negative sign in a horizontal strip over " + to_string(mu));
        }
        if (got != strips) res.fail("r=1 mismatch over " + to_string(mu) + " n=" + std::to_string(n));
      }
      for (int r = 1; r <= 5; ++r) {
        std::map<Partition, int> a, b;
        for (const auto& sp : add_polyribbons(mu, r, 1, false)) a[sp.shape] = sp.sign;
        for (const auto& step : add_ribbons(mu, r)) b[step.result] = step.sign;
        if (a != b) res.fail("n=1 mismatch over " + to_string(mu) + " r=" + std::to_string(r));
      }
    }
  }
  return res;
}

/// λ/μ is a dual polyribbon iff λ'/μ' is a polyribbon; signs differ by (−1)^{n(r−1)}.
inline PropertyResult dual_conjugate_correspondence() {
  PropertyResult res;
  for (int outer = 1; outer <= 9; ++outer) {
    for (const auto& lambda : enumerate_partitions(outer)) {
      for (int inner = 0; inner < outer; ++inner) {
        for (const auto& mu : enumerate_partitions(inner)) {
          if (!lambda.contains(mu)) continue;
          for (int r = 1; r <= outer - inner; ++r) {
            const auto d = dual_polyribbon_decompose(SkewShape(lambda, mu), r);
            const auto p = polyribbon_decompose(SkewShape(lambda.conjugate(), mu.conjugate()), r);
            if (d.has_value() != p.has_value()) {
              res.fail("presence differs at " + to_string(lambda) + "/" + to_string(mu));
            } else if (d) {
              const int expected = ((d->count * (r - 1)) % 2 == 0 ? 1 : -1) * p->sign;
              if (d->sign != expected) res.fail("sign differs at " + to_string(lambda) + "/" + to_string(mu));
            }
          }
        }
      }
    }
  }
  return res;
}

/// Permuting δ leaves every product expansion unchanged.
inline PropertyResult order_invariance(int cases, int permutations = 20, std::uint32_t seed = 77) {
  PropertyResult res;
  std::mt19937 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int sigma_weight = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto sigmas = enumerate_types(sigma_weight);
    const SplitType sigma = sigmas[rng() % sigmas.size()];
    BlockSequence delta;
    const int blocks = std::uniform_int_distribution<int>(2, 4)(rng);
    for (int b = 0; b < blocks; ++b) {
      delta.push_back(Block(std::uniform_int_distribution<int>(1, 3)(rng), std::uniform_int_distribution<int>(1, 2)(rng)));
    }
    auto expansions = [&](const BlockSequence& seq) {
      std::vector<PolyExpr> out;
      for (PolyBasis f : kFamilies) {
        out.push_back(s_times(PolyExpr::single(PolyBasis::s_tensor, sigma), f, seq));
        out.push_back(p_times(PolyExpr::single(PolyBasis::p_tensor, sigma), f, seq));
        out.push_back(m_times(PolyExpr::single(PolyBasis::m_tensor, sigma), f, seq));
      }
      return out;
    };
    const auto reference = expansions(delta);
    for (int k = 0; k < permutations; ++k) {
      BlockSequence shuffled = delta;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      if (expansions(shuffled) != reference) {
        res.fail("order dependence for sigma " + to_string(sigma) + " delta " + to_string(delta));
        break;
      }
    }
  }
  if (res.ok) res.detail = std::to_string(cases) + " cases x " + std::to_string(permutations) + " permutations";
  return res;
}

/// Column σ = 1^{1,…,1} of M(H, s⊗) holds f^λ at 1^λ and zero elsewhere.
inline PropertyResult h_column_standard_tableaux(int max_n = 5) {
  PropertyResult res;
  for (int n = 1; n <= max_n; ++n) {
    const auto m = transition_to_s(PolyBasis::H, n);
    const SplitType ones = SplitType::single(1, Partition(std::vector<int>(n, 1)));
    for (const auto& tau : m.labels()) {
      const auto& r = tau.restrictions();
      const bool degree_one = r.size() == 1 && r.count(1) == 1;
      const Rational expected = degree_one ? Rational(brute::syt_count(tau.restriction(1).parts())) : Rational(0);
      if (m.at(tau, ones) != expected) res.fail("entry at " + to_string(tau) + " for n=" + std::to_string(n));
    }
  }
  return res;
}

/// |enumerate_types(n)| against the generating-function coefficient.
inline PropertyResult type_counts(int max_n = 6) {
  PropertyResult res;
  std::string counts;
  for (int n = 0; n <= max_n; ++n) {
    const auto got = static_cast<std::int64_t>(enumerate_types(n).size());
    counts += (n ? "," : "") + std::to_string(got);
    if (got != brute::type_count(n)) res.fail("n=" + std::to_string(n));
  }
  if (res.ok) res.detail = "counts " + counts;
  return res;
}

}  // namespace props
