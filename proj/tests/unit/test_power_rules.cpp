#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "polysym/notation.hpp"
#include "polysym/oracle.hpp"
#include "polysym/power_rules.hpp"

using namespace polysym;

namespace {

PolyExpr ptx(std::initializer_list<std::pair<const char*, Rational>> terms) {
  PolyExpr e(PolyBasis::p_tensor);
  for (const auto& [label, c] : terms) e.add(parse_type(label), c);
  return e;
}

Rational sum_weights(const std::vector<ConstantRowTableau>& ts, int which) {
  Rational total(0);
  for (const auto& t : ts) total += t.weight * (which == 0 ? 1 : (which == 1 ? t.sign_plus : t.sign_minus));
  return total;
}

}  // namespace

TEST_CASE("single blocks in p-tensor") {
  CHECK(block_in_p(PolyBasis::P, 2, 3) == ptx({{"1^6", 1}, {"2^3", 2}}));
  CHECK(block_in_p(PolyBasis::P, 3, 2) == ptx({{"1^6", 1}, {"3^2", 3}}));
  CHECK(block_in_p(PolyBasis::H, 2, 3) == ptx({{"1^6", Rational(1, 2)}, {"1^{3,3}", Rational(1, 2)}, {"2^3", 1}}));
  CHECK(block_in_p(PolyBasis::H, 3, 2) == ptx({{"1^6", Rational(1, 3)},
                                                {"1^{4,2}", Rational(1, 2)},
                                                {"1^{2,2,2}", Rational(1, 6)},
                                                {"2^2 1^2", 1},
                                                {"3^2", 1}}));
  CHECK(block_in_p(PolyBasis::E_plus, 2, 3) ==
        ptx({{"1^6", Rational(-1, 2)}, {"1^{3,3}", Rational(1, 2)}, {"2^3", 1}}));
  CHECK(block_in_p(PolyBasis::E_plus, 3, 2) == ptx({{"1^6", Rational(1, 3)},
                                                     {"1^{4,2}", Rational(-1, 2)},
                                                     {"1^{2,2,2}", Rational(1, 6)},
                                                     {"2^2 1^2", 1},
                                                     {"3^2", 1}}));
  CHECK(block_in_p(PolyBasis::E, 2, 3) == ptx({{"1^6", Rational(-1, 2)}, {"1^{3,3}", Rational(1, 2)}, {"2^3", -1}}));
  CHECK(block_in_p(PolyBasis::E, 3, 2) == ptx({{"1^6", Rational(-1, 3)},
                                               {"1^{4,2}", Rational(1, 2)},
                                               {"1^{2,2,2}", Rational(-1, 6)},
                                               {"2^2 1^2", 1},
                                               {"3^2", -1}}));
  CHECK_THROWS_AS(block_in_p(PolyBasis::H, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(block_in_p(PolyBasis::p_tensor, 1, 1), std::invalid_argument);
}

TEST_CASE("single blocks agree with the monomial oracle") {
  for (int d = 1; d <= 4; ++d) {
    for (PolyBasis f : kFamilies) {
      const PolyExpr rules = expand_pure(block_in_p(f, d, 1), PolyBasis::m_tensor);
      const PolyExpr direct = extract_m_tensor(generate_block(f, Block(d, 1), d, d), d);
      CHECK(rules == direct);
    }
  }
}

TEST_CASE("H block coefficients restrict to classical 1/z") {
  for (int d = 1; d <= 6; ++d) {
    const PolyExpr h = block_in_p(PolyBasis::H, d, 1);
    for (const auto& lambda : enumerate_partitions(d)) {
      CHECK(h.coefficient(SplitType::single(1, lambda)) == Rational(1) / Rational(z_factor(lambda)));
    }
  }
}

TEST_CASE("block products") {
  const PolyExpr sigma = PolyExpr::single(PolyBasis::p_tensor, parse_type("2^1 1^{2,1}"));
  CHECK(p_times_block(sigma, PolyBasis::P, 3, 2) ==
        ptx({{"2^1 1^{6,2,1}", 1}, {"3^2 2^1 1^{2,1}", 3}}));

  PolyExpr h(PolyBasis::p_tensor);
  for (const auto& tau : enumerate_types(3)) {
    h.add(type_union(parse_type("2^1 1^{2,1}"), type_scale(tau, 2)), Rational(1) / Rational(z_tensor(tau)));
  }
  CHECK(p_times_block(sigma, PolyBasis::H, 3, 2) == h);

  PolyExpr e(PolyBasis::p_tensor);
  for (const auto& tau : enumerate_types(3)) {
    e.add(type_union(parse_type("2^1 1^{2,1}"), type_scale(tau, 2)),
          Rational(tau.length() % 2 == 0 ? 1 : -1) / Rational(z_tensor(tau)));
  }
  CHECK(p_times_block(sigma, PolyBasis::E, 3, 2) == e);
}

TEST_CASE("ICRPT worked example") {
  const SplitType sigma = parse_type("2^2 1^3");
  const BlockSequence delta = parse_block_sequence("2^2,4^1,2^2");
  const PolyExpr expansion = p_times(PolyExpr::single(PolyBasis::p_tensor, sigma), PolyBasis::P, delta);
  CHECK(expansion == ptx({{"2^2 1^{4,4,4,3}", 1},
                          {"2^{2,2}1^{4,4,3}", 6},
                          {"2^{2,2,2}1^{4,3}", 12},
                          {"2^{2,2,2,2}1^3", 8},
                          {"4^1 2^2 1^{4,4,3}", 4},
                          {"4^1 2^{2,2}1^{4,3}", 16},
                          {"4^1 2^{2,2,2}1^3", 16}}));

  std::map<std::vector<int>, Rational> by_divisors;
  std::size_t count = 0;
  for (const auto& [tau, c] : expansion.terms) {
    const auto ts = enumerate_ICRPT(tau, sigma, delta);
    CHECK(sum_weights(ts, 0) == c);
    for (const auto& t : ts) {
      by_divisors[t.divisors] = t.weight;
      ++count;
    }
  }
  CHECK(count == 12);
  const std::map<std::vector<int>, Rational> figure = {
      {{1, 1, 1}, 1}, {{1, 1, 2}, 2}, {{2, 1, 1}, 2}, {{1, 2, 1}, 2}, {{1, 2, 2}, 4},  {{2, 1, 2}, 4},
      {{2, 2, 1}, 4}, {{2, 2, 2}, 8}, {{1, 4, 1}, 4}, {{1, 4, 2}, 8}, {{2, 4, 1}, 8}, {{2, 4, 2}, 16},
  };
  CHECK(by_divisors == figure);

  const auto two = enumerate_ICRPT(parse_type("4^{4,2}3^1 2^{4,4,4,2}1^{4,3,1,1}"), parse_type("4^4 2^{4,2}1^{3,1,1}"),
                                   parse_block_sequence("4^2,3^1,4^1,2^4,4^2"));
  REQUIRE(two.size() == 2);
  for (const auto& t : two) CHECK(t.weight == 48);
  CHECK(sum_weights(two, 0) == 96);

  const auto empty = enumerate_ICRPT(sigma, sigma, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].weight == 1);
}

TEST_CASE("ICRHT worked example") {
  const SplitType tau = parse_type("3^{2,1}2^{2,2,1}1^4");
  const BlockSequence delta = parse_block_sequence("9^1,6^1,4^1,2^2");
  const auto ts = enumerate_ICRHT(tau, SplitType(), delta);
  REQUIRE(ts.size() == 6);
  int plus = 0;
  for (const auto& t : ts) {
    CHECK(t.weight == Rational(1, 16));
    CHECK(t.sign_minus == 1);
    plus += t.sign_plus;
  }
  CHECK(plus == -2);
  CHECK(sum_weights(ts, 0) == Rational(3, 8));
  CHECK(sum_weights(ts, 2) == Rational(3, 8));
  CHECK(sum_weights(ts, 1) == Rational(-1, 8));

  const auto witness = enumerate_ICRHT(parse_type("2^{1,1,1}1^{1,1,1}"), SplitType(), parse_block_sequence("5^1,4^1"));
  std::set<Rational> weights;
  for (const auto& t : witness) weights.insert(t.weight);
  CHECK(weights.count(Rational(1, 12)) == 1);
  CHECK(weights.count(Rational(1, 4)) == 1);
}

TEST_CASE("enumeration sums equal iterated block products") {
  for (int n = 1; n <= 5; ++n) {
    for (int sw = 0; sw <= 1; ++sw) {
      for (const auto& sigma : enumerate_types(sw)) {
        for (const auto& ct : enumerate_types(n - sw)) {
          const BlockSequence delta = ct.blocks();
          const PolyExpr start = PolyExpr::single(PolyBasis::p_tensor, sigma);
          const PolyExpr p = p_times(start, PolyBasis::P, delta);
          const PolyExpr h = p_times(start, PolyBasis::H, delta);
          const PolyExpr ep = p_times(start, PolyBasis::E_plus, delta);
          const PolyExpr e = p_times(start, PolyBasis::E, delta);
          for (const auto& tau : enumerate_types(n)) {
            const auto icrpt = enumerate_ICRPT(tau, sigma, delta);
            CHECK(p.coefficient(tau) == sum_weights(icrpt, 0));
            const auto icrht = enumerate_ICRHT(tau, sigma, delta);
            CHECK(h.coefficient(tau) == sum_weights(icrht, 0));
            CHECK(ep.coefficient(tau) == sum_weights(icrht, 1));
            CHECK(e.coefficient(tau) == sum_weights(icrht, 2));
          }
        }
      }
    }
  }
}

TEST_CASE("ICRPT weights depend only on shape and inner type") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& tau : enumerate_types(n)) {
      std::set<Rational> weights;
      for (const auto& ct : enumerate_types(n)) {
        BlockSequence delta = ct.blocks();
        const auto before = [](const Block& a, const Block& b) {
          return std::pair(a.degree, a.multiplicity) < std::pair(b.degree, b.multiplicity);
        };
        std::sort(delta.begin(), delta.end(), before);
        do {
          for (const auto& t : enumerate_ICRPT(tau, SplitType(), delta)) weights.insert(t.weight);
        } while (std::next_permutation(delta.begin(), delta.end(), before));
      }
      CHECK(weights.size() <= 1);
    }
  }
}

TEST_CASE("transition_to_p structure") {
  for (int n = 1; n <= 5; ++n) {
    const auto pp = transition_to_p(PolyBasis::P, n);
    const auto e = transition_to_p(PolyBasis::E, n);
    const auto ep = transition_to_p(PolyBasis::E_plus, n);
    for (const auto& sigma : pp.labels()) {
      if (sigma.length() != 1) continue;
      const Block b = sigma.blocks().front();
      for (int k = 1; k <= b.degree; ++k) {
        if (b.degree % k != 0) continue;
        CHECK(pp.at(SplitType::single(k, Partition{b.multiplicity * b.degree / k}), sigma) == k);
      }
      for (const auto& rho : enumerate_types(b.degree)) {
        const SplitType row = type_scale(rho, b.multiplicity);
        CHECK(ep.at(row, sigma) == Rational(rho.sign()) * e.at(row, sigma));
      }
    }
  }
}
