#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "polysym/errors.hpp"
#include "polysym/sym_kernel.hpp"

using namespace polysym;

namespace {

std::map<brute::Parts, Rational> m_terms(const SymExpr& e) {
  REQUIRE(e.basis == SymBasis::m);
  std::map<brute::Parts, Rational> out;
  for (const auto& [lambda, c] : e.terms) out[lambda.parts()] = c;
  return out;
}

char letter(SymBasis b) { return basis_name(b).at(0); }

}  // namespace

TEST_CASE("kostka numbers match brute-force SSYT counts") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& shape : brute::partitions(n)) {
      for (const auto& content : brute::partitions(n)) {
        CHECK(kostka(Partition(shape), content) == brute::ssyt_count(shape, content));
      }
    }
  }
  CHECK(kostka(Partition{2, 1}, {1, 2}) == 1);
}

TEST_CASE("to_monomial worked cases") {
  CHECK(to_monomial(SymExpr::single(SymBasis::h, {2, 2, 1}), 5).coefficient({3, 2}) == 5);
  CHECK(to_monomial(SymExpr::single(SymBasis::p, {4}), 4) == SymExpr::single(SymBasis::m, {4}));
  SymExpr s21(SymBasis::m);
  s21.add({2, 1}, 1);
  s21.add({1, 1, 1}, 2);
  CHECK(to_monomial(SymExpr::single(SymBasis::s, {2, 1}), 3) == s21);
  SymExpr mixed(SymBasis::h);
  mixed.add({2}, 1);
  mixed.add({1}, 1);
  CHECK_THROWS_AS(to_monomial(mixed, 2), DomainError);
}

TEST_CASE("to_monomial agrees with explicit polynomials") {
  for (int n = 1; n <= 5; ++n) {
    for (SymBasis b : kSymBases) {
      for (const auto& lambda : brute::partitions(n)) {
        CAPTURE(basis_name(b));
        CAPTURE(n);
        const auto expected = brute::poly_to_m(brute::poly_basis(letter(b), lambda, n), n);
        CHECK(m_terms(to_monomial(SymExpr::single(b, Partition(lambda)), n)) == expected);
      }
    }
  }
}

TEST_CASE("brick tabloid products: worked counts") {
  CHECK(multiply_m_by({3, 3, 1}, {2, 4, 2}, SymBasis::p).coefficient({5, 4, 3, 3}) == 6);
  CHECK(multiply_m_by({2, 1}, {2, 1, 2}, SymBasis::h).coefficient({4, 4}) == 10);
  CHECK(multiply_m_by({2, 1}, {2, 1, 2}, SymBasis::e).coefficient({4, 4}) == 2);
  CHECK(multiply_m_by({}, {2, 2, 1}, SymBasis::h).coefficient({3, 2}) == 5);
}

TEST_CASE("brick tabloid products agree with polynomial multiplication") {
  std::mt19937 rng(7);
  int cases = 0;
  for (int mu_area = 0; mu_area <= 4; ++mu_area) {
    for (const auto& mu : brute::partitions(mu_area)) {
      for (int alpha_area = 1; mu_area + alpha_area <= 7; ++alpha_area) {
        for (const auto& alpha_sorted : brute::partitions(alpha_area)) {
          std::vector<int> alpha = alpha_sorted;
          std::shuffle(alpha.begin(), alpha.end(), rng);
          if (rng() % 3 != 0) continue;
          const int n = mu_area + alpha_area;
          for (char f : {'p', 'h', 'e'}) {
            const SymBasis b = f == 'p' ? SymBasis::p : (f == 'h' ? SymBasis::h : SymBasis::e);
            brute::Poly prod = brute::poly_m(mu, n);
            for (int a : alpha) prod = prod * brute::poly_basis(f, {a}, n);
            CAPTURE(f);
            CHECK(m_terms(multiply_m_by(Partition(mu), alpha, b)) == brute::poly_to_m(prod, n));
            ++cases;
          }
        }
      }
    }
  }
  CHECK(cases > 50);
}

TEST_CASE("Murnaghan-Nakayama multiplication") {
  SymExpr expected(SymBasis::s);
  expected.add({7, 2}, 1);
  expected.add({5, 4}, -1);
  expected.add({3, 3, 3}, -1);
  expected.add({3, 2, 2, 1, 1}, 1);
  expected.add({3, 2, 1, 1, 1, 1}, -1);
  CHECK(mn_multiply(SymExpr::single(SymBasis::s, {3, 2}), 4) == expected);

  for (int k = 1; k <= 6; ++k) {
    const SymExpr hooks = mn_multiply(SymExpr::single(SymBasis::s, {}), k);
    CHECK(to_monomial(hooks, k) == to_monomial(SymExpr::single(SymBasis::p, {k}), k));
    for (const auto& [shape, c] : hooks.terms) {
      CHECK((shape.length() == 1 || shape.at(1) <= 1));
      CHECK(c == ((shape.length() % 2 == 1) ? 1 : -1));
    }
  }

  const SymExpr boxes = mn_multiply(SymExpr::single(SymBasis::s, {2, 1}), 1);
  CHECK(boxes.terms.size() == 3);
  for (const auto& [shape, c] : boxes.terms) CHECK(c == 1);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& alpha : brute::partitions(n)) {
      SymExpr acc = SymExpr::single(SymBasis::s, {});
      for (int a : alpha) acc = mn_multiply(acc, a);
      CHECK(m_terms(to_monomial(acc, n)) == brute::poly_to_m(brute::poly_basis('p', alpha, n), n));
    }
  }
}

TEST_CASE("plethysm with power sums and omega") {
  CHECK(pleth_pr(SymExpr::single(SymBasis::p, {3, 1}), 2) == SymExpr::single(SymBasis::p, {6, 2}));

  // h_2 evaluated at squared variables, four variables.
  brute::Poly squared{4, {}};
  for (const auto& [e, c] : brute::poly_he(2, 4, false).terms) {
    std::vector<int> e2 = e;
    for (int& v : e2) v *= 2;
    squared.add(e2, c);
  }
  const SymExpr h2p2 = pleth_pr(SymExpr::single(SymBasis::h, {2}), 2);
  CHECK(m_terms(to_monomial(h2p2, 4)) == brute::poly_to_m(squared, 4));

  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const SymExpr lhs = omega(pleth_pr(SymExpr::single(SymBasis::h, {n}), r));
      SymExpr rhs = pleth_pr(SymExpr::single(SymBasis::e, {n}), r);
      const int sign = (n * (r - 1)) % 2 == 0 ? 1 : -1;
      for (auto& [lambda, c] : rhs.terms) c *= sign;
      CHECK(change_basis(lhs, SymBasis::p) == change_basis(rhs, SymBasis::p));
    }
  }

  CHECK(omega(SymExpr::single(SymBasis::h, {3})) == SymExpr::single(SymBasis::e, {3}));
  CHECK(omega(SymExpr::single(SymBasis::p, {2, 2})) == SymExpr::single(SymBasis::p, {2, 2}));
  CHECK(omega(SymExpr::single(SymBasis::s, {3, 1})) == SymExpr::single(SymBasis::s, {2, 1, 1}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const SymBasis b = kSymBases[trial % 5];
    SymExpr f(b);
    for (int k = 0; k < 3; ++k) {
      const auto all = enumerate_partitions(1 + static_cast<int>(rng() % 6));
      f.add(all[rng() % all.size()], Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4)));
    }
    CHECK(omega(omega(f)) == f);
    CHECK(pleth_pr(f, 1) == change_basis(f, SymBasis::p));
  }
}

TEST_CASE("classical transition matrices") {
  for (int n = 0; n <= 6; ++n) {
    for (SymBasis f : kSymBases) {
      const auto m = classical_transition(f, f, n);
      CHECK(m == ClassicalMatrix::identity(n, enumerate_partitions(n)));
    }
    const auto sm = classical_transition(SymBasis::s, SymBasis::m, n);
    const auto hm = classical_transition(SymBasis::h, SymBasis::m, n);
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& mu : enumerate_partitions(n)) {
        CHECK(sm.at(lambda, mu) == Rational(kostka(mu, lambda.parts())));
        CHECK(hm.at(lambda, mu) == hm.at(mu, lambda));
      }
    }
  }
}

TEST_CASE("classical inverse and composition identities") {
  for (int n = 1; n <= 6; ++n) {
    const auto id = ClassicalMatrix::identity(n, enumerate_partitions(n));
    for (SymBasis f : kSymBases) {
      for (SymBasis g : kSymBases) {
        const auto fg = classical_transition(f, g, n);
        const auto gf = classical_transition(g, f, n);
        CHECK(compose(fg, gf) == id);
        for (SymBasis k : kSymBases) {
          CHECK(classical_transition(f, k, n) == compose(classical_transition(g, k, n), fg));
        }
      }
    }
  }
}

TEST_CASE("standard tableau counts") {
  for (int n = 1; n <= 6; ++n) {
    Integer sum_sq = 0;
    for (const auto& lambda : brute::partitions(n)) {
      const Integer f = kostka(Partition(lambda), std::vector<int>(n, 1));
      CHECK(f == brute::syt_count(lambda));
      sum_sq += f * f;
    }
    CHECK(sum_sq == factorial(n));
  }
}

TEST_CASE("products") {
  const SymExpr a = SymExpr::single(SymBasis::h, {2});
  const SymExpr b = SymExpr::single(SymBasis::h, {1});
  CHECK(multiply(a, b) == SymExpr::single(SymBasis::h, {2, 1}));
  const SymExpr s = multiply(SymExpr::single(SymBasis::s, {1}), SymExpr::single(SymBasis::s, {1}));
  SymExpr expected(SymBasis::s);
  expected.add({2}, 1);
  expected.add({1, 1}, 1);
  CHECK(s == expected);
  CHECK(parse_sym_basis("e") == SymBasis::e);
  CHECK_THROWS_AS(parse_sym_basis("q"), ParseError);
}
