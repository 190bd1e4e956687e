#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "polysym/errors.hpp"
#include "polysym/notation.hpp"
#include "polysym/partition.hpp"
#include "polysym/rational.hpp"
#include "polysym/split_type.hpp"

using namespace polysym;

TEST_CASE("rationals stay normalized and exact") {
  const Rational a(6, 8);
  CHECK(numerator_of(a) == 3);
  CHECK(denominator_of(a) == 4);
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_latex(Rational(-3, 6)) == "-\\frac{1}{2}");
  CHECK(to_latex(Rational(5)) == "5");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(parse_rational(" -7/14 ") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);

  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1, 97);
  CHECK(denominator_of(big) > Integer("1000000000000000000000000000000"));
  CHECK(big * Rational(Integer(97)) / Rational(Integer(97)) == big);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("partition basics") {
  const Partition p{4, 2, 2, 1};
  CHECK(p.area() == 9);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.conjugate() == Partition{4, 3, 1, 1});
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.contains(Partition{3, 2}));
  CHECK_FALSE(p.contains(Partition{5}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
  CHECK(z_factor(Partition{2, 2, 1}) == 8);
  CHECK(partition_union(Partition{3, 1}, Partition{2}) == Partition{3, 2, 1});
  CHECK(partition_scale(Partition{2, 1}, 3) == Partition{6, 3});
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  const auto four = enumerate_partitions(4);
  CHECK(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(static_cast<std::int64_t>(enumerate_partitions(n).size()) == brute::partition_count(n));
  }
}

TEST_CASE("blocks and type construction") {
  CHECK_THROWS_AS(Block(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Block(1, 0), std::invalid_argument);
  CHECK(Block(3, 2).weight() == 6);

  const SplitType t = parse_type("1^{3,1}2^{2}");
  CHECK(t.restriction(1) == Partition{3, 1});
  CHECK(t.restriction(2) == Partition{2});
  CHECK(t.restriction(5).empty());
  CHECK(t.weight() == 8);
  CHECK(t.length() == 3);
  CHECK(t.sign() == 1);
  const BlockSequence expected{Block(2, 2), Block(1, 3), Block(1, 1)};
  CHECK(t.blocks() == expected);
  CHECK(SplitType::from_blocks({Block(1, 1), Block(2, 2), Block(1, 3)}) == t);
  CHECK(SplitType(std::map<int, Partition>{{1, Partition{}}, {2, Partition{1}}}) == SplitType::single(2, {1}));
}

TEST_CASE("parse_type grammar") {
  const SplitType t = parse_type("3^{2,1}2^{2,2,1}1^{4}");
  CHECK(t.restriction(3) == Partition{2, 1});
  CHECK(t.restriction(2) == Partition{2, 2, 1});
  CHECK(t.restriction(1) == Partition{4});
  CHECK(parse_type("2^2 1^2 1^1") == parse_type("2^{2}1^{2,1}"));
  CHECK(parse_type("()").empty());
  CHECK(parse_type("").empty());
  CHECK_THROWS_AS(parse_type("1^0"), ParseError);
  CHECK_THROWS_AS(parse_type("1^{1,2}"), ParseError);
  CHECK_THROWS_AS(parse_type("1^"), ParseError);
  CHECK_THROWS_AS(parse_type("x"), ParseError);

  CHECK(to_string(t) == "3^{2,1} 2^{2,2,1} 1^4");
  CHECK(to_latex_label(parse_type("2^1 1^2")) == "2^{1}1^{2}");
  CHECK(to_latex_label(parse_type("1^{3,1}")) == "1^{31}");

  CHECK(parse_block_sequence("4^2,3^2,6,3^1") ==
        BlockSequence{Block(4, 2), Block(3, 2), Block(6, 1), Block(3, 1)});
  CHECK(parse_block_sequence("(2^2, 4^1)") == BlockSequence{Block(2, 2), Block(4, 1)});
  CHECK(parse_partition("(3,1,1)") == Partition{3, 1, 1});
}

TEST_CASE("type round trip through text for all small types") {
  for (int n = 0; n <= 6; ++n) {
    for (const SplitType& t : enumerate_types(n)) {
      CHECK(parse_type(to_string(t)) == t);
    }
  }
}

TEST_CASE("enumerate_types counts and order") {
  CHECK(enumerate_types(0).size() == 1);
  CHECK(enumerate_types(1) == std::vector<SplitType>{parse_type("1^1")});
  const auto four = enumerate_types(4);
  REQUIRE(four.size() == 11);
  CHECK(four.front() == parse_type("1^{1,1,1,1}"));
  CHECK(four.back() == parse_type("4^1"));
  CHECK(std::is_sorted(four.begin(), four.end()));
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const auto types = enumerate_types(n);
    CHECK(static_cast<std::int64_t>(types.size()) == brute::type_count(n));
    CHECK(std::set<SplitType>(types.begin(), types.end()).size() == types.size());
    for (const auto& t : types) CHECK(t.weight() == n);
  }
}

TEST_CASE("type union and scaling") {
  const SplitType a = parse_type("1^{2,1}");
  const SplitType b = parse_type("2^1 1^2");
  CHECK(type_union(SplitType(), parse_type("2^3")) == parse_type("2^3"));
  CHECK(type_union(a, b) == parse_type("2^1 1^{2,2,1}"));
  CHECK(type_union(parse_type("9^1 6^1"), parse_type("4^1 2^2")) == parse_type("9^1 6^1 4^1 2^2"));
  CHECK(type_scale(parse_type("1^{2,1}"), 3) == parse_type("1^{6,3}"));
  CHECK(type_scale(parse_type("1^{2,1}"), 2) == parse_type("1^{4,2}"));
  CHECK(type_scale(b, 1) == b);
  CHECK_THROWS_AS(type_scale(b, 0), std::invalid_argument);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pick = [&](int n) {
      const auto all = enumerate_types(n);
      return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    };
    const SplitType x = pick(trial % 5), y = pick((trial / 5) % 5), z = pick((trial / 25) % 5);
    CHECK(type_union(x, y) == type_union(y, x));
    CHECK(type_union(type_union(x, y), z) == type_union(x, type_union(y, z)));
    CHECK(type_union(x, y).weight() == x.weight() + y.weight());
    const int r = 1 + trial % 3, s = 1 + trial % 4;
    CHECK(type_scale(type_scale(x, r), s) == type_scale(x, r * s));
    const SplitType xr = type_scale(x, r);
    CHECK(xr.length() == x.length());
    for (const auto& [d, part] : x.restrictions()) CHECK(xr.restriction(d).area() == r * part.area());
  }
}

TEST_CASE("type statistics") {
  const TypeStats empty = type_stats(SplitType());
  CHECK(empty.weight == 0);
  CHECK(empty.length == 0);
  CHECK(empty.sign == 1);
  CHECK(empty.z_tensor == 1);

  CHECK(z_tensor(parse_type("3^2 3^2 2^3 2^2 2^2 1^4 1^2")) == 1536);

  const TypeStats small = type_stats(parse_type("1^2 1^1"));
  CHECK(small.z_tensor == 2);
  CHECK(small.length == 2);
  CHECK(small.sign == -1);
}
