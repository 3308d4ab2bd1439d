#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "ainf/monoid.hpp"
#include "ainf/novikov.hpp"
#include "ainf/scalar.hpp"

using namespace ainf;

namespace {

// Naive oracle: Novikov elements as plain (energy -> coeff) maps.
using Naive = std::map<Scalar, Scalar>;

Naive naive_mul(const Naive& x, const Naive& y, const std::optional<Scalar>& cutoff) {
  Naive out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      Scalar e = ex + ey;
      if (cutoff && e >= *cutoff) continue;
      out[e] += cx * cy;
    }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

NovikovElement random_element(std::mt19937_64& rng, const std::optional<Scalar>& cutoff) {
  NovikovElement x(cutoff);
  std::uniform_int_distribution<int> n_terms(0, 4), num(-3, 3), e_num(0, 8);
  for (int i = n_terms(rng); i > 0; --i) x.add_term(Scalar(e_num(rng), 4), Scalar(num(rng)));
  return x;
}

std::set<MonoidElement> brute_force_closure(const std::vector<MonoidElement>& gens, const Scalar& cutoff) {
  std::set<MonoidElement> out{MonoidElement{}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<MonoidElement>(out.begin(), out.end()))
      for (const auto& g : gens) {
        auto s = a + g;
        if (s.energy <= cutoff && out.insert(s).second) grew = true;
      }
  }
  return out;
}

std::vector<MonoidElement> elems(std::initializer_list<std::pair<Scalar, int>> list) {
  std::vector<MonoidElement> out;
  for (const auto& [e, mu] : list) out.push_back({e, mu});
  return out;
}

}  // namespace

TEST(Scalar, ParseAndFormatAreCanonical) {
  EXPECT_EQ(format_scalar(parse_scalar("-6/4")), "-3/2");
  EXPECT_EQ(format_scalar(parse_scalar("+10/5")), "2");
  EXPECT_EQ(format_scalar(parse_scalar("0/7")), "0");
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
}

TEST(Novikov, AddsConstants) {
  auto x = NovikovElement::monomial(2, 0) + NovikovElement::monomial(3, 0);
  EXPECT_EQ(x, NovikovElement::monomial(5, 0));
}

TEST(Novikov, ProductAboveCutoffVanishes) {
  const Scalar e = 1;
  auto x = NovikovElement::monomial(1, Scalar(1, 2), e) * NovikovElement::monomial(1, Scalar(3, 4), e);
  EXPECT_TRUE(x.is_zero());
}

TEST(Novikov, DifferenceOfSquares) {
  auto one = NovikovElement::monomial(1, 0);
  auto t = NovikovElement::monomial(1, 1);
  auto p = (one + t) * (one - t);
  EXPECT_EQ(p, one - NovikovElement::monomial(1, 2));
  EXPECT_EQ(p.serialize(), (std::vector<std::pair<std::string, std::string>>{{"0", "1"}, {"2", "-1"}}));
}

TEST(Novikov, StoredEnergiesStayBelowCutoff) {
  NovikovElement x(Scalar(1));
  x.add_term(Scalar(1), 5);
  x.add_term(Scalar(1, 3), 2);
  x.add_term(Scalar(1, 3), -2);
  EXPECT_TRUE(x.is_zero());
  x.add_term(Scalar(2, 3), 1);
  EXPECT_EQ(x.valuation(), Scalar(2, 3));
}

TEST(Novikov, MismatchedModesAreRejected) {
  EXPECT_THROW(nov_arith(NovikovElement(Scalar(1)), NovikovElement(), NovikovOp::Add), std::invalid_argument);
  EXPECT_THROW(nov_arith(NovikovElement(Scalar(1)), NovikovElement(Scalar(2)), NovikovOp::Mul), std::invalid_argument);
}

TEST(Novikov, MultiplicationMatchesNaiveConvolution) {
  std::mt19937_64 rng(11);
  for (const std::optional<Scalar>& cutoff : {std::optional<Scalar>{}, std::optional<Scalar>(Scalar(3, 2))})
    for (int trial = 0; trial < 200; ++trial) {
      auto x = random_element(rng, cutoff), y = random_element(rng, cutoff);
      const auto got = nov_arith(x, y, NovikovOp::Mul).terms();
      EXPECT_EQ(got, naive_mul(x.terms(), y.terms(), cutoff));
    }
}

TEST(Novikov, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::optional<Scalar> cutoff;
    if (trial % 2) cutoff = Scalar(7, 4);
    auto x = random_element(rng, cutoff), y = random_element(rng, cutoff), z = random_element(rng, cutoff);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}

TEST(Novikov, TruncationIsARingQuotient) {
  std::mt19937_64 rng(13);
  const Scalar e(5, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_element(rng, std::nullopt), y = random_element(rng, std::nullopt);
    EXPECT_EQ((x * y).truncated(e), x.truncated(e) * y.truncated(e));
    EXPECT_EQ((x + y).truncated(e), x.truncated(e) + y.truncated(e));
  }
}

TEST(Monoid, SingleGenerator) {
  EnergyMonoid g(elems({{1, 2}}));
  EXPECT_EQ(g.enumerate(Scalar(7, 2)), elems({{0, 0}, {1, 2}, {2, 4}, {3, 6}}));
}

TEST(Monoid, TwoGeneratorsMatchBruteForce) {
  const auto gens = elems({{1, 0}, {1, 2}});
  EnergyMonoid g(gens);
  const auto expected = elems({{0, 0}, {1, 0}, {1, 2}, {2, 0}, {2, 2}, {2, 4}});
  EXPECT_EQ(g.enumerate(2), expected);
  const auto oracle = brute_force_closure(gens, 2);
  EXPECT_EQ(std::vector<MonoidElement>(oracle.begin(), oracle.end()), expected);
}

TEST(Monoid, EmptyMonoidIsTrivial) {
  EXPECT_EQ(EnergyMonoid().enumerate(5), elems({{0, 0}}));
}

TEST(Monoid, RejectsNonDiscreteGenerators) {
  EXPECT_THROW(EnergyMonoid(elems({{0, 2}})), std::invalid_argument);
  EXPECT_THROW(EnergyMonoid(elems({{1, 1}})), std::invalid_argument);
  EXPECT_THROW(EnergyMonoid(elems({{-1, 0}})), std::invalid_argument);
}

TEST(Monoid, SumWithTrivialMonoid) {
  auto s = monoid_sum(EnergyMonoid(elems({{1, 2}})), EnergyMonoid());
  EXPECT_EQ(s.generators(), elems({{1, 2}}));
}

TEST(Monoid, SumEnumerationMatchesPairwiseSums) {
  EnergyMonoid a(elems({{1, 0}})), b(elems({{Scalar(1, 2), 2}}));
  const Scalar cutoff(3, 2);
  const auto got = monoid_sum(a, b).enumerate(cutoff);
  std::set<MonoidElement> pairwise;
  for (const auto& x : a.enumerate(cutoff))
    for (const auto& y : b.enumerate(cutoff))
      if (x.energy + y.energy <= cutoff) pairwise.insert(x + y);
  EXPECT_EQ(got, std::vector<MonoidElement>(pairwise.begin(), pairwise.end()));
  EXPECT_EQ(got, elems({{0, 0}, {Scalar(1, 2), 2}, {1, 0}, {1, 4}, {Scalar(3, 2), 2}, {Scalar(3, 2), 6}}));
}

TEST(Monoid, EnumerationIsClosedAndDuplicateFree) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> e(1, 6), mu(-2, 2), n(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MonoidElement> gens;
    for (int i = n(rng); i > 0; --i) gens.push_back({Scalar(e(rng)) / 3, 2 * mu(rng)});
    EnergyMonoid g(gens);
    const Scalar cutoff(5, 2);
    const auto list = g.enumerate(cutoff);
    const std::set<MonoidElement> set(list.begin(), list.end());
    EXPECT_EQ(set.size(), list.size());
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    EXPECT_EQ(set, brute_force_closure(gens, cutoff));
    for (const auto& x : list)
      for (const auto& y : list)
        if (x.energy + y.energy <= cutoff) EXPECT_TRUE(set.count(x + y));
    const auto doubled = monoid_sum(g, g).enumerate(cutoff);
    for (const auto& x : list) EXPECT_TRUE(std::count(doubled.begin(), doubled.end(), x));
  }
}
