#include <gtest/gtest.h>

#include "ainf/ainf_checks.hpp"
#include "ainf/derham.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ainf;

namespace {

using oracle::Series;

AInfAlgebra complex_only() {
  GradedBasis basis({{"a", 0}, {"b", 1}, {"c", 1}, {"d", 2}});
  return AInfAlgebra("cx", basis, EnergyMonoid(), std::nullopt, std::nullopt,
                     {{1, {}, {0}, 1, 1, ""}, {1, {}, {0}, 2, -2, ""}, {1, {}, {1}, 3, 2, ""}, {1, {}, {2}, 3, 1, ""}});
}

AlgElement basis_element(int i, const Scalar& coeff = 1, const Scalar& energy = 0) {
  AlgElement x;
  x.add(i, coeff, energy);
  return x;
}

const SpecDocument& gapped() {
  static const SpecDocument doc = load_fixture("gapped_pair.spec");
  return doc;
}

}  // namespace

TEST(EvalOp, ReproducesStoredConstants) {
  const auto& a = gapped().algebra("C");
  for (const auto& c : a.constants()) {
    std::vector<AlgElement> inputs;
    for (int i : c.inputs) inputs.push_back(basis_element(i));
    const auto out = eval_op(a, c.k, c.beta, inputs);
    EXPECT_EQ(out.coefficient(c.output), NovikovElement::monomial(c.coeff, 0)) << c.id;
  }
}

TEST(EvalOp, IsMultilinear) {
  const auto& a = gapped().algebra("A");
  const int x = a.basis().index_of("x"), y = a.basis().index_of("y");
  std::vector<AlgElement> zero_in{AlgElement{}, basis_element(y)};
  EXPECT_TRUE(eval_op(a, 2, {}, zero_in).is_zero());
  std::vector<AlgElement> one{basis_element(x), basis_element(y)};
  std::vector<AlgElement> two{basis_element(x, 2), basis_element(y)};
  EXPECT_EQ(eval_op(a, 2, {}, two), eval_op(a, 2, {}, one).scaled(2));
  std::vector<AlgElement> wrong_arity{basis_element(x)};
  EXPECT_THROW(eval_op(a, 2, {}, wrong_arity), std::invalid_argument);
  EXPECT_THROW(eval_op(a, 1, {Scalar(1, 3), 0}, wrong_arity), std::invalid_argument);
}

TEST(AinfDefect, ArityZeroIsTheCurvatureTerm) {
  // Only m_{1,(1,0)}(x) = z can follow a curvature term, and no curvature lands in x.
  const auto& a = gapped().algebra("A");
  for (const auto& beta : a.monoid().enumerate(4)) EXPECT_TRUE(ainf_defect(a, beta, {}).empty());
  GradedBasis basis({{"e", 0}, {"w", 2}, {"v", 3}});
  AInfAlgebra bad("bad", basis, EnergyMonoid({{1, 0}}), std::nullopt, 0,
                  {{0, {1, 0}, {}, 1, 1, ""}, {1, {1, 0}, {1}, 2, 1, ""}, {2, {}, {0, 0}, 0, 1, ""}});
  const auto d = ainf_defect(bad, {2, 0}, {});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].index, 2);
  EXPECT_EQ(d[0].coeff, 1);
}

TEST(CheckAinf, CochainComplexPasses) {
  const auto r = check_ainf(complex_only());
  EXPECT_TRUE(r.passed()) << r.summary();
  // d(a) = b - 2c, d(b) = 2d, d(c) = d: d^2(a) = 2d - 2d = 0; flip c -> d to break it.
  const auto broken = complex_only().with_flipped("cx#3");
  EXPECT_FALSE(check_ainf(broken).passed());
}

TEST(CheckAinf, BundledFixturesPass) {
  for (const auto& [name, alg] : gapped().algebras) {
    const auto r = check_ainf(alg);
    EXPECT_TRUE(r.passed()) << name << ": " << r.summary();
  }
}

// Exhaustive oracle: any nonzero defect over all tuples of arity <= 3.
bool has_defect(const AInfAlgebra& alg, const Scalar& max_energy) {
  const int n = alg.dim();
  for (const auto& beta : alg.monoid().enumerate(max_energy)) {
    std::vector<int> tuple;
    for (int k = 0; k <= 3; ++k) {
      tuple.assign(k, 0);
      while (true) {
        if (!ainf_defect(alg, beta, tuple).empty()) return true;
        int p = 0;
        while (p < k && ++tuple[p] == n) tuple[p++] = 0;
        if (p == k) break;
      }
    }
  }
  return false;
}

TEST(CheckAinf, SignFlipsAreDetectedExactlyWhenTheyBreakTheRelations) {
  // Some flips are harmless, e.g. x y = z instead of -z still gives an algebra.
  const auto& alg = gapped().algebra("A");
  int detected = 0;
  for (const auto& c : alg.constants()) {
    const auto flipped = alg.with_flipped(c.id);
    const auto r = check_ainf(flipped, mutation_options(alg, c.id));
    EXPECT_EQ(!r.passed(), has_defect(flipped, 4)) << c.id;
    if (r.passed()) continue;
    ++detected;
    {
      const auto* a = &alg;
      // The counterexample replays to a nonzero defect.
      const auto& loc = r.violations.front().location;
      const MonoidElement beta{parse_scalar(loc["beta"][0].get<std::string>()), loc["beta"][1].get<int>()};
      std::vector<int> tuple;
      for (const auto& n : loc["tuple"]) tuple.push_back(a->basis().index_of(n.get<std::string>()));
      EXPECT_FALSE(ainf_defect(flipped, beta, tuple).empty()) << c.id;
    }
  }
  // Flipping one side of the unit product always breaks associativity.
  EXPECT_GE(detected, 7);
}

TEST(CheckAinf, StableUnderBasisReorderingAndRescaling) {
  const auto& c = gapped().algebra("C");
  const int n = c.dim();
  // New basis position p holds old element perm[p]; old element j is rescaled by s_j.
  std::vector<int> perm(n), where(n);
  for (int p = 0; p < n; ++p) perm[p] = (5 * p + 3) % n;
  for (int p = 0; p < n; ++p) where[perm[p]] = p;
  auto scale = [](int j) { return Scalar(j % 3 + 1, j % 2 + 1); };
  std::vector<BasisElement> elems;
  for (int p = 0; p < n; ++p) elems.push_back(c.basis()[perm[p]]);
  std::vector<Constant> cs;
  for (const auto& k : c.constants()) {
    Constant m = k;
    Scalar f = 1 / scale(k.output);
    for (auto& i : m.inputs) {
      f *= scale(i);
      i = where[i];
    }
    m.output = where[k.output];
    m.coeff = k.coeff / f;  // new basis vectors are s_j times the old ones
    m.id.clear();
    cs.push_back(m);
  }
  // The unit is rescaled too, so drop it from the copy.
  AInfAlgebra moved("moved", GradedBasis(elems), c.monoid(), c.cutoff(), std::nullopt, cs);
  EXPECT_TRUE(check_ainf(moved).passed());
}

TEST(CheckUnit, DeRhamModelPasses) {
  EXPECT_TRUE(check_unit(derham_algebra(2)).passed());
  EXPECT_TRUE(check_unit(gapped().algebra("C")).passed());
}

TEST(CheckUnit, MissingTwistOnOddElementFails) {
  const auto a = derham_algebra(1);
  for (int i = 0; i < a.dim(); ++i) {
    if (a.basis().degree(i) % 2 == 0) continue;
    const auto r = check_unit(drop_unit_twist(a, a.basis().name(i)));
    EXPECT_FALSE(r.passed()) << a.basis().name(i);
  }
}

TEST(CheckUnit, InjectedHigherOperationWithUnitFails) {
  const auto& a = gapped().algebra("A");
  auto cs = a.constants();
  const int e = 0, x = a.basis().index_of("x"), y = a.basis().index_of("y");
  cs.push_back({3, {}, {e, x, y}, a.basis().index_of("y"), 1, "inject"});
  const auto r = check_unit(a.with_constants(cs));
  ASSERT_FALSE(r.passed());
  bool vanishing = false;
  for (const auto& v : r.violations) vanishing |= v.clause.find("vanish") != std::string::npos;
  EXPECT_TRUE(vanishing) << r.summary();
}

TEST(Deform, ZeroCochainIsIdentity) {
  const auto& a = gapped().algebra("A");
  const auto d = deform(a, AlgElement{});
  EXPECT_EQ(d.constants().size(), a.constants().size());
  EXPECT_TRUE(check_ainf(d).passed());
}

TEST(Deform, ProductOnlyGivesCommutatorDifferential) {
  GradedBasis basis({{"e", 0}, {"x", 1}, {"y", 1}, {"z", 2}});
  std::vector<Constant> cs{{2, {}, {1, 2}, 3, 1, ""}, {2, {}, {2, 1}, 3, 1, ""}, {2, {}, {1, 1}, 3, 2, ""}};
  AInfAlgebra a("prod", basis, EnergyMonoid(), std::nullopt, std::nullopt, cs);
  const AlgElement b = basis_element(1, 3, Scalar(1, 2));
  const auto cols = deformed_differential(a, b);
  // m^b_1(y) = m2(b, y) + m2(y, b) = 3T^{1/2}(z + z); m^b_1(x) = 3T^{1/2}(2z + 2z).
  EXPECT_EQ(cols[2].coefficient(3), NovikovElement::monomial(6, Scalar(1, 2)));
  EXPECT_EQ(cols[1].coefficient(3), NovikovElement::monomial(12, Scalar(1, 2)));
  EXPECT_TRUE(cols[0].is_zero());
}

TEST(Deform, RejectsInvalidCochains) {
  const auto& a = gapped().algebra("A");
  EXPECT_THROW(deform(a, basis_element(1, 1, 0)), std::invalid_argument);
  EXPECT_THROW(deform(a, basis_element(3, 1, 1)), std::invalid_argument);
  AlgElement mixed = basis_element(1, 1, 1);
  mixed.add(3, 1, 1);
  EXPECT_THROW(mc_defect(a, mixed), std::invalid_argument);
}

TEST(Deform, BoundingCochainSquaresToZeroAndKeepsUnit) {
  const auto& a = gapped().algebra("A");
  const auto& b = gapped().cochain("b1").element;
  ASSERT_TRUE(mc_defect(a, b).remainder.is_zero());
  const auto cols = deformed_differential(a, b);
  for (int j = 0; j < a.dim(); ++j) {
    AlgElement sq;
    for (const auto& [i, c] : cols[j].coeffs())
      for (const auto& [k, d] : cols[i].coeffs()) {
        AlgElement term;
        term.add(k, c * d);
        sq += term;
      }
    EXPECT_TRUE(sq.is_zero()) << "column " << j << ": " << sq.to_string(a.basis());
  }
  const auto deformed = deform(a, b);
  EXPECT_TRUE(check_unit(deformed).passed());
  EXPECT_TRUE(check_ainf(deformed).passed());
}

TEST(McDefect, CurvatureOnlyGivesPotential) {
  const auto& a = gapped().algebra("B");  // m_{0,(1,2)} = 5e, no other curvature
  const auto d = mc_defect(a, AlgElement{});
  EXPECT_EQ(d.potential, NovikovElement::monomial(5, 1));
  EXPECT_TRUE(d.remainder.is_zero());
  const auto& c = gapped().algebra("A");  // also m_{0,(3/2,0)} = z
  EXPECT_FALSE(mc_defect(c, AlgElement{}).remainder.is_zero());
}

TEST(McDefect, AgreesWithBruteForceOracleAndSolvesOrderByOrder) {
  const auto& a = gapped().algebra("A");
  const int x = a.basis().index_of("x"), unit = *a.unit();
  std::vector<Scalar> bounding;
  for (int num = -6; num <= 6; ++num) {
    const Scalar s = Scalar(num) / 2;
    const AlgElement b = basis_element(x, s, Scalar(1, 2));
    const auto d = mc_defect(a, b);
    auto expected = oracle::maurer_cartan(a, b);
    Series p = expected[unit];
    expected.erase(unit);
    EXPECT_EQ(d.potential.terms(), p) << "s=" << s;
    EXPECT_EQ(oracle::as_vec(d.remainder), expected) << "s=" << s;
    if (expected.empty()) bounding.push_back(s);
  }
  // The T^{3/2} z coefficient is 1 + s, so s = -1 is the unique solution.
  EXPECT_EQ(bounding, std::vector<Scalar>{Scalar(-1)});
  EXPECT_EQ(gapped().cochain("b1").element, basis_element(x, -1, Scalar(1, 2)));
}

TEST(McDefect, TruncationDropsBoundaryEnergies) {
  const auto& a = gapped().algebra("B");
  const auto d = mc_defect(a, AlgElement(Scalar(1)), Scalar(1));
  EXPECT_TRUE(d.potential.is_zero());  // T^1 vanishes modulo T^1
  const auto d2 = mc_defect(a.truncated(2), AlgElement(Scalar(2)));
  EXPECT_EQ(d2.potential, NovikovElement::monomial(5, 1, Scalar(2)));
}
