#include <gtest/gtest.h>

#include "ainf/appendix_suite.hpp"
#include "ainf/derham.hpp"
#include "ainf/torus.hpp"

using namespace ainf;

namespace {

using G = GaussianRational;

TorusForm term(int dim, std::vector<int> freq, const std::vector<int>& idx, G c = G(1)) {
  return TorusForm::term(dim, std::move(freq), idx, std::move(c));
}

int deg(const TorusForm& a) { return a.degree().value_or(0); }

// Degree-homogeneous random pair on T^dim.
struct Pair {
  TorusForm a, b;
};

Pair random_pair(SuiteRng& rng, int dim) {
  const int da = rng.uniform(0, dim), db = rng.uniform(0, dim);
  return {rng.form(dim, da), rng.form(dim, db)};
}

}  // namespace

TEST(Wedge, Basics) {
  EXPECT_EQ(wedge(term(2, {0, 0}, {1}), term(2, {0, 0}, {2})), term(2, {0, 0}, {1, 2}));
  EXPECT_EQ(wedge(term(2, {0, 0}, {2}), term(2, {0, 0}, {1})), term(2, {0, 0}, {1, 2}, G(-1)));
  EXPECT_EQ(term(2, {0, 0}, {2, 1}), term(2, {0, 0}, {1, 2}, G(-1)));
  EXPECT_TRUE(wedge(term(2, {0, 0}, {1}), term(2, {1, 0}, {1})).is_zero());
  EXPECT_EQ(wedge(term(2, {1, -1}, {}), term(2, {2, 3}, {}, G(0, 1))), term(2, {3, 2}, {}, G(0, 1)));
  EXPECT_THROW(wedge(TorusForm(1), TorusForm(2)), std::invalid_argument);
}

TEST(Wedge, GradedCommutative) {
  SuiteRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform(1, 3);
    const auto [a, b] = random_pair(rng, dim);
    const int s = deg(a) * deg(b) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(a, b), wedge(b, a).scaled(G(s)));
  }
}

TEST(ExteriorD, SquareZeroAndLeibniz) {
  EXPECT_TRUE(exterior_d(TorusForm::constant(3, G(5, -2))).is_zero());
  EXPECT_EQ(exterior_d(term(2, {3, -1}, {})), term(2, {3, -1}, {1}, G(3)) + term(2, {3, -1}, {2}, G(-1)));
  SuiteRng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform(1, 3);
    const auto [a, b] = random_pair(rng, dim);
    EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero());
    const int s = deg(a) % 2 ? -1 : 1;
    EXPECT_EQ(exterior_d(wedge(a, b)), wedge(exterior_d(a), b) + wedge(a, exterior_d(b)).scaled(G(s)));
  }
}

TEST(Pullback, ProjectionAndFunctoriality) {
  const auto a = term(1, {2}, {1}, G(Scalar(1, 3)));
  EXPECT_EQ(pullback(TorusMap::identity(1), a), a);
  EXPECT_EQ(pullback(TorusMap::projection(2, {0}), a), term(2, {2, 0}, {1}, G(Scalar(1, 3))));
  // Doubling map: e_f -> e_{2f}, dx -> 2 dx.
  EXPECT_EQ(pullback(TorusMap::linear(1, {{2}}), a), term(1, {4}, {1}, G(Scalar(2, 3))));
  SuiteRng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n1 = rng.uniform(1, 3), n2 = rng.uniform(1, 3), n3 = rng.uniform(1, 3);
    const auto psi = rng.linear(n1, n2), phi = rng.linear(n2, n3);
    const auto form = rng.form(n3);
    EXPECT_EQ(pullback(phi.after(psi), form), pullback(psi, pullback(phi, form)));
    // Pullback is a DGA map.
    EXPECT_EQ(pullback(phi, exterior_d(form)), exterior_d(pullback(phi, form)));
  }
}

TEST(FiberIntegrate, LocalFormulaExamples) {
  const auto fiber_t = TorusMap::projection(2, {1});
  EXPECT_EQ(fiber_integrate(fiber_t, term(2, {0, 0}, {1, 2})), term(1, {0}, {1}));
  const auto fiber_second = TorusMap::projection(2, {0});
  EXPECT_EQ(fiber_integrate(fiber_second, term(2, {0, 0}, {1, 2})), term(1, {0}, {1}, G(-1)));
  EXPECT_EQ(fiber_integrate(fiber_second, term(2, {0, 0}, {1, 2}), FiberOrientation::Ambient), term(1, {0}, {1}));
  EXPECT_TRUE(fiber_integrate(fiber_t, term(2, {1, 0}, {1, 2})).is_zero());
  EXPECT_TRUE(fiber_integrate(fiber_t, term(2, {0, 0}, {2})).is_zero());
  EXPECT_EQ(fiber_integrate(fiber_t, term(2, {0, 2}, {1}, G(0, 1))), term(1, {2}, {}, G(0, 1)));
  EXPECT_THROW(fiber_integrate(TorusMap::linear(2, {{1, 1}}), term(2, {0, 0}, {1})), std::invalid_argument);
}

TEST(FiberIntegrate, FlippedProjectionFormulaSign) {
  // pi_*(pi^* gamma ^ alpha) = (-1)^{|gamma| k} gamma ^ pi_* alpha with gamma = dx, k = 1.
  const auto pi = TorusMap::projection(2, {1});
  const auto gamma = term(1, {0}, {1});
  const auto alpha = term(2, {0, 1}, {1});
  EXPECT_EQ(fiber_integrate(pi, wedge(pullback(pi, gamma), alpha)), wedge(gamma, fiber_integrate(pi, alpha)).scaled(G(-1)));
}

TEST(FiberIntegrate, DefiningAdjunction) {
  SuiteRng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.uniform(1, 3), n = rng.uniform(0, m - 1) + 0;
    const auto pi = rng.projection(m, n);
    const int k = m - n;
    const auto beta = rng.form(n);
    // Pick alpha so that alpha ^ pi^* beta can reach top degree.
    const int db = beta.degree().value_or(0);
    const auto alpha = rng.form(m, std::max(0, m - db));
    const G lhs = integrate_total(wedge(alpha, pullback(pi, beta)));
    const G rhs = n == 0 ? integrate_total(fiber_integrate(pi, alpha, FiberOrientation::Ambient)) * integrate_total(beta)
                         : integrate_total(wedge(fiber_integrate(pi, alpha, FiberOrientation::Ambient), beta));
    EXPECT_EQ(lhs, rhs) << "m=" << m << " k=" << k;
  }
}

TEST(FiberProduct, Assembly) {
  const auto pi = TorusMap::projection(2, {1});
  const auto id = fiber_product_assemble(pi, TorusMap::identity(1));
  EXPECT_EQ(id.dim, 2);
  EXPECT_EQ(id.p1, TorusMap::identity(2));
  const auto dbl = fiber_product_assemble(pi, TorusMap::linear(1, {{2}}));
  EXPECT_EQ(dbl.p1, TorusMap::linear(2, {{1, 0}, {0, 2}}));
  SuiteRng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = rng.uniform(1, 3), n = rng.uniform(1, m), n1 = rng.uniform(1, 3);
    const auto p = rng.projection(m, n);
    if (m == n && fiber_orientation_sign(p) < 0) {
      // No fiber coordinate to absorb the orientation reversal.
      EXPECT_THROW(fiber_product_assemble(p, TorusMap::identity(n)), std::invalid_argument);
      continue;
    }
    const auto g = rng.linear(n1, n);
    const auto fp = fiber_product_assemble(p, g);
    EXPECT_EQ(p.after(fp.p1), g.after(fp.p2));
    EXPECT_EQ(fp.dim, m - n + n1);
  }
}

TEST(AppendixSuite, AllGroupsExactWithAmbientOrientation) {
  const auto r = appendix_suite(7, 200);
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(appendix_groups().size(), 8u);
  EXPECT_EQ(r.instances, 1600u);
}

TEST(AppendixSuite, LeadingFiberOrientationBreaksSomeGroups) {
  // Moving fiber differentials to the front is only correct for leading fibers.
  const auto r = appendix_suite(7, 50, FiberOrientation::FiberFirst);
  EXPECT_FALSE(r.passed());
  bool adjunction = false;
  for (const auto& v : r.violations) adjunction |= v.clause.find("adjunction") != std::string::npos;
  EXPECT_TRUE(adjunction) << r.summary();
}

TEST(AppendixSuite, TrialsReplayFromTheirSeed) {
  for (const auto& g : appendix_groups())
    for (int t = 0; t < 5; ++t)
      EXPECT_EQ(appendix_trial(g, appendix_trial_seed(3, 0, t), FiberOrientation::Ambient), "") << g;
  EXPECT_NE(appendix_trial_seed(3, 0, 0), appendix_trial_seed(3, 1, 0));
  EXPECT_NE(appendix_trial_seed(3, 0, 0), appendix_trial_seed(4, 0, 0));
}

TEST(DeRhamModel, SizesAndRoundTrip) {
  EXPECT_EQ(derham_algebra(1).dim(), 10);
  EXPECT_EQ(derham_algebra(2).dim(), 100);
  EXPECT_EQ(derham_algebra(1, 0).dim(), 2);
  const auto keys = derham_keys(2);
  for (std::size_t i = 0; i < keys.size(); i += 7) {
    const Combination<Scalar> x{{static_cast<int>(i), Scalar(3)}};
    EXPECT_EQ(derham_from_form(derham_to_form(2, 2, x)), x);
  }
  EXPECT_EQ(derham_name(FormKey{{1, -2}, 3u}), "e(1,-2)dx12");
  EXPECT_THROW(derham_from_form(term(1, {3}, {})), std::invalid_argument);
  EXPECT_THROW(derham_from_form(term(1, {1}, {}, G(0, 1))), std::invalid_argument);
}

TEST(DeRhamModel, OperationsAreSignedFormOperations) {
  // m_1 = (-1)^{n+1} d and m_2(a, b) = (-1)^{|a|} a ^ b where the band allows it.
  for (int n : {1, 2}) {
    const auto alg = derham_algebra(n);
    const auto keys = derham_keys(n);
    for (int i = 0; i < alg.dim(); ++i) {
      const int in1[] = {i};
      const auto form = derham_to_form(n, 2, {{i, Scalar(1)}});
      const auto d = exterior_d(form).scaled(G(n % 2 ? 1 : -1));
      EXPECT_EQ(alg.op(1, {}, in1), derham_from_form(d));
      for (int j = 0; j < alg.dim(); j += 3) {
        bool allowed = true;
        for (int c = 0; c < n; ++c) {
          const int f = keys[i].freq[c], g = keys[j].freq[c];
          allowed = allowed && f * g >= 0 && std::abs(f + g) <= 2;
        }
        if (!allowed) continue;
        const int in2[] = {i, j};
        const auto w = wedge(form, derham_to_form(n, 2, {{j, Scalar(1)}}))
                           .scaled(G(mask_degree(keys[i].mask) % 2 ? -1 : 1));
        EXPECT_EQ(alg.op(2, {}, in2), derham_from_form(w));
      }
    }
  }
}
