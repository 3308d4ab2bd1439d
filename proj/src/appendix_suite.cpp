#include "ainf/appendix_suite.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ainf/signs.hpp"

namespace ainf {

int SuiteRng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

TorusForm SuiteRng::form(int dim, int degree, int max_terms, int band) {
  TorusForm out(dim);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> freq(dim);
    for (auto& f : freq) f = uniform(-band, band);
    unsigned mask = 0;
    if (degree < 0) {
      mask = dim == 0 ? 0u : static_cast<unsigned>(uniform(0, (1 << dim) - 1));
    } else {
      std::vector<int> coords(dim);
      for (int j = 0; j < dim; ++j) coords[j] = j;
      for (int j = 0; j < degree; ++j) {
        const int pick = uniform(j, dim - 1);
        std::swap(coords[j], coords[pick]);
        mask |= 1u << coords[j];
      }
    }
    out.add_term(freq, mask, GaussianRational(Scalar(uniform(-3, 3)), Scalar(uniform(-3, 3))));
  }
  return out;
}

TorusMap SuiteRng::projection(int source, int target) {
  std::vector<int> coords(source);
  for (int j = 0; j < source; ++j) coords[j] = j;
  for (int j = 0; j < source; ++j) std::swap(coords[j], coords[uniform(j, source - 1)]);
  coords.resize(target);
  return TorusMap::projection(source, coords);
}

TorusMap SuiteRng::linear(int source, int target) {
  std::vector<std::vector<int>> rows(target, std::vector<int>(source));
  for (auto& r : rows)
    for (auto& x : r) x = uniform(-2, 2);
  return TorusMap::linear(source, std::move(rows));
}

const std::vector<std::string>& appendix_groups() {
  static const std::vector<std::string> groups{
      "pushforward-composition", "projection-formula", "base-change",        "product-pushforward",
      "vanishing-factorization", "stokes-closed",      "correspondence-composition", "adjunction",
  };
  return groups;
}

std::uint64_t appendix_trial_seed(std::uint64_t seed, std::size_t group, int trial) {
  // splitmix64 finalizer over the combined inputs
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (group * 100003ull + static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

std::string compare(const TorusForm& lhs, const TorusForm& rhs) {
  if (lhs == rhs) return {};
  return "residual " + (lhs - rhs).to_string();
}

TorusForm signed_form(const TorusForm& a, int sign) { return sign > 0 ? a : a.scaled(GaussianRational(-1)); }

TorusForm push(const TorusMap& pi, const TorusForm& a, FiberOrientation o) { return fiber_integrate(pi, a, o); }

std::string pushforward_composition(SuiteRng& rng, FiberOrientation o) {
  const int m = rng.uniform(1, 3);
  const int p = rng.uniform(0, m);
  const int q = rng.uniform(0, p);
  auto f = rng.projection(m, p);
  auto g = rng.projection(p, q);
  auto alpha = rng.form(m, -1, 4);
  return compare(push(g.after(f), alpha, o), push(g, push(f, alpha, o), o));
}

std::string projection_formula(SuiteRng& rng, FiberOrientation o) {
  const int m = rng.uniform(1, 3);
  const int n = rng.uniform(0, m);
  const int k = m - n;
  auto pi = rng.projection(m, n);
  auto alpha = rng.form(m, -1, 4);
  const int r = rng.uniform(0, n);
  auto gamma = rng.form(n, r);
  auto right = compare(push(pi, wedge(alpha, pullback(pi, gamma)), o), wedge(push(pi, alpha, o), gamma));
  if (!right.empty()) return "right clause: " + right;
  auto left = compare(push(pi, wedge(pullback(pi, gamma), alpha), o),
                      signed_form(wedge(gamma, push(pi, alpha, o)), sign_of_parity(r * k)));
  return left.empty() ? left : "left clause: " + left;
}

std::string base_change(SuiteRng& rng, FiberOrientation o) {
  const int m = rng.uniform(1, 3);
  const int n = rng.uniform(0, m - 1);
  const int k = m - n;
  const int n1 = rng.uniform(0, 3 - k);
  auto pi = rng.projection(m, n);
  auto g = rng.linear(n1, n);
  auto fp = fiber_product_assemble(pi, g);
  auto alpha = rng.form(m, -1, 4);
  return compare(pullback(g, push(pi, alpha, o)), push(fp.p2, pullback(fp.p1, alpha), o));
}

TorusMap product_map(const TorusMap& a, const TorusMap& b) {
  const int s = a.source_dim() + b.source_dim();
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.rows()) {
    auto row = r;
    row.resize(s, 0);
    rows.push_back(row);
  }
  for (const auto& r : b.rows()) {
    std::vector<int> row(a.source_dim(), 0);
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(row);
  }
  return TorusMap::linear(s, std::move(rows));
}

// (a, b): T^s -> T^{ta + tb} for maps out of the same torus.
TorusMap paired(const TorusMap& a, const TorusMap& b) {
  if (a.source_dim() != b.source_dim()) throw std::invalid_argument("paired maps need a common source");
  auto rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return TorusMap::linear(a.source_dim(), std::move(rows));
}

std::string product_pushforward(SuiteRng& rng, FiberOrientation o) {
  const int m1 = rng.uniform(1, 2);
  const int m2 = rng.uniform(1, 2);
  const int n1 = rng.uniform(0, m1);
  const int n2 = rng.uniform(0, m2);
  const int k1 = m1 - n1, k2 = m2 - n2;
  auto pi1 = rng.projection(m1, n1);
  auto pi2 = rng.projection(m2, n2);
  const int r1 = rng.uniform(0, m1);
  auto rho1 = rng.form(m1, r1);
  auto rho2 = rng.form(m2, -1);
  auto lhs = push(product_map(pi1, pi2), cross(rho1, rho2), o);
  auto rhs = signed_form(cross(push(pi1, rho1, o), push(pi2, rho2, o)), sign_of_parity(k2 * (n1 + k1 + r1)));
  return compare(lhs, rhs);
}

std::string vanishing_factorization(SuiteRng& rng, FiberOrientation o) {
  const int n = rng.uniform(0, 2);
  const int k = rng.uniform(1, 3 - n);
  const int l = rng.uniform(0, k - 1);
  auto f = rng.projection(n + k, n + l);
  auto g = rng.projection(n + l, n);
  auto alpha = rng.form(n + l, -1, 4);
  return compare(push(g.after(f), pullback(f, alpha), o), TorusForm(n));
}

std::string stokes_closed(SuiteRng& rng, FiberOrientation o) {
  const int m = rng.uniform(1, 3);
  const int n = rng.uniform(0, m);
  const int k = m - n;
  auto pi = rng.projection(m, n);
  auto alpha = rng.form(m, -1, 4);
  auto lhs = exterior_d(push(pi, alpha, o)) + signed_form(push(pi, exterior_d(alpha), o), sign_of_parity(k + 1));
  return compare(lhs, TorusForm(n));
}

std::string correspondence_composition(SuiteRng& rng, FiberOrientation o) {
  const int dm = 1;
  const int k = rng.uniform(1, 2);
  const int dx2 = rng.uniform(1, 3 - k);
  auto pi1 = rng.projection(dm + k, dm);  // X1 -> M
  auto pi2 = rng.linear(dx2, dm);         // X2 -> M
  auto g = rng.projection(dx2, rng.uniform(0, dx2));
  const int dm1 = rng.uniform(0, 1), dl = rng.uniform(1, 2), dm2 = rng.uniform(0, 1);
  auto phi1 = rng.linear(dx2, dm1);
  auto f = rng.linear(dm + k, dl);
  auto phi2 = rng.linear(dx2, dm2);
  const int r1 = rng.uniform(0, dm1);
  auto xi1 = rng.form(dm1, r1, 2);
  auto xi2 = rng.form(dl, -1, 3);
  auto xi3 = rng.form(dm2, -1, 2);

  auto fp = fiber_product_assemble(pi1, pi2);
  auto to_triple = paired(paired(phi1.after(fp.p2), f.after(fp.p1)), phi2.after(fp.p2));
  auto lhs = push(g.after(fp.p2), pullback(to_triple, cross(cross(xi1, xi2), xi3)), o);

  auto inner = push(pi1, pullback(f, xi2), o);
  auto outer_map = paired(paired(phi1, pi2), phi2);
  auto rhs = push(g, pullback(outer_map, cross(cross(xi1, inner), xi3)), o);
  return compare(lhs, signed_form(rhs, sign_of_parity(k * r1)));
}

std::string adjunction(SuiteRng& rng, FiberOrientation o) {
  const int m = rng.uniform(1, 3);
  const int n = rng.uniform(0, m);
  auto pi = rng.projection(m, n);
  auto alpha = rng.form(m, -1, 5);
  auto beta = rng.form(n, -1, 5);
  const auto lhs = integrate_total(wedge(alpha, pullback(pi, beta)));
  const auto rhs = integrate_total(wedge(push(pi, alpha, o), beta));
  if (lhs == rhs) return {};
  return "integrals differ: " + format_scalar(lhs.re) + "+" + format_scalar(lhs.im) + "i vs " + format_scalar(rhs.re) +
         "+" + format_scalar(rhs.im) + "i";
}

}  // namespace

std::string appendix_trial(const std::string& group, std::uint64_t trial_seed, FiberOrientation orientation) {
  SuiteRng rng(trial_seed);
  if (group == "pushforward-composition") return pushforward_composition(rng, orientation);
  if (group == "projection-formula") return projection_formula(rng, orientation);
  if (group == "base-change") return base_change(rng, orientation);
  if (group == "product-pushforward") return product_pushforward(rng, orientation);
  if (group == "vanishing-factorization") return vanishing_factorization(rng, orientation);
  if (group == "stokes-closed") return stokes_closed(rng, orientation);
  if (group == "correspondence-composition") return correspondence_composition(rng, orientation);
  if (group == "adjunction") return adjunction(rng, orientation);
  throw std::invalid_argument("unknown identity group '" + group + "'");
}

Report appendix_suite(std::uint64_t seed, int trials, FiberOrientation orientation) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Report report;
  report.check = "torus-suite";
  Json groups = Json::object();
  const auto& names = appendix_groups();
  for (std::size_t gi = 0; gi < names.size(); ++gi) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      const auto ts = appendix_trial_seed(seed, gi, t);
      ++report.instances;
      auto residual = appendix_trial(names[gi], ts, orientation);
      if (residual.empty()) continue;
      if (failures++ == 0)
        report.add_violation(names[gi], Json{{"group", names[gi]}, {"trial", t}, {"trial_seed", ts}}, residual);
    }
    groups[names[gi]] = Json{{"trials", trials}, {"failures", failures}, {"status", failures ? "FAIL" : "PASS"}};
  }
  report.data["groups"] = groups;
  report.data["seed"] = seed;
  report.data["orientation"] = orientation == FiberOrientation::Ambient ? "ambient" : "fiber-first";
  return report;
}

}  // namespace ainf
