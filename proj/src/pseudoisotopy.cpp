#include "ainf/pseudoisotopy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ainf/ainf_checks.hpp"
#include "ainf/commuting.hpp"
#include "ainf/product_model.hpp"
#include "ainf/relations.hpp"

namespace ainf {

namespace {

void validate_family(const std::string& label, const GradedBasis& basis, const EnergyMonoid& monoid,
                     const std::optional<Scalar>& cutoff, std::vector<IsoConstant>& constants, int shift) {
  std::set<std::tuple<int, MonoidElement, std::vector<int>, int>> keys;
  for (std::size_t n = 0; n < constants.size(); ++n) {
    auto& c = constants[n];
    if (c.id.empty()) c.id = label + "#" + std::to_string(n);
    if (c.k < 0 || static_cast<std::size_t>(c.k) != c.inputs.size())
      throw std::invalid_argument(c.id + ": arity does not match the number of inputs");
    for (int i : c.inputs)
      if (i < 0 || i >= basis.size()) throw std::invalid_argument(c.id + ": input index out of range");
    if (c.output < 0 || c.output >= basis.size()) throw std::invalid_argument(c.id + ": output index out of range");
    if (c.coeff.is_zero()) throw std::invalid_argument(c.id + ": zero coefficient");
    if (shift == 2 && c.k == 0 && c.beta.is_zero()) throw std::invalid_argument(c.id + ": m_{0,0} must vanish");
    if (!monoid.contains(c.beta)) throw std::invalid_argument(c.id + ": beta " + c.beta.to_string() + " is not in the monoid");
    if (cutoff && c.beta.energy > *cutoff) throw std::invalid_argument(c.id + ": energy exceeds the cutoff");
    if (!degree_ok(basis, c.k, c.beta, c.inputs, c.output, shift))
      throw std::invalid_argument(c.id + ": output " + basis.name(c.output) + " violates the degree constraint");
    if (!keys.emplace(c.k, c.beta, c.inputs, c.output).second)
      throw std::invalid_argument(c.id + ": duplicate constant");
  }
}

std::vector<IsoConstant> merge_iso(const std::vector<IsoConstant>& x, const std::vector<IsoConstant>& y) {
  std::map<std::tuple<int, MonoidElement, std::vector<int>, int>, TPoly> acc;
  for (const auto* list : {&x, &y})
    for (const auto& c : *list) acc[{c.k, c.beta, c.inputs, c.output}] += c.coeff;
  std::vector<IsoConstant> out;
  for (const auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    const auto& [k, beta, inputs, output] = key;
    out.push_back({k, beta, inputs, output, coeff, ""});
  }
  return out;
}

std::vector<IsoConstant> strip_ids(std::vector<IsoConstant> v) {
  for (auto& c : v) c.id.clear();
  return v;
}

}  // namespace

Pseudoisotopy::Pseudoisotopy(std::string name, GradedBasis basis, EnergyMonoid monoid, std::optional<Scalar> cutoff,
                             std::optional<int> unit, int parity, std::vector<IsoConstant> m, std::vector<IsoConstant> c)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      monoid_(std::move(monoid)),
      cutoff_(std::move(cutoff)),
      unit_(unit),
      parity_(ainf::parity(parity)),
      m_(std::move(m)),
      c_(std::move(c)) {
  if (cutoff_ && sgn(*cutoff_) <= 0) throw std::invalid_argument(name_ + ": cutoff must be positive");
  if (unit_ && (*unit_ < 0 || *unit_ >= basis_.size() || basis_.degree(*unit_) != 0))
    throw std::invalid_argument(name_ + ": unit must be a degree-0 basis element");
  validate_family(name_ + ".m", basis_, monoid_, cutoff_, m_, 2);
  validate_family(name_ + ".c", basis_, monoid_, cutoff_, c_, 1);
  std::vector<MonoidElement> all;
  for (const auto* list : {&m_, &c_})
    for (const auto& x : *list) all.push_back(x.beta);
  betas_ = BetaSet(std::move(all));
  for (const auto& x : m_) m_table_.add(x.k, *betas_.find(x.beta), x.inputs, x.output, x.coeff);
  for (const auto& x : c_) c_table_.add(x.k, *betas_.find(x.beta), x.inputs, x.output, x.coeff);
}

Pseudoisotopy Pseudoisotopy::constant(const AInfAlgebra& alg, int parity, const std::string& name) {
  std::vector<IsoConstant> m;
  for (const auto& c : alg.constants()) m.push_back({c.k, c.beta, c.inputs, c.output, TPoly(c.coeff), ""});
  Pseudoisotopy p(name.empty() ? alg.name() + "_const" : name, alg.basis(), alg.monoid(), alg.cutoff(), alg.unit(),
                  parity, std::move(m), {});
  return p.with_endpoints(alg, alg);
}

AInfAlgebra Pseudoisotopy::at(const Scalar& t, const std::string& name) const {
  std::vector<Constant> out;
  for (const auto& c : m_) {
    Scalar v = c.coeff.at(t);
    if (!is_zero(v)) out.push_back({c.k, c.beta, c.inputs, c.output, v, ""});
  }
  return AInfAlgebra(name.empty() ? name_ + "(" + format_scalar(t) + ")" : name, basis_, monoid_, cutoff_, unit_,
                     std::move(out));
}

Pseudoisotopy Pseudoisotopy::with_endpoints(AInfAlgebra start, AInfAlgebra end) const {
  Pseudoisotopy out = *this;
  out.start_ = std::move(start);
  out.end_ = std::move(end);
  return out;
}

Pseudoisotopy Pseudoisotopy::with_constants(std::vector<IsoConstant> m, std::vector<IsoConstant> c) const {
  Pseudoisotopy out(name_, basis_, monoid_, cutoff_, unit_, parity_, std::move(m), std::move(c));
  out.start_ = start_;
  out.end_ = end_;
  return out;
}

Pseudoisotopy Pseudoisotopy::with_flipped(const std::string& id) const {
  auto m = m_;
  auto c = c_;
  for (auto* list : {&m, &c})
    for (auto& x : *list)
      if (x.id == id) {
        x.coeff = -x.coeff;
        return with_constants(std::move(m), std::move(c));
      }
  throw std::invalid_argument("no isotopy constant with id '" + id + "'");
}

bool same_operations(const AInfAlgebra& a, const AInfAlgebra& b) {
  if (a.basis().elements() != b.basis().elements() || a.cutoff() != b.cutoff() || a.unit() != b.unit()) return false;
  auto canon = [](const AInfAlgebra& x) {
    std::map<std::tuple<int, MonoidElement, std::vector<int>, int>, Scalar> out;
    for (const auto& c : x.constants()) out[{c.k, c.beta, c.inputs, c.output}] = c.coeff;
    return out;
  };
  return canon(a) == canon(b);
}

Combination<TPoly> isotopy_defect(const Pseudoisotopy& p, const MonoidElement& beta, const std::vector<int>& tuple,
                                  const IsotopyCheckOptions& opts) {
  Accumulator<TPoly> acc;
  const int k = static_cast<int>(tuple.size());
  if (auto b = p.betas().find(beta)) {
    if (const auto* v = p.m_table().find(k, *b, tuple)) {
      const Scalar s = opts.drop_parity_factor ? 1 : sign_of_parity(p.parity() + 1);
      for (const auto& t : *v) acc.add(t.index, t.coeff.derivative() * TPoly(s));
    }
  }
  const auto splits = p.betas().splits(beta);
  const auto& degrees = p.basis().degrees();
  compose_sum(p.m_table(), p.c_table(), splits, tuple, degrees, false, TPoly(Scalar(-1)), acc);
  compose_sum(p.c_table(), p.m_table(), splits, tuple, degrees, true, TPoly(Scalar(1)), acc);
  return acc.take();
}

namespace {

int isotopy_arity_bound(const Pseudoisotopy& p) {
  const int m = p.m_table().max_arity();
  const int c = p.c_table().max_arity();
  return std::max({0, m, m + c - 1});
}

}  // namespace

Report check_pseudoisotopy(const Pseudoisotopy& p, const IsotopyCheckOptions& opts) {
  Report report;
  report.check = "check-pseudoisotopy";
  const auto& basis = p.basis();

  for (const auto& c : p.m_constants()) {
    ++report.instances;
    if (c.beta.is_zero() && !c.coeff.is_constant())
      report.add_violation("t-independence", Json{{"constant", c.id}},
                           constant_label(basis, c.k, c.beta, c.inputs) + " depends on t: " + c.coeff.to_string());
  }
  for (const auto& c : p.c_constants()) {
    ++report.instances;
    if (c.beta.is_zero())
      report.add_violation("homotopy-zero-energy", Json{{"constant", c.id}}, c.id + " is a homotopy at beta = 0");
    if (p.unit() && std::find(c.inputs.begin(), c.inputs.end(), *p.unit()) != c.inputs.end())
      report.add_violation("homotopy-unit", Json{{"constant", c.id}}, c.id + " has a unit input");
  }

  const auto targets = relation_targets(p.betas(), p.cutoff());
  report.instances += scan_ainf<TPoly>(
      p.m_table(), p.betas(), targets, basis, CheckOptions{},
      [&](const MonoidElement& beta, int n, const std::vector<int>& tuple, const Combination<TPoly>& defect) {
        report.add_violation("ainf-relation", location_json(basis, beta, n, tuple),
                             "defect " + combination_to_string(defect, basis));
        return true;
      });

  const int k_max = isotopy_arity_bound(p);
  for (const auto& beta : targets) {
    const auto splits = p.betas().splits(beta);
    const auto b = p.betas().find(beta);
    for (int k = 0; k <= k_max; ++k) {
      if (!(b && p.m_table().has(*b, k)) && !compose_possible(p.m_table(), p.c_table(), splits, k) &&
          !compose_possible(p.c_table(), p.m_table(), splits, k))
        continue;
      for (TupleIterator it(basis.size(), k); !it.done(); it.next()) {
        ++report.instances;
        auto defect = isotopy_defect(p, beta, *it, opts);
        if (defect.empty()) continue;
        report.add_violation("isotopy-equation", location_json(basis, beta, k, *it),
                             "defect " + combination_to_string(defect, basis));
        break;
      }
    }
  }

  if (p.start()) {
    ++report.instances;
    if (!same_operations(p.at(0), *p.start()))
      report.add_violation("endpoint-start", Json{{"endpoint", p.start()->name()}}, "m^0 differs from the start algebra");
  }
  if (p.end()) {
    ++report.instances;
    if (!same_operations(p.at(1), *p.end()))
      report.add_violation("endpoint-end", Json{{"endpoint", p.end()->name()}}, "m^1 differs from the end algebra");
  }
  report.data = Json{{"parity", p.parity()}, {"targets", targets.size()}, {"max_isotopy_arity", k_max}};
  return report;
}

namespace {

// m^tau_beta = m_end_beta + (-1)^n int_tau^1 S1 + (-1)^{n+1} int_tau^1 S2 on every tuple.
std::vector<IsoConstant> integrate_level(const Pseudoisotopy& p, const AInfAlgebra& m_end, const MonoidElement& beta,
                                         int k_max) {
  std::vector<IsoConstant> out;
  const auto splits = p.betas().splits(beta);
  const auto& degrees = p.basis().degrees();
  const TPoly s1(Scalar(sign_of_parity(p.parity())));
  const TPoly s2(Scalar(sign_of_parity(p.parity() + 1)));
  const auto end_beta = m_end.betas().find(beta);
  for (int k = 0; k <= k_max; ++k) {
    if (!(end_beta && m_end.table().has(*end_beta, k)) && !compose_possible(p.m_table(), p.c_table(), splits, k) &&
        !compose_possible(p.c_table(), p.m_table(), splits, k))
      continue;
    for (TupleIterator it(p.dim(), k); !it.done(); it.next()) {
      Accumulator<TPoly> flow;
      compose_sum(p.m_table(), p.c_table(), splits, *it, degrees, false, s1, flow);
      compose_sum(p.c_table(), p.m_table(), splits, *it, degrees, true, s2, flow);
      Accumulator<TPoly> value;
      for (const auto& t : flow.take()) value.add(t.index, t.coeff.integral_to_one());
      for (const auto& t : m_end.op(k, beta, *it)) value.add(t.index, TPoly(t.coeff));
      for (auto& t : value.take()) out.push_back({k, beta, *it, t.index, std::move(t.coeff), ""});
    }
  }
  return out;
}

std::vector<Scalar> energy_levels(const EnergyMonoid& g, const Scalar& cutoff) {
  std::vector<Scalar> out;
  for (const auto& b : g.enumerate(cutoff))
    if (out.empty() || out.back() != b.energy) out.push_back(b.energy);
  return out;
}

}  // namespace

Pseudoisotopy solve_isotopy_from_end(const AInfAlgebra& m_end, const std::vector<IsoConstant>& c, int parity,
                                     const std::string& name) {
  if (!m_end.cutoff()) throw std::invalid_argument(m_end.name() + ": isotopy solving needs a truncated end algebra");
  const Scalar E = *m_end.cutoff();
  const auto& g = m_end.monoid();
  const std::string iso_name = name.empty() ? m_end.name() + "_iso" : name;
  std::vector<IsoConstant> m;
  const auto c_clean = strip_ids(c);
  for (const auto& level : energy_levels(g, E)) {
    const Pseudoisotopy current(iso_name, m_end.basis(), g, E, m_end.unit(), parity, m, c_clean);
    const int k_max = std::max(m_end.max_arity(), isotopy_arity_bound(current));
    std::vector<IsoConstant> added;
    for (const auto& beta : g.enumerate(E))
      if (beta.energy == level) {
        auto part = integrate_level(current, m_end, beta, k_max);
        added.insert(added.end(), part.begin(), part.end());
      }
    m.insert(m.end(), added.begin(), added.end());
  }
  Pseudoisotopy out(iso_name, m_end.basis(), g, E, m_end.unit(), parity, std::move(m), c_clean);
  return out.with_endpoints(out.at(0, m_end.name() + "^0"), m_end);
}

Extension extend_one_level(const AInfAlgebra& m0, const AInfAlgebra& m1, const Pseudoisotopy& p) {
  if (!m0.cutoff() || !m1.cutoff() || !p.cutoff())
    throw std::invalid_argument("extension needs truncated algebras and isotopy");
  const Scalar E0 = *m0.cutoff();
  const Scalar E1 = *m1.cutoff();
  if (*p.cutoff() != E0) throw std::invalid_argument("isotopy cutoff differs from the start algebra's");
  if (!(E0 < E1)) throw std::invalid_argument("target cutoff must exceed the start cutoff");
  if (m0.basis().elements() != m1.basis().elements() || m0.basis().elements() != p.basis().elements())
    throw std::invalid_argument("extension inputs have different bases");
  if (!same_operations(p.at(0, m0.name()), m0)) throw std::invalid_argument("isotopy does not start at " + m0.name());
  if (!same_operations(p.at(1), m1.truncated(E0)))
    throw std::invalid_argument("isotopy does not end at " + m1.name() + " modulo the start cutoff");

  const auto g = monoid_sum(monoid_sum(m1.monoid(), p.monoid()), m0.monoid());
  std::vector<MonoidElement> fresh;
  for (const auto& b : g.enumerate(E1)) {
    if (b.energy > E0 && b.energy < E1)
      throw std::invalid_argument("energy " + format_scalar(b.energy) +
                                  " lies strictly between the cutoffs; extend one level at a time");
    if (b.energy == E1) fresh.push_back(b);
  }
  const Pseudoisotopy base(p.name(), p.basis(), g, E1, p.unit(), p.parity(), strip_ids(p.m_constants()),
                           strip_ids(p.c_constants()));
  const int k_max = std::max(m1.max_arity(), isotopy_arity_bound(base));
  auto m = strip_ids(p.m_constants());
  for (const auto& beta : fresh) {
    auto part = integrate_level(base, m1, beta, k_max);
    m.insert(m.end(), part.begin(), part.end());
  }
  Pseudoisotopy ext(p.name(), p.basis(), g, E1, p.unit(), p.parity(), std::move(m), strip_ids(p.c_constants()));
  AInfAlgebra alg = ext.at(0, m0.name());
  return {alg, ext.with_endpoints(alg, m1)};
}

Extension extend_to(const AInfAlgebra& m0, const std::vector<AInfAlgebra>& targets, const Pseudoisotopy& p) {
  if (targets.empty()) throw std::invalid_argument("extension chain is empty");
  if (!m0.cutoff()) throw std::invalid_argument("extension needs a truncated start algebra");
  Extension cur{m0, p};
  Scalar reached = *m0.cutoff();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& target = targets[i];
    if (!target.cutoff() || !(*target.cutoff() > reached))
      throw std::invalid_argument("chain cutoffs must increase");
    if (i > 0 && !same_operations(target.truncated(*targets[i - 1].cutoff()), targets[i - 1]))
      throw std::invalid_argument(target.name() + " does not agree with " + targets[i - 1].name() +
                                  " below its cutoff; composing isotopies is not supported");
    const auto g = monoid_sum(target.monoid(), cur.isotopy.monoid());
    for (const auto& level : energy_levels(g, *target.cutoff())) {
      if (level <= reached) continue;
      cur = extend_one_level(cur.algebra, target.truncated(level), cur.isotopy);
      reached = level;
    }
    if (reached != *target.cutoff()) {
      // No monoid energy at the cutoff itself: only the cutoff moves.
      cur.algebra = cur.algebra.truncated(*target.cutoff());
      cur = extend_one_level(cur.algebra.truncated(reached), target, cur.isotopy);
      reached = *target.cutoff();
    }
  }
  return cur;
}

Report check_commuting_isotopy(const Pseudoisotopy& pc, const Pseudoisotopy& pa, const Pseudoisotopy& pb,
                               const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, int n1, int n2,
                               const CommutingIsotopyOptions& opts) {
  if (emb_a.source.basis().elements() != pa.basis().elements() ||
      emb_b.source.basis().elements() != pb.basis().elements() ||
      emb_a.target.basis().elements() != pc.basis().elements() ||
      emb_b.target.basis().elements() != pc.basis().elements())
    throw std::invalid_argument("embeddings do not match the isotopies' bases");
  emb_a.validate();
  emb_b.validate();
  Report report;
  report.check = "check-commuting-isotopy";
  report.instances += 3;
  auto parity_clause = [&](const Pseudoisotopy& p, int expected) {
    if (p.parity() != parity(expected))
      report.add_violation("parity", Json{{"isotopy", p.name()}, {"expected", parity(expected)}},
                           p.name() + " has parity " + std::to_string(p.parity()));
  };
  parity_clause(pa, n1);
  parity_clause(pb, n2);
  parity_clause(pc, n1 + n2);

  const auto c0 = pc.at(0);
  const auto ka = emb_a.with_target(c0);
  const auto kb = emb_b.with_target(c0);
  std::vector<std::vector<Combination<Scalar>>> kmat(pa.dim(), std::vector<Combination<Scalar>>(pb.dim()));
  for (int a = 0; a < pa.dim(); ++a)
    for (int b = 0; b < pb.dim(); ++b) kmat[a][b] = kunneth_K(ka, kb, a, b);

  std::vector<MonoidElement> targets{MonoidElement{}};
  for (const auto* p : {&pa, &pb, &pc})
    for (const auto& b : p->betas().elements())
      if (!pc.cutoff() || b.energy <= *pc.cutoff()) targets.push_back(b);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  CommutingFrame frame{&pa.basis(),
                       &pb.basis(),
                       &pc.basis(),
                       &emb_a.images,
                       &emb_b.images,
                       std::move(kmat),
                       [&](const MonoidElement& b) { return pa.monoid().contains(b); },
                       [&](const MonoidElement& b) { return pb.monoid().contains(b); },
                       targets};

  CommutingFamily<TPoly> m_family{"m", &pc.m_table(), &pc.betas(), &pa.m_table(), &pa.betas(), &pb.m_table(),
                                  &pb.betas()};
  m_family.max_arity =
      std::max({0, pa.m_table().max_arity(), pb.m_table().max_arity(), pc.m_table().max_arity()});
  check_commuting_family(frame, m_family, CommutingMode::Isotopy, report);

  CommutingFamily<TPoly> c_family{"c", &pc.c_table(), &pc.betas(), &pa.c_table(), &pa.betas(), &pb.c_table(),
                                  &pb.betas()};
  c_family.twist_a = opts.drop_n2_twist ? 1 : sign_of_parity(n2);
  c_family.twist_b = sign_of_parity(n1);
  c_family.insertion_shift = 0;
  c_family.max_arity =
      std::max({0, pa.c_table().max_arity(), pb.c_table().max_arity(), pc.c_table().max_arity()});
  check_commuting_family(frame, c_family, CommutingMode::Isotopy, report);

  report.data = Json{{"n1", n1}, {"n2", n2}, {"betas", targets.size()}};
  return report;
}

ProductIsotopy tensor_isotopy_with_commutative(const Pseudoisotopy& pa, const AInfAlgebra& b_in, int n2,
                                               const std::string& name) {
  if (!pa.unit()) throw std::invalid_argument(pa.name() + ": isotopy factor needs a unit");
  AInfAlgebra b = b_in;
  if (b.cutoff() != pa.cutoff()) {
    if (b.cutoff() || !pa.cutoff()) throw std::invalid_argument("factors have different truncation modes");
    b = b.truncated(*pa.cutoff());
  }
  require_commutative_dga(b);
  const auto a0 = pa.at(0);
  std::vector<IsoConstant> from_b;
  for (const auto& c : commutative_factor_ops(a0, b)) from_b.push_back({c.k, c.beta, c.inputs, c.output, TPoly(c.coeff), ""});
  auto m = merge_iso(tensor_lift<TPoly>(pa.basis(), pa.m_constants(), b), from_b);
  auto c = tensor_lift<TPoly>(pa.basis(), pa.c_constants(), b, sign_of_parity(n2));
  const int db = b.dim();
  Pseudoisotopy pc(name.empty() ? pa.name() + "x" + b.name() : name, tensor_basis(pa.basis(), b.basis()),
                   monoid_sum(pa.monoid(), b.monoid()), pa.cutoff(), *pa.unit() * db + *b.unit(), pa.parity() + n2,
                   std::move(m), std::move(c));
  pc = pc.with_endpoints(pc.at(0), pc.at(1));
  auto pb = Pseudoisotopy::constant(b, n2);
  const auto c0 = pc.at(0);
  std::vector<Combination<Scalar>> images_a(pa.dim()), images_b(db);
  for (int x = 0; x < pa.dim(); ++x) images_a[x] = {{x * db + *b.unit(), Scalar(1)}};
  for (int y = 0; y < db; ++y) images_b[y] = {{*pa.unit() * db + y, Scalar(1)}};
  return {pc, pb, SubalgebraEmbedding{"iota_" + pa.name(), a0, c0, std::move(images_a)},
          SubalgebraEmbedding{"iota_" + b.name(), b, c0, std::move(images_b)}};
}

}  // namespace ainf
