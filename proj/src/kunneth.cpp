#include "ainf/kunneth.hpp"

#include <algorithm>
#include <stdexcept>

#include "ainf/commuting.hpp"
#include "ainf/linalg.hpp"
#include "ainf/signs.hpp"

namespace ainf {

void SubalgebraEmbedding::validate() const {
  if (static_cast<int>(images.size()) != source.dim())
    throw std::invalid_argument(name + ": expected " + std::to_string(source.dim()) + " images, got " +
                                std::to_string(images.size()));
  for (int i = 0; i < source.dim(); ++i)
    for (const auto& t : images[i]) {
      if (t.index < 0 || t.index >= target.dim())
        throw std::invalid_argument(name + ": image of " + source.basis().name(i) + " leaves the target basis");
      if (target.basis().degree(t.index) != source.basis().degree(i))
        throw std::invalid_argument(name + ": image of " + source.basis().name(i) + " has the wrong degree");
    }
}

Combination<Scalar> SubalgebraEmbedding::apply(const Combination<Scalar>& x) const {
  return push_combination<Scalar>(x, images);
}

AlgElement SubalgebraEmbedding::apply(const AlgElement& x) const {
  AlgElement out(x.cutoff());
  for (const auto& [i, v] : x.coeffs())
    for (const auto& t : images.at(i)) out.add(t.index, v.scaled(t.coeff));
  return out;
}

SubalgebraEmbedding SubalgebraEmbedding::with_target(AInfAlgebra new_target) const {
  if (new_target.basis().elements() != target.basis().elements())
    throw std::invalid_argument(name + ": replacement target has a different basis");
  return {name, source, std::move(new_target), images};
}

namespace {

std::vector<MonoidElement> commuting_targets(std::initializer_list<const AInfAlgebra*> algs,
                                             const std::optional<Scalar>& cutoff) {
  std::vector<MonoidElement> out{MonoidElement{}};
  for (const auto* a : algs)
    for (const auto& b : a->betas().elements())
      if (!cutoff || b.energy <= *cutoff) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int max_arity_of(std::initializer_list<const AInfAlgebra*> algs) {
  int out = 0;
  for (const auto* a : algs) out = std::max(out, a->max_arity());
  return out;
}

RationalMatrix image_matrix(const SubalgebraEmbedding& emb) {
  RationalMatrix m(emb.target.dim(), emb.source.dim());
  for (int i = 0; i < emb.source.dim(); ++i)
    for (const auto& t : emb.images[i]) m(t.index, i) = t.coeff;
  return m;
}

const AInfAlgebra& empty_algebra() {
  static const AInfAlgebra alg("empty", GradedBasis{}, EnergyMonoid{}, std::nullopt, std::nullopt, {});
  return alg;
}

// Injectivity, unit and monoid inclusion.
void structural_checks(const SubalgebraEmbedding& emb, Report& report) {
  report.instances += 3;
  if (rank(image_matrix(emb)) != emb.source.dim())
    report.add_violation("injective", Json{{"embedding", emb.name}}, "images are linearly dependent");
  const auto& su = emb.source.unit();
  const auto& tu = emb.target.unit();
  if (su) {
    const Combination<Scalar> want = tu ? Combination<Scalar>{{*tu, Scalar(1)}} : Combination<Scalar>{};
    if (!tu || emb.images[*su] != want)
      report.add_violation("unit", Json{{"embedding", emb.name}}, "the source unit does not map to the target unit");
  } else {
    report.notes.push_back(emb.name + ": source has no unit");
  }
  for (const auto& g : emb.source.monoid().generators())
    if (!emb.target.monoid().contains(g)) {
      report.add_violation("monoid", Json{{"embedding", emb.name}, {"generator", {format_scalar(g.energy), g.mu}}},
                           "source monoid generator outside the target monoid");
      break;
    }
}

}  // namespace

Report check_subalgebra(const SubalgebraEmbedding& emb) {
  emb.validate();
  Report report;
  report.check = "check-subalgebra";
  structural_checks(emb, report);
  const auto& none = empty_algebra();
  const std::vector<Combination<Scalar>> no_images;
  CommutingFrame frame{&emb.source.basis(),
                       &none.basis(),
                       &emb.target.basis(),
                       &emb.images,
                       &no_images,
                       {},
                       [&](const MonoidElement& b) { return emb.source.monoid().contains(b); },
                       [](const MonoidElement&) { return false; },
                       commuting_targets({&emb.source, &emb.target}, emb.target.cutoff())};
  CommutingFamily<Scalar> fam{"m",
                              &emb.target.table(),
                              &emb.target.betas(),
                              &emb.source.table(),
                              &emb.source.betas(),
                              &none.table(),
                              &none.betas()};
  fam.max_arity = max_arity_of({&emb.source, &emb.target});
  fam.curvature = false;
  check_commuting_family(frame, fam, CommutingMode::Algebra, report);
  report.data["embedding"] = emb.name;
  return report;
}

Combination<Scalar> kunneth_K(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, int a, int b) {
  const auto& c = emb_a.target;
  const std::vector<const Combination<Scalar>*> args{&emb_a.images.at(a), &emb_b.images.at(b)};
  auto out = apply_combination<Scalar>(c.table(), c.betas(), 2, MonoidElement{}, args);
  if (parity(emb_a.source.basis().degree(a)))
    for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Combination<Scalar> kunneth_K(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b,
                              const Combination<Scalar>& a, const Combination<Scalar>& b) {
  Accumulator<Scalar> acc;
  for (const auto& x : a)
    for (const auto& y : b)
      for (const auto& t : kunneth_K(emb_a, emb_b, x.index, y.index)) acc.add(t.index, t.coeff * x.coeff * y.coeff);
  return acc.take();
}

namespace {

std::vector<std::vector<Combination<Scalar>>> k_matrix(const SubalgebraEmbedding& emb_a,
                                                       const SubalgebraEmbedding& emb_b) {
  std::vector<std::vector<Combination<Scalar>>> out(emb_a.source.dim(),
                                                    std::vector<Combination<Scalar>>(emb_b.source.dim()));
  for (int a = 0; a < emb_a.source.dim(); ++a)
    for (int b = 0; b < emb_b.source.dim(); ++b) out[a][b] = kunneth_K(emb_a, emb_b, a, b);
  return out;
}

void require_common_target(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b) {
  if (emb_a.target.name() != emb_b.target.name() ||
      emb_a.target.basis().elements() != emb_b.target.basis().elements())
    throw std::invalid_argument("embeddings " + emb_a.name + " and " + emb_b.name + " have different targets");
}

}  // namespace

Report check_commuting(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b) {
  require_common_target(emb_a, emb_b);
  Report report;
  report.check = "check-commuting";
  report.absorb(check_subalgebra(emb_a), "A");
  report.absorb(check_subalgebra(emb_b), "B");

  const auto& C = emb_a.target;
  const auto& A = emb_a.source;
  const auto& B = emb_b.source;
  const auto sum = monoid_sum(A.monoid(), B.monoid());
  ++report.instances;
  for (const auto& g : C.monoid().generators())
    if (!sum.contains(g)) {
      report.add_violation("monoid-sum", Json{{"generator", {format_scalar(g.energy), g.mu}}},
                           "target monoid generator outside G_A + G_B");
      break;
    }

  CommutingFrame frame{&A.basis(),
                       &B.basis(),
                       &C.basis(),
                       &emb_a.images,
                       &emb_b.images,
                       k_matrix(emb_a, emb_b),
                       [&](const MonoidElement& b) { return A.monoid().contains(b); },
                       [&](const MonoidElement& b) { return B.monoid().contains(b); },
                       commuting_targets({&A, &B, &C}, C.cutoff())};
  CommutingFamily<Scalar> fam{"m", &C.table(), &C.betas(), &A.table(), &A.betas(), &B.table(), &B.betas()};
  fam.max_arity = max_arity_of({&A, &B, &C});
  fam.pure_tuples = false;
  check_commuting_family(frame, fam, CommutingMode::Algebra, report);
  report.data["max_arity"] = fam.max_arity;
  report.data["betas"] = frame.targets.size();
  return report;
}

BoxProduct box_product(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, const AlgElement& b1,
                       const AlgElement& b2, const std::optional<Scalar>& cutoff) {
  require_common_target(emb_a, emb_b);
  const auto& C = emb_a.target;
  AlgElement element = emb_a.apply(b1) + emb_b.apply(b2);
  BoxProduct out{element, mc_defect(emb_a.source, b1, cutoff), mc_defect(emb_b.source, b2, cutoff),
                 mc_defect(C, element, cutoff), Report{}};
  auto& r = out.report;
  r.check = "box-product";
  r.instances = 2;
  if (!out.defect_a.remainder.is_zero())
    r.add_violation("input-bounding", Json{{"factor", "A"}}, "b1 is not bounding: remainder " +
                                                             out.defect_a.remainder.to_string(emb_a.source.basis()));
  if (!out.defect_b.remainder.is_zero())
    r.add_violation("input-bounding", Json{{"factor", "B"}}, "b2 is not bounding: remainder " +
                                                             out.defect_b.remainder.to_string(emb_b.source.basis()));
  if (!out.defect_c.remainder.is_zero())
    r.add_violation("bounding", Json{{"element", element.to_string(C.basis())}},
                    "remainder " + out.defect_c.remainder.to_string(C.basis()));
  const auto expected = out.defect_a.potential.with_cutoff(out.defect_c.potential.cutoff()) +
                        out.defect_b.potential.with_cutoff(out.defect_c.potential.cutoff());
  if (!(out.defect_c.potential == expected))
    r.add_violation("potential-additivity", Json{{"element", element.to_string(C.basis())}},
                    "P(b1 box b2) = " + out.defect_c.potential.to_string() + ", P(b1) + P(b2) = " + expected.to_string());
  r.data["element"] = element.to_string(C.basis());
  r.data["potential_a"] = out.defect_a.potential.to_string();
  r.data["potential_b"] = out.defect_b.potential.to_string();
  r.data["potential"] = out.defect_c.potential.to_string();
  return out;
}

Report check_kunneth_hypothesis(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b) {
  require_common_target(emb_a, emb_b);
  emb_a.validate();
  emb_b.validate();
  const auto& A = emb_a.source;
  const auto& B = emb_b.source;
  const auto& C = emb_a.target;
  const int da = A.dim(), db = B.dim(), dc = C.dim(), dt = da * db;
  const MonoidElement zero{};

  auto differential = [&](const AInfAlgebra& alg) {
    RationalMatrix m(alg.dim(), alg.dim());
    for (int j = 0; j < alg.dim(); ++j) {
      const int in[1] = {j};
      for (const auto& t : alg.op(1, zero, in)) m(t.index, j) = t.coeff;
    }
    return m;
  };
  const auto mu1 = differential(C);
  const auto da1 = differential(A);
  const auto db1 = differential(B);

  // Tensor differential with second-factor sign (-1)^{|a| + shift}: shift 0 is the
  // one the insertion clause at (k, beta) = (0, 0) makes K intertwine, shift 1
  // the shifted-degree convention, reported for comparison.
  auto tensor_differential = [&](int shift) {
    RationalMatrix out(dt, dt);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b) {
        const int col = a * db + b;
        for (int x = 0; x < da; ++x) out(x * db + b, col) += da1(x, a);
        const int s = sign_of_parity(A.basis().degree(a) + shift);
        for (int y = 0; y < db; ++y) out(a * db + y, col) += s * db1(y, b);
      }
    return out;
  };
  RationalMatrix K(dc, dt);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (const auto& t : kunneth_K(emb_a, emb_b, a, b)) K(t.index, a * db + b) = t.coeff;
  const auto dtensor = tensor_differential(0);
  if (!(dtensor * dtensor).is_zero()) throw std::invalid_argument("tensor differential does not square to zero");

  Report report;
  report.check = "kunneth-hypothesis";
  report.instances = 4;
  const int rank_k = rank(K);
  if (rank_k != dt)
    report.add_violation("K-injective", Json{{"rank", rank_k}, {"expected", dt}}, "K has a kernel");

  const auto cycles = kernel(dtensor);
  const auto Z = RationalMatrix::from_columns(dt, cycles);
  const auto KZ = K * Z;
  if (!(mu1 * KZ).is_zero()) report.add_violation("cycles", Json::object(), "K maps a cycle to a non-cycle");
  const int rank_mu = rank(mu1);
  const int rank_bd = rank(mu1.hstack(K * dtensor));
  if (rank_bd != rank_mu) report.add_violation("boundaries", Json::object(), "K maps a boundary outside im mu_1");

  const int rank_dt = rank(dtensor);
  const int h_tensor = static_cast<int>(cycles.size()) - rank_dt;
  const int h_target = dc - 2 * rank_mu;
  const int induced = rank(mu1.hstack(KZ)) - rank_mu;
  if (induced != h_tensor || induced != h_target)
    report.add_violation("bijective", Json{{"induced_rank", induced}, {"h_tensor", h_tensor}, {"h_target", h_target}},
                         "induced map on cohomology is not bijective");

  const RationalMatrix lhs = mu1 * K;
  auto relation = [&](const RationalMatrix& d) -> std::string {
    RationalMatrix rhs = K * d;
    if (lhs == rhs) return "commutes";
    for (int r = 0; r < rhs.rows(); ++r)
      for (int c = 0; c < rhs.cols(); ++c) rhs(r, c) = -rhs(r, c);
    return lhs == rhs ? "anticommutes" : "none";
  };
  report.data = Json{{"dim_tensor", dt},
                     {"dim_target", dc},
                     {"rank_K", rank_k},
                     {"h_tensor", h_tensor},
                     {"h_target", h_target},
                     {"induced_rank", induced},
                     {"chain_relation", relation(dtensor)},
                     {"chain_relation_shifted_sign", relation(tensor_differential(1))}};
  return report;
}

}  // namespace ainf
