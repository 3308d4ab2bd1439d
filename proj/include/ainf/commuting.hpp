#pragma once

// Shared engine for the commuting-subalgebra clauses, used with scalar
// coefficients for algebras and with t-polynomial coefficients for isotopies.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ainf/ainf_checks.hpp"
#include "ainf/relations.hpp"
#include "ainf/report.hpp"

namespace ainf {

/// op_{k,beta} applied to scalar combinations; empty if beta has no constants.
template <class C>
Combination<C> apply_combination(const OpTable<C>& table, const BetaSet& betas, int k, const MonoidElement& beta,
                                 const std::vector<const Combination<Scalar>*>& args) {
  auto b = betas.find(beta);
  if (!b || !table.has(*b, k)) return {};
  for (const auto* a : args)
    if (a->empty()) return {};
  Accumulator<C> acc;
  std::vector<std::size_t> pos(k, 0);
  std::vector<int> idx(k);
  while (true) {
    Scalar coeff = 1;
    for (int p = 0; p < k; ++p) {
      const auto& t = (*args[p])[pos[p]];
      idx[p] = t.index;
      coeff *= t.coeff;
    }
    if (const auto* out = table.find(k, *b, idx))
      for (const auto& o : *out) acc.add(o.index, o.coeff * C(coeff));
    int p = k - 1;
    while (p >= 0 && ++pos[p] == args[p]->size()) pos[p--] = 0;
    if (p < 0) break;
  }
  return acc.take();
}

template <class C>
Combination<C> combine(const Combination<C>& x, const Combination<C>& y, int sign_y) {
  Accumulator<C> acc;
  for (const auto& t : x) acc.add(t.index, t.coeff);
  for (const auto& t : y) acc.add(t.index, sign_y > 0 ? t.coeff : C(-t.coeff));
  return acc.take();
}

/// Pushes a source combination forward through scalar images.
template <class C>
Combination<C> push_combination(const Combination<C>& x, const std::vector<Combination<Scalar>>& images, int sign = 1) {
  Accumulator<C> acc;
  for (const auto& t : x)
    for (const auto& im : images[t.index]) acc.add(im.index, t.coeff * C(im.coeff * sign));
  return acc.take();
}

/// Static data shared by every family checked against the same pair of embeddings.
struct CommutingFrame {
  const GradedBasis* basis_a;
  const GradedBasis* basis_b;
  const GradedBasis* basis_c;
  const std::vector<Combination<Scalar>>* iota_a;
  const std::vector<Combination<Scalar>>* iota_b;
  std::vector<std::vector<Combination<Scalar>>> kmat;  // K(a (x) b), [a][b]
  std::function<bool(const MonoidElement&)> in_ga;
  std::function<bool(const MonoidElement&)> in_gb;
  std::vector<MonoidElement> targets;
};

/// One operation family (m or c) on C, A and B with the twists that relate them.
template <class C>
struct CommutingFamily {
  std::string label;
  const OpTable<C>* c;
  const BetaSet* c_betas;
  const OpTable<C>* a;
  const BetaSet* a_betas;
  const OpTable<C>* b;
  const BetaSet* b_betas;
  int twist_a = 1;
  int twist_b = 1;
  /// 1 for operations, 0 for homotopies: the extra |a| in the B-side insertion sign.
  int insertion_shift = 1;
  int max_arity = 0;
  /// Whether single-tag tuples are checked here (off when a separate subalgebra check covers them).
  bool pure_tuples = true;
  /// Whether the zero-arity clause is checked (subalgebras constrain k > 0 only).
  bool curvature = true;
};

enum class CommutingMode {
  /// Mixed-tag tuples vanish except the mu_{2,0} anticommutator.
  Algebra,
  /// Mixed-tag tuples are constrained only at beta outside G_A and G_B.
  Isotopy,
};

namespace detail {

inline Json tagged_location(const CommutingFrame& f, const std::string& label, const MonoidElement& beta,
                            const std::vector<int>& tags, const std::vector<int>& elems) {
  Json names = Json::array();
  Json tag_names = Json::array();
  for (std::size_t p = 0; p < tags.size(); ++p) {
    tag_names.push_back(tags[p] == 0 ? "A" : "B");
    names.push_back(tags[p] == 0 ? f.basis_a->name(elems[p]) : f.basis_b->name(elems[p]));
  }
  return {{"family", label}, {"beta", {format_scalar(beta.energy), beta.mu}}, {"k", tags.size()},
          {"tags", tag_names}, {"tuple", names}};
}

}  // namespace detail

/// Checks one family and appends violations to `report` (first per clause, beta, k).
template <class C>
void check_commuting_family(const CommutingFrame& f, const CommutingFamily<C>& fam, CommutingMode mode,
                            Report& report) {
  const int dim_a = f.basis_a->size();
  const int dim_b = f.basis_b->size();
  std::set<std::tuple<std::string, MonoidElement, int>> seen;
  auto record = [&](const std::string& clause, const MonoidElement& beta, int k, Json loc, const std::string& what) {
    if (!seen.emplace(clause, beta, k).second) return;
    report.add_violation(fam.label + ":" + clause, std::move(loc), what);
  };
  auto shifted_deg = [&](int tag, int e) { return shifted(tag == 0 ? f.basis_a->degree(e) : f.basis_b->degree(e)); };
  auto image = [&](int tag, int e) -> const Combination<Scalar>* {
    return tag == 0 ? &(*f.iota_a)[e] : &(*f.iota_b)[e];
  };
  auto describe = [&](const Combination<C>& got, const Combination<C>& want) {
    return "got " + combination_to_string(got, *f.basis_c) + ", expected " + combination_to_string(want, *f.basis_c);
  };

  for (const auto& beta : f.targets) {
    const bool in_a = f.in_ga(beta);
    const bool in_b = f.in_gb(beta);

    // Zero-arity clause.
    if (fam.curvature) {
      ++report.instances;
      auto got = apply_combination<C>(*fam.c, *fam.c_betas, 0, beta, {});
      Combination<C> want;
      if (in_a)
        want = push_combination<C>(apply_combination<C>(*fam.a, *fam.a_betas, 0, beta, {}), *f.iota_a, fam.twist_a);
      if (in_b)
        want = combine(want,
                       push_combination<C>(apply_combination<C>(*fam.b, *fam.b_betas, 0, beta, {}), *f.iota_b,
                                           fam.twist_b),
                       1);
      if (!combine(got, want, -1).empty())
        record("curvature", beta, 0, Json{{"family", fam.label}, {"beta", {format_scalar(beta.energy), beta.mu}}, {"k", 0}},
               describe(got, want));
    }

    // Tagged tuples without insertion.
    for (int k = 1; k <= fam.max_arity; ++k) {
      for (unsigned tagmask = 0; tagmask < (1u << k); ++tagmask) {
        std::vector<int> tags(k);
        for (int p = 0; p < k; ++p) tags[p] = (tagmask >> p) & 1u;
        const bool all_a = tagmask == 0;
        const bool all_b = tagmask == (1u << k) - 1;
        const bool mixed = !all_a && !all_b;
        if (mixed && mode == CommutingMode::Isotopy && (in_a || in_b)) continue;
        if (!mixed && !fam.pure_tuples) continue;
        std::vector<int> dims(k);
        for (int p = 0; p < k; ++p) dims[p] = tags[p] == 0 ? dim_a : dim_b;
        std::vector<int> elems(k, 0);
        bool done = false;
        for (int p = 0; p < k; ++p) done = done || dims[p] == 0;
        while (!done) {
          ++report.instances;
          std::vector<const Combination<Scalar>*> args(k);
          for (int p = 0; p < k; ++p) args[p] = image(tags[p], elems[p]);
          auto got = apply_combination<C>(*fam.c, *fam.c_betas, k, beta, args);
          if (mixed && mode == CommutingMode::Algebra && k == 2 && beta.is_zero()) {
            std::vector<const Combination<Scalar>*> swapped{args[1], args[0]};
            auto other = apply_combination<C>(*fam.c, *fam.c_betas, k, beta, swapped);
            const int s = sign_of_parity(shifted_deg(tags[0], elems[0]) * shifted_deg(tags[1], elems[1]));
            auto sum = combine(got, other, s);
            if (!sum.empty())
              record("anticommutator", beta, k, detail::tagged_location(f, fam.label, beta, tags, elems),
                     "mu(c1,c2) + (-1)^{||c1|| ||c2||} mu(c2,c1) = " + combination_to_string(sum, *f.basis_c));
          } else {
            Combination<C> want;
            std::string clause = "mixed-vanishing";
            if (all_a) {
              clause = "subalgebra-A";
              if (in_a) {
                std::vector<int> idx = elems;
                auto src = fam.a_betas->find(beta);
                Combination<C> val;
                if (src)
                  if (const auto* v = fam.a->find(k, *src, idx)) val = *v;
                want = push_combination<C>(val, *f.iota_a, fam.twist_a);
              }
            } else if (all_b) {
              clause = "subalgebra-B";
              if (in_b) {
                auto src = fam.b_betas->find(beta);
                Combination<C> val;
                if (src)
                  if (const auto* v = fam.b->find(k, *src, elems)) val = *v;
                want = push_combination<C>(val, *f.iota_b, fam.twist_b);
              }
            }
            if (!combine(got, want, -1).empty())
              record(clause, beta, k, detail::tagged_location(f, fam.label, beta, tags, elems), describe(got, want));
          }
          int p = k - 1;
          while (p >= 0 && ++elems[p] == dims[p]) elems[p--] = 0;
          done = p < 0;
        }
      }
    }

    // Insertion of K(a (x) b) among k tagged elements.
    for (int k = 0; k + 1 <= fam.max_arity; ++k) {
      for (unsigned tagmask = 0; tagmask < (1u << k); ++tagmask) {
        std::vector<int> tags(k);
        for (int p = 0; p < k; ++p) tags[p] = (tagmask >> p) & 1u;
        const bool all_a = tagmask == 0;
        const bool all_b = tagmask == (1u << k) - 1;
        const bool mixed = !all_a && !all_b;
        if (mixed && mode == CommutingMode::Isotopy && (in_a || in_b)) continue;
        const bool use_a = all_a && in_a;
        const bool use_b = all_b && in_b;
        if (k == 0 && use_a && use_b && beta.is_zero()) {
          const std::string note = fam.label + ": insertion clause at (k, beta) = (0, 0) evaluated as the sum of both branches";
          if (std::find(report.notes.begin(), report.notes.end(), note) == report.notes.end()) report.notes.push_back(note);
        }
        std::vector<int> dims(k);
        for (int p = 0; p < k; ++p) dims[p] = tags[p] == 0 ? dim_a : dim_b;
        std::vector<int> elems(k, 0);
        bool done = false;
        for (int p = 0; p < k; ++p) done = done || dims[p] == 0;
        while (!done) {
          for (int a = 0; a < dim_a; ++a)
            for (int b = 0; b < dim_b; ++b) {
              const auto& kab = f.kmat[a][b];
              for (int i = 0; i <= k; ++i) {
                ++report.instances;
                std::vector<const Combination<Scalar>*> args;
                for (int p = 0; p < i; ++p) args.push_back(image(tags[p], elems[p]));
                args.push_back(&kab);
                for (int p = i; p < k; ++p) args.push_back(image(tags[p], elems[p]));
                auto got = apply_combination<C>(*fam.c, *fam.c_betas, k + 1, beta, args);
                Combination<C> want;
                if (use_a) {
                  if (auto src = fam.a_betas->find(beta)) {
                    std::vector<int> idx(elems.begin(), elems.begin() + i);
                    idx.push_back(a);
                    idx.insert(idx.end(), elems.begin() + i, elems.end());
                    if (const auto* v = fam.a->find(k + 1, *src, idx)) {
                      long long tail = 0;
                      for (int p = i; p < k; ++p) tail += shifted(f.basis_a->degree(elems[p]));
                      const int s = fam.twist_a * sign_of_parity(f.basis_b->degree(b) * tail);
                      Accumulator<C> acc;
                      for (const auto& t : *v)
                        for (const auto& kt : f.kmat[t.index][b]) acc.add(kt.index, t.coeff * C(kt.coeff * s));
                      want = combine(want, acc.take(), 1);
                    }
                  }
                }
                if (use_b) {
                  if (auto src = fam.b_betas->find(beta)) {
                    std::vector<int> idx(elems.begin(), elems.begin() + i);
                    idx.push_back(b);
                    idx.insert(idx.end(), elems.begin() + i, elems.end());
                    if (const auto* v = fam.b->find(k + 1, *src, idx)) {
                      long long head = 0;
                      for (int p = 0; p < i; ++p) head += shifted(f.basis_b->degree(elems[p]));
                      const int s = fam.twist_b * sign_of_parity(f.basis_a->degree(a) * (head + fam.insertion_shift));
                      Accumulator<C> acc;
                      for (const auto& t : *v)
                        for (const auto& kt : f.kmat[a][t.index]) acc.add(kt.index, t.coeff * C(kt.coeff * s));
                      want = combine(want, acc.take(), 1);
                    }
                  }
                }
                if (!combine(got, want, -1).empty()) {
                  auto loc = detail::tagged_location(f, fam.label, beta, tags, elems);
                  loc["insert"] = {{"position", i}, {"a", f.basis_a->name(a)}, {"b", f.basis_b->name(b)}};
                  const std::string clause = use_a || use_b ? "insertion" : "insertion-vanishing";
                  record(clause, beta, k + 1, std::move(loc), describe(got, want));
                }
              }
            }
          int p = k - 1;
          while (p >= 0 && ++elems[p] == dims[p]) elems[p--] = 0;
          done = p < 0;
        }
      }
    }
  }
}

}  // namespace ainf
