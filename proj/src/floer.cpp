#include "ainf/floer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ainf/ainf_checks.hpp"

namespace ainf {

int ScalarCohomology::total() const {
  int out = 0;
  for (const auto& [deg, n] : dims) out += n;
  return out;
}

ScalarCohomology scalar_cohomology(const RationalMatrix& d, const std::vector<Degree>& grading) {
  const int n = static_cast<int>(grading.size());
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("differential has the wrong shape");
  if (!(d * d).is_zero()) throw std::invalid_argument("differential does not square to zero");
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (sgn(d(r, c)) != 0 && grading[r] != grading[c] + 1)
        throw std::invalid_argument("differential does not raise degree by one");

  std::map<Degree, std::vector<int>> by_degree;
  for (int i = 0; i < n; ++i) by_degree[grading[i]].push_back(i);
  auto restricted = [&](const std::vector<int>& cols) {
    RationalMatrix m(n, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int r = 0; r < n; ++r) m(r, static_cast<int>(j)) = d(r, cols[j]);
    return m;
  };

  ScalarCohomology out;
  for (const auto& [deg, cols] : by_degree) {
    auto below = by_degree.find(deg - 1);
    RationalMatrix image = below == by_degree.end() ? RationalMatrix(n, 0) : restricted(below->second);
    int current = rank(image);
    auto& reps = out.representatives[deg];
    for (const auto& v : kernel(restricted(cols))) {
      std::vector<Scalar> full(n);
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
      auto candidate = image.hstack(RationalMatrix::from_columns(n, {full}));
      const int r = rank(candidate);
      if (r > current) {
        image = std::move(candidate);
        current = r;
        reps.push_back(std::move(full));
      }
    }
    out.dims[deg] = static_cast<int>(reps.size());
  }
  return out;
}

RationalMatrix mu1_matrix(const AInfAlgebra& alg) {
  RationalMatrix m(alg.dim(), alg.dim());
  for (int j = 0; j < alg.dim(); ++j) {
    const int in[1] = {j};
    for (const auto& t : alg.op(1, MonoidElement{}, in)) m(t.index, j) = t.coeff;
  }
  return m;
}

ScalarCohomology mu1_cohomology(const AInfAlgebra& alg) { return scalar_cohomology(mu1_matrix(alg), alg.basis().degrees()); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const QPoly& p) { return p.is_zero(); });
}

namespace {

void swap_rows(PolyMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(PolyMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

int poly_rank(PolyMatrix m) {
  QPoly prev(Scalar(1));
  int k = 0;
  for (; k < std::min(m.rows(), m.cols()); ++k) {
    int pr = -1, pc = -1;
    for (int c = k; c < m.cols() && pr < 0; ++c)
      for (int r = k; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    swap_rows(m, k, pr);
    swap_cols(m, k, pc);
    for (int i = k + 1; i < m.rows(); ++i) {
      for (int j = k + 1; j < m.cols(); ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
      m(i, k) = QPoly();
    }
    prev = m(k, k);
  }
  return k;
}

std::vector<QPoly> smith_invariants(PolyMatrix m) {
  std::vector<QPoly> out;
  const int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    // Pivot of minimal degree in the trailing block.
    auto place_min = [&]() {
      int br = -1, bc = -1;
      for (int r = t; r < m.rows(); ++r)
        for (int c = t; c < m.cols(); ++c)
          if (!m(r, c).is_zero() && (br < 0 || m(r, c).degree() < m(br, bc).degree())) {
            br = r;
            bc = c;
          }
      if (br < 0) return false;
      swap_rows(m, t, br);
      swap_cols(m, t, bc);
      return true;
    };
    if (!place_min()) break;
    while (true) {
      bool dirty = false;
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m(r, t).is_zero()) continue;
        const QPoly f = m(r, t).divmod(m(t, t)).first;
        for (int c = t; c < m.cols(); ++c) m(r, c) -= f * m(t, c);
        dirty = dirty || !m(r, t).is_zero();
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m(t, c).is_zero()) continue;
        const QPoly f = m(t, c).divmod(m(t, t)).first;
        for (int r = t; r < m.rows(); ++r) m(r, c) -= f * m(r, t);
        dirty = dirty || !m(t, c).is_zero();
      }
      if (dirty) {
        // A remainder of smaller degree appeared in row or column t.
        int br = t, bc = t;
        for (int r = t + 1; r < m.rows(); ++r)
          if (!m(r, t).is_zero() && m(r, t).degree() < m(br, bc).degree()) br = r, bc = t;
        for (int c = t + 1; c < m.cols(); ++c)
          if (!m(t, c).is_zero() && m(t, c).degree() < m(br, bc).degree()) br = t, bc = c;
        swap_rows(m, t, br);
        swap_cols(m, t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      int bad = -1;
      for (int r = t + 1; r < m.rows() && bad < 0; ++r)
        for (int c = t + 1; c < m.cols(); ++c)
          if (!m(r, c).divmod(m(t, t)).second.is_zero()) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      for (int c = t; c < m.cols(); ++c) m(t, c) += m(bad, c);
    }
    out.push_back(m(t, t).monic());
  }
  return out;
}

namespace {

long lcm_denominator(long acc, const Scalar& energy) {
  const long den = energy.get_den().get_si();
  return std::lcm(acc, den);
}

}  // namespace

FloerMatrix floer_matrix(const AInfAlgebra& alg, const AlgElement& b) {
  if (alg.cutoff()) throw std::invalid_argument(alg.name() + ": Floer cohomology needs an untruncated algebra");
  if (b.cutoff()) throw std::invalid_argument("bounding cochain must be untruncated");
  validate_bounding_candidate(alg, b);
  if (alg.unit()) {
    if (!mc_defect(alg, b).remainder.is_zero())
      throw std::invalid_argument(alg.name() + ": cochain is not bounding");
  } else if (!b.is_zero()) {
    throw std::invalid_argument(alg.name() + ": bounding check needs a unit");
  }
  const auto columns = deformed_differential(alg, b);
  long den = 1;
  for (const auto& col : columns)
    for (const auto& [i, v] : col.coeffs())
      for (const auto& [energy, c] : v.terms()) den = lcm_denominator(den, energy);
  FloerMatrix out{PolyMatrix(alg.dim(), alg.dim()), den};
  for (int j = 0; j < alg.dim(); ++j)
    for (const auto& [i, v] : columns[j].coeffs())
      for (const auto& [energy, c] : v.terms()) {
        const Scalar e = energy * den;
        out.differential(i, j) += QPoly::monomial(c, static_cast<int>(e.get_num().get_si()));
      }
  if (!(out.differential * out.differential).is_zero())
    throw std::logic_error(alg.name() + ": deformed differential does not square to zero");
  return out;
}

int hf_dimension(const AInfAlgebra& alg, const AlgElement& b) {
  return alg.dim() - 2 * poly_rank(floer_matrix(alg, b).differential);
}

Json Barcode::to_json() const {
  Json bar_list = Json::array();
  for (const auto& x : bars) bar_list.push_back(format_scalar(x));
  return Json{{"denominator", denominator}, {"bars", bar_list}, {"non_monomial", non_monomial}, {"free_rank", free_rank}};
}

Barcode barcode(const AInfAlgebra& alg, const AlgElement& b) {
  const auto fm = floer_matrix(alg, b);
  const auto inv = smith_invariants(fm.differential);
  Barcode out;
  out.denominator = fm.denominator;
  for (const auto& p : inv) {
    if (p.is_monomial()) out.bars.push_back(Scalar(p.degree(), fm.denominator));
    else out.non_monomial.push_back(p.to_string());
  }
  for (auto& x : out.bars) x.canonicalize();
  std::sort(out.bars.begin(), out.bars.end());
  out.free_rank = alg.dim() - 2 * static_cast<int>(inv.size());
  return out;
}

Report check_hf_kunneth(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, const AlgElement& b1,
                        const AlgElement& b2) {
  const auto commuting = check_commuting(emb_a, emb_b);
  if (!commuting.passed()) throw std::invalid_argument("embeddings do not commute: " + commuting.summary());
  auto box = box_product(emb_a, emb_b, b1, b2);
  if (!box.report.passed()) throw std::invalid_argument("box product is not bounding: " + box.report.summary());
  const int ha = hf_dimension(emb_a.source, b1);
  const int hb = hf_dimension(emb_b.source, b2);
  const int hc = hf_dimension(emb_a.target, box.element);
  Report report;
  report.check = "check-hf-kunneth";
  report.instances = 1;
  if (hc != ha * hb)
    report.add_violation("multiplicativity", Json{{"hf_a", ha}, {"hf_b", hb}, {"hf_c", hc}},
                         "dim HF(C) = " + std::to_string(hc) + " but the factors give " + std::to_string(ha * hb));
  report.data = Json{{"hf_a", ha}, {"hf_b", hb}, {"hf_c", hc}};
  return report;
}

}  // namespace ainf
