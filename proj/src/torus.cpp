#include "ainf/torus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ainf/signs.hpp"

namespace ainf {

namespace {

// Sign of dx_A ^ dx_B rewritten in ascending order; 0 if they overlap.
int merge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int inversions = 0;
  for (unsigned rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return sign_of_parity(inversions);
}

// Sign of the permutation that sorts `seq` (distinct entries).
int sort_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return sign_of_parity(inversions);
}

void require_dim(const TorusForm& a, const TorusForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("torus form dimension mismatch");
}

}  // namespace

int mask_degree(unsigned mask) { return std::popcount(mask); }

TorusForm::TorusForm(int dim) : dim_(dim) {
  if (dim < 0 || dim > 16) throw std::invalid_argument("torus dimension out of range");
}

TorusForm TorusForm::monomial(int dim, std::vector<int> freq, unsigned mask, GaussianRational coeff) {
  TorusForm out(dim);
  out.add_term(freq, mask, coeff);
  return out;
}

TorusForm TorusForm::constant(int dim, GaussianRational coeff) {
  return monomial(dim, std::vector<int>(dim, 0), 0, std::move(coeff));
}

TorusForm TorusForm::term(int dim, std::vector<int> freq, const std::vector<int>& indices, GaussianRational coeff) {
  unsigned mask = 0;
  std::vector<int> zero_based;
  for (int i : indices) {
    if (i < 1 || i > dim) throw std::invalid_argument("differential index out of range");
    if (mask >> (i - 1) & 1u) return TorusForm(dim);
    mask |= 1u << (i - 1);
    zero_based.push_back(i);
  }
  if (sort_sign(zero_based) < 0) coeff = -coeff;
  return monomial(dim, std::move(freq), mask, std::move(coeff));
}

std::optional<int> TorusForm::degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    const int d = mask_degree(key.mask);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void TorusForm::add_term(const std::vector<int>& freq, unsigned mask, const GaussianRational& coeff) {
  if (static_cast<int>(freq.size()) != dim_) throw std::invalid_argument("frequency vector has wrong length");
  if (dim_ < 32 && (mask >> dim_) != 0) throw std::invalid_argument("differential index out of range");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(FormKey{freq, mask}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusForm TorusForm::scaled(const GaussianRational& factor) const {
  TorusForm out(dim_);
  for (const auto& [key, c] : terms_) out.add_term(key.freq, key.mask, c * factor);
  return out;
}

TorusForm& TorusForm::operator+=(const TorusForm& o) {
  require_dim(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key.freq, key.mask, c);
  return *this;
}

TorusForm& TorusForm::operator-=(const TorusForm& o) {
  require_dim(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key.freq, key.mask, -c);
  return *this;
}

Json TorusForm::serialize() const {
  Json out = Json::array();
  for (const auto& [key, c] : terms_) {
    Json idx = Json::array();
    for (int j = 0; j < dim_; ++j)
      if (key.mask >> j & 1u) idx.push_back(j + 1);
    out.push_back(Json::array({key.freq, idx, {format_scalar(c.re), format_scalar(c.im)}}));
  }
  return out;
}

std::string TorusForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << format_scalar(c.re);
    if (sgn(c.im) != 0) os << (sgn(c.im) > 0 ? "+" : "") << format_scalar(c.im) << "i";
    os << ")e(";
    for (int j = 0; j < dim_; ++j) os << (j ? "," : "") << key.freq[j];
    os << ")";
    for (int j = 0; j < dim_; ++j)
      if (key.mask >> j & 1u) os << "dx" << j + 1;
  }
  return os.str();
}

TorusForm wedge(const TorusForm& a, const TorusForm& b) {
  require_dim(a, b);
  TorusForm out(a.dim());
  std::vector<int> freq(a.dim());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const int s = merge_sign(ka.mask, kb.mask);
      if (s == 0) continue;
      for (int j = 0; j < a.dim(); ++j) freq[j] = ka.freq[j] + kb.freq[j];
      GaussianRational c = ca * cb;
      out.add_term(freq, ka.mask | kb.mask, s > 0 ? c : -c);
    }
  return out;
}

TorusForm exterior_d(const TorusForm& a) {
  TorusForm out(a.dim());
  for (const auto& [key, c] : a.terms())
    for (int j = 0; j < a.dim(); ++j) {
      if (key.freq[j] == 0 || (key.mask >> j & 1u)) continue;
      const int s = merge_sign(1u << j, key.mask);
      GaussianRational v = c * GaussianRational(Scalar(key.freq[j] * s));
      out.add_term(key.freq, key.mask | (1u << j), v);
    }
  return out;
}

GaussianRational integrate_total(const TorusForm& a) {
  const unsigned top = a.dim() == 0 ? 0u : (1u << a.dim()) - 1u;
  auto it = a.terms().find(FormKey{std::vector<int>(a.dim(), 0), top});
  return it == a.terms().end() ? GaussianRational() : it->second;
}

TorusMap::TorusMap(int source_dim, std::vector<std::vector<int>> rows)
    : source_dim_(source_dim), rows_(std::move(rows)) {
  if (source_dim_ < 0) throw std::invalid_argument("negative torus dimension");
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) != source_dim_) throw std::invalid_argument("torus map row has wrong length");
}

TorusMap TorusMap::linear(int source_dim, std::vector<std::vector<int>> rows) {
  return TorusMap(source_dim, std::move(rows));
}

TorusMap TorusMap::projection(int source_dim, const std::vector<int>& coords) {
  std::vector<std::vector<int>> rows;
  std::vector<bool> used(source_dim, false);
  for (int c : coords) {
    if (c < 0 || c >= source_dim || used[c]) throw std::invalid_argument("invalid projection coordinates");
    used[c] = true;
    std::vector<int> row(source_dim, 0);
    row[c] = 1;
    rows.push_back(std::move(row));
  }
  return TorusMap(source_dim, std::move(rows));
}

TorusMap TorusMap::identity(int dim) {
  std::vector<int> coords(dim);
  std::iota(coords.begin(), coords.end(), 0);
  return projection(dim, coords);
}

std::optional<std::vector<int>> TorusMap::projection_coords() const {
  std::vector<int> coords;
  std::vector<bool> used(source_dim_, false);
  for (const auto& r : rows_) {
    int hit = -1;
    for (int j = 0; j < source_dim_; ++j) {
      if (r[j] == 0) continue;
      if (r[j] != 1 || hit >= 0) return std::nullopt;
      hit = j;
    }
    if (hit < 0 || used[hit]) return std::nullopt;
    used[hit] = true;
    coords.push_back(hit);
  }
  return coords;
}

std::vector<int> TorusMap::fiber_coords() const {
  auto coords = projection_coords();
  if (!coords) throw std::invalid_argument("not a coordinate projection");
  std::vector<int> fiber;
  for (int j = 0; j < source_dim_; ++j)
    if (std::find(coords->begin(), coords->end(), j) == coords->end()) fiber.push_back(j);
  return fiber;
}

TorusMap TorusMap::after(const TorusMap& inner) const {
  if (inner.target_dim() != source_dim_) throw std::invalid_argument("torus map composition dimension mismatch");
  std::vector<std::vector<int>> rows(target_dim(), std::vector<int>(inner.source_dim_, 0));
  for (int i = 0; i < target_dim(); ++i)
    for (int m = 0; m < source_dim_; ++m)
      for (int j = 0; j < inner.source_dim_; ++j) rows[i][j] += rows_[i][m] * inner.rows_[m][j];
  return TorusMap(inner.source_dim_, std::move(rows));
}

TorusForm pullback(const TorusMap& phi, const TorusForm& a) {
  if (a.dim() != phi.target_dim()) throw std::invalid_argument("pullback: form lives on the wrong torus");
  const int s = phi.source_dim();
  const auto& rows = phi.rows();
  TorusForm out(s);
  for (const auto& [key, c] : a.terms()) {
    std::vector<int> freq(s, 0);
    for (int i = 0; i < phi.target_dim(); ++i)
      for (int j = 0; j < s; ++j) freq[j] += rows[i][j] * key.freq[i];
    // Wedge the pulled-back differentials dx_i -> sum_j M_ij dx_j in ascending i.
    std::map<unsigned, Scalar> diff{{0u, Scalar(1)}};
    for (int i = 0; i < phi.target_dim(); ++i) {
      if (!(key.mask >> i & 1u)) continue;
      std::map<unsigned, Scalar> next;
      for (const auto& [m, v] : diff)
        for (int j = 0; j < s; ++j) {
          if (rows[i][j] == 0) continue;
          const int sign = merge_sign(m, 1u << j);
          if (sign == 0) continue;
          next[m | (1u << j)] += v * rows[i][j] * sign;
        }
      diff = std::move(next);
    }
    for (const auto& [m, v] : diff)
      if (sgn(v) != 0) out.add_term(freq, m, c * GaussianRational(v));
  }
  return out;
}

TorusForm cross(const TorusForm& a, const TorusForm& b) {
  const int n1 = a.dim(), n2 = b.dim();
  std::vector<int> first(n1), second(n2);
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), n1);
  return wedge(pullback(TorusMap::projection(n1 + n2, first), a), pullback(TorusMap::projection(n1 + n2, second), b));
}

int fiber_orientation_sign(const TorusMap& pi) {
  auto coords = pi.projection_coords();
  if (!coords) throw std::invalid_argument("fiber integration requires a coordinate projection");
  auto seq = pi.fiber_coords();
  seq.insert(seq.end(), coords->begin(), coords->end());
  return sort_sign(seq);
}

TorusForm fiber_integrate(const TorusMap& pi, const TorusForm& a, FiberOrientation orientation) {
  auto coords = pi.projection_coords();
  if (!coords) throw std::invalid_argument("fiber integration requires a coordinate projection");
  if (a.dim() != pi.source_dim()) throw std::invalid_argument("fiber integration: form lives on the wrong torus");
  const auto fiber = pi.fiber_coords();
  unsigned fiber_mask = 0;
  for (int f : fiber) fiber_mask |= 1u << f;
  const int global = orientation == FiberOrientation::Ambient ? fiber_orientation_sign(pi) : 1;
  const int n = pi.target_dim();
  TorusForm out(n);
  for (const auto& [key, c] : a.terms()) {
    if ((key.mask & fiber_mask) != fiber_mask) continue;
    bool zero_freq = true;
    for (int f : fiber) zero_freq = zero_freq && key.freq[f] == 0;
    if (!zero_freq) continue;
    // Present order: ascending source indices. Target order: fiber ascending,
    // then base differentials in target coordinate order.
    std::vector<int> present;
    for (int j = 0; j < pi.source_dim(); ++j)
      if (key.mask >> j & 1u) present.push_back(j);
    std::vector<int> wanted = fiber;
    unsigned target_mask = 0;
    std::vector<int> target_freq(n);
    for (int i = 0; i < n; ++i) {
      target_freq[i] = key.freq[(*coords)[i]];
      if (key.mask >> (*coords)[i] & 1u) {
        wanted.push_back((*coords)[i]);
        target_mask |= 1u << i;
      }
    }
    std::vector<int> perm;
    for (int w : wanted) perm.push_back(static_cast<int>(std::find(present.begin(), present.end(), w) - present.begin()));
    const std::vector<Degree> ones(present.size(), 1);
    const int sign = reorder_sign(ones, perm) * global;
    out.add_term(target_freq, target_mask, sign > 0 ? c : -c);
  }
  return out;
}

FiberProduct fiber_product_assemble(const TorusMap& pi, const TorusMap& g) {
  auto coords = pi.projection_coords();
  if (!coords) throw std::invalid_argument("fiber product: pi must be a coordinate projection");
  if (g.target_dim() != pi.target_dim()) throw std::invalid_argument("fiber product: incompatible targets");
  const auto fiber = pi.fiber_coords();
  const int k = static_cast<int>(fiber.size());
  const int sigma = fiber_orientation_sign(pi);
  if (k == 0 && sigma < 0)
    throw std::invalid_argument("fiber product: orientation-reversing projection without fibers");
  const int n1 = g.source_dim();
  const int dim = k + n1;
  std::vector<std::vector<int>> p1_rows(pi.source_dim(), std::vector<int>(dim, 0));
  for (int a = 0; a < k; ++a) p1_rows[fiber[a]][a] = (a == 0 ? sigma : 1);
  for (int i = 0; i < pi.target_dim(); ++i)
    for (int j = 0; j < n1; ++j) p1_rows[(*coords)[i]][k + j] = g.rows()[i][j];
  std::vector<int> tail(n1);
  std::iota(tail.begin(), tail.end(), k);
  return FiberProduct{dim, TorusMap::linear(dim, std::move(p1_rows)), TorusMap::projection(dim, tail)};
}

}  // namespace ainf
