#include "ainf/derham.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace ainf {

namespace {

void require_dims(int dim, int band) {
  if (dim < 1 || dim > 9) throw std::invalid_argument("torus dimension must be in 1..9");
  if (band < 0) throw std::invalid_argument("band must be nonnegative");
}

std::map<FormKey, int> key_index(const std::vector<FormKey>& keys) {
  std::map<FormKey, int> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], static_cast<int>(i));
  return out;
}

bool in_band(const std::vector<int>& f, int band) {
  for (int x : f)
    if (x < -band || x > band) return false;
  return true;
}

bool product_kept(const std::vector<int>& f, const std::vector<int>& g, int band) {
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j] * g[j] < 0 || std::abs(f[j] + g[j]) > band) return false;
  return true;
}

}  // namespace

std::vector<FormKey> derham_keys(int dim, int band) {
  require_dims(dim, band);
  std::vector<FormKey> keys;
  std::vector<int> f(dim, -band);
  while (true) {
    for (unsigned mask = 0; mask < (1u << dim); ++mask) keys.push_back({f, mask});
    int j = dim - 1;
    while (j >= 0 && f[j] == band) f[j--] = -band;
    if (j < 0) break;
    ++f[j];
  }
  return keys;
}

std::string derham_name(const FormKey& key) {
  std::string out = "e(";
  for (std::size_t j = 0; j < key.freq.size(); ++j) out += (j ? "," : "") + std::to_string(key.freq[j]);
  out += ")";
  if (key.mask) {
    out += "dx";
    for (std::size_t j = 0; j < key.freq.size(); ++j)
      if (key.mask >> j & 1u) out += std::to_string(j + 1);
  }
  return out;
}

AInfAlgebra derham_algebra(int dim, int band) {
  const auto keys = derham_keys(dim, band);
  const auto index = key_index(keys);
  std::vector<BasisElement> elements;
  for (const auto& k : keys) elements.push_back({derham_name(k), mask_degree(k.mask)});

  std::vector<Constant> constants;
  const MonoidElement zero{};
  const int d_sign = sign_of_parity(dim + 1);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto dx = exterior_d(TorusForm::monomial(dim, keys[i].freq, keys[i].mask, GaussianRational(1)));
    for (const auto& [key, c] : dx.terms())
      constants.push_back({1, zero, {static_cast<int>(i)}, index.at(key), Scalar(d_sign * c.re), ""});
  }
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (keys[i].mask & keys[j].mask) continue;
      if (!product_kept(keys[i].freq, keys[j].freq, band)) continue;
      const auto w = wedge(TorusForm::monomial(dim, keys[i].freq, keys[i].mask, GaussianRational(1)),
                           TorusForm::monomial(dim, keys[j].freq, keys[j].mask, GaussianRational(1)));
      const int s = sign_of_parity(mask_degree(keys[i].mask));
      for (const auto& [key, c] : w.terms())
        constants.push_back(
            {2, zero, {static_cast<int>(i), static_cast<int>(j)}, index.at(key), Scalar(s * c.re), ""});
    }
  const int unit = index.at(FormKey{std::vector<int>(dim, 0), 0});
  return AInfAlgebra("derham_t" + std::to_string(dim), GradedBasis(std::move(elements)), EnergyMonoid{}, std::nullopt,
                     unit, std::move(constants));
}

TorusForm derham_to_form(int dim, int band, const Combination<Scalar>& x) {
  const auto keys = derham_keys(dim, band);
  TorusForm out(dim);
  for (const auto& t : x) out.add_term(keys.at(t.index).freq, keys.at(t.index).mask, GaussianRational(t.coeff));
  return out;
}

Combination<Scalar> derham_from_form(const TorusForm& form, int band) {
  const auto keys = derham_keys(form.dim(), band);
  const auto index = key_index(keys);
  Combination<Scalar> out;
  for (const auto& [key, c] : form.terms()) {
    if (!in_band(key.freq, band)) throw std::invalid_argument("form has a frequency outside the model band");
    if (sgn(c.im) != 0) throw std::invalid_argument("form has a non-real coefficient");
    out.push_back({index.at(key), c.re});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

SubalgebraEmbedding derham_embedding(int n1, int n2, int factor, int band, bool twist) {
  if (factor != 1 && factor != 2) throw std::invalid_argument("factor must be 1 or 2");
  const int n = n1 + n2;
  const int src_dim = factor == 1 ? n1 : n2;
  const int other = factor == 1 ? n2 : n1;
  std::vector<int> coords(src_dim);
  for (int j = 0; j < src_dim; ++j) coords[j] = factor == 1 ? j : n1 + j;
  const auto p = TorusMap::projection(n, coords);
  const auto src_keys = derham_keys(src_dim, band);
  std::vector<Combination<Scalar>> images;
  for (const auto& k : src_keys) {
    const int s = twist ? sign_of_parity(mask_degree(k.mask) * other) : 1;
    images.push_back(derham_from_form(pullback(p, TorusForm::monomial(src_dim, k.freq, k.mask, GaussianRational(s))), band));
  }
  return {"iota" + std::to_string(factor) + (twist ? "" : "-untwisted"), derham_algebra(src_dim, band),
          derham_algebra(n, band), std::move(images)};
}

}  // namespace ainf
