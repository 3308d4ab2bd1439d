#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainf/report.hpp"
#include "ainf/scalar.hpp"

namespace ainf {

/// Basis monomial e_f dx_I of forms on T^n: e_f is the character with integer
/// frequency vector f and I is a bit mask over coordinates (bit j is dx_{j+1}).
struct FormKey {
  std::vector<int> freq;
  unsigned mask = 0;
  friend bool operator<(const FormKey& a, const FormKey& b) {
    return a.mask != b.mask ? a.mask < b.mask : a.freq < b.freq;
  }
  friend bool operator==(const FormKey& a, const FormKey& b) { return a.mask == b.mask && a.freq == b.freq; }
};

int mask_degree(unsigned mask);

/// Differential form on T^n with trigonometric-polynomial coefficients over Q(i).
/// The exterior derivative uses d(e_f) = sum_j f_j e_f dx_j, i.e. the uniform
/// factor 2*pi*i is dropped; every identity checked here is homogeneous in d.
class TorusForm {
 public:
  explicit TorusForm(int dim);
  static TorusForm monomial(int dim, std::vector<int> freq, unsigned mask, GaussianRational coeff);
  static TorusForm constant(int dim, GaussianRational coeff);
  /// Convenience: e_f dx_{i1} ^ ... with 1-based indices in any order (the
  /// wedge sign is applied).
  static TorusForm term(int dim, std::vector<int> freq, const std::vector<int>& indices, GaussianRational coeff);

  int dim() const { return dim_; }
  const std::map<FormKey, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree if every term has the same degree; nullopt for zero or mixed forms.
  std::optional<int> degree() const;
  void add_term(const std::vector<int>& freq, unsigned mask, const GaussianRational& coeff);

  TorusForm scaled(const GaussianRational& factor) const;
  TorusForm& operator+=(const TorusForm& o);
  TorusForm& operator-=(const TorusForm& o);
  friend TorusForm operator+(TorusForm a, const TorusForm& b) { return a += b; }
  friend TorusForm operator-(TorusForm a, const TorusForm& b) { return a -= b; }
  friend bool operator==(const TorusForm& a, const TorusForm& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// [[frequency], [1-based indices], ["re", "im"]] per term in key order.
  Json serialize() const;
  std::string to_string() const;

 private:
  int dim_;
  std::map<FormKey, GaussianRational> terms_;
};

TorusForm wedge(const TorusForm& a, const TorusForm& b);
TorusForm exterior_d(const TorusForm& a);
/// Top-degree zero-frequency coefficient: the integral over T^n.
GaussianRational integrate_total(const TorusForm& a);

/// Linear torus map T^source -> T^target given by an integral target x source matrix.
class TorusMap {
 public:
  static TorusMap linear(int source_dim, std::vector<std::vector<int>> rows);
  /// Coordinate projection: target coordinate i is source coordinate coords[i] (0-based).
  static TorusMap projection(int source_dim, const std::vector<int>& coords);
  static TorusMap identity(int dim);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Source coordinates read off by a coordinate projection; nullopt otherwise.
  std::optional<std::vector<int>> projection_coords() const;
  /// Fiber coordinates (ascending) of a coordinate projection.
  std::vector<int> fiber_coords() const;
  /// this o inner.
  TorusMap after(const TorusMap& inner) const;
  friend bool operator==(const TorusMap& a, const TorusMap& b) {
    return a.source_dim_ == b.source_dim_ && a.rows_ == b.rows_;
  }

 private:
  TorusMap(int source_dim, std::vector<std::vector<int>> rows);
  int source_dim_;
  std::vector<std::vector<int>> rows_;
};

TorusForm pullback(const TorusMap& phi, const TorusForm& a);
/// a x b = p1^* a ^ p2^* b on T^{n1+n2}.
TorusForm cross(const TorusForm& a, const TorusForm& b);

enum class FiberOrientation {
  /// Reorder the fiber differentials to the front (ascending) and strip them.
  FiberFirst,
  /// Orient the fibers so that (fiber, base) agrees with the orientation of
  /// the total space; this is FiberFirst times the sign of the permutation
  /// (fiber coordinates, base coordinates) -> (1..m). Equal to FiberFirst when
  /// the fiber coordinates lead.
  Ambient,
};

/// Sign relating the two orientation conventions for a coordinate projection.
int fiber_orientation_sign(const TorusMap& pi);

/// Integration along the fibers of a coordinate projection. Terms survive only
/// if they contain every fiber differential and have zero fiber frequencies.
/// Throws std::invalid_argument if pi is not a coordinate projection.
TorusForm fiber_integrate(const TorusMap& pi, const TorusForm& a,
                          FiberOrientation orientation = FiberOrientation::FiberFirst);

struct FiberProduct {
  int dim = 0;
  TorusMap p1;  // P -> M
  TorusMap p2;  // P -> N1
};

/// P = M x_N N1 for a coordinate projection pi: M -> N and a linear g: N1 -> N,
/// realized as T^{k + dim N1} with coordinates (t, y): p1(t, y) has fiber
/// coordinates t and base coordinates g(y), p2(t, y) = y. The first fiber
/// coordinate is reversed when pi's ambient orientation sign is -1, so that P
/// carries the fiber orientation of pi.
FiberProduct fiber_product_assemble(const TorusMap& pi, const TorusMap& g);

}  // namespace ainf
