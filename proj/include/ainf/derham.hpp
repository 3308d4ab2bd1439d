#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/kunneth.hpp"
#include "ainf/torus.hpp"

namespace ainf {

/// Band-limited de Rham model of T^n: basis e_f dx_I with every |f_j| <= band.
/// The product keeps e_f e_g = e_{f+g} only when f_j g_j >= 0 and |f_j + g_j| <= band
/// for all j, which is closed under d and keeps the wedge associative. Operations
/// are m_{1,0} = (-1)^{n+1} d and m_{2,0}(a, b) = (-1)^{|a|} a ^ b, unit e_0.
AInfAlgebra derham_algebra(int dim, int band = 2);

/// Basis keys of derham_algebra(dim, band), in basis order.
std::vector<FormKey> derham_keys(int dim, int band = 2);
/// Names like "e(1,-2)dx12" (1-based coordinates) and "e(0,0)" for the unit.
std::string derham_name(const FormKey& key);

TorusForm derham_to_form(int dim, int band, const Combination<Scalar>& x);
/// Throws std::invalid_argument for non-real coefficients or frequencies outside the band.
Combination<Scalar> derham_from_form(const TorusForm& form, int band = 2);

/// Factor inclusion of Omega(T^{n1}) (factor 1) or Omega(T^{n2}) (factor 2) into
/// Omega(T^{n1+n2}): xi -> (-1)^{|xi| n2} p1^* xi, respectively (-1)^{|xi| n1} p2^* xi.
/// Without the twist the plain pullback is used.
SubalgebraEmbedding derham_embedding(int n1, int n2, int factor, int band = 2, bool twist = true);

}  // namespace ainf
