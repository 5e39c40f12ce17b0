#pragma once

#include <vector>

#include "theta/oscillator.hpp"
#include "theta/signed_perm.hpp"

namespace theta {

/// Complex null coordinates on R^{n x k}, written with rational operators.
/// Row 2a-1 carries z_a = x_{2a-1} + i x_{2a}, row 2a carries its
/// conjugate zb_a (a = 1..m, m = floor(n/2)); for odd n row n carries
/// w = x_n. The quadratic form becomes sum_a z_a zb_a + w^2, so every
/// operator below has rational coefficients.
struct NullFrame {
  Shape shape;
  int m = 0;
  /// Cartan elements H_a = sum_j (z_aj dz_aj - zb_aj dzb_aj).
  std::vector<NamedOperator> cartan;
  /// Root vectors of so(n) for the roots e_a - e_b, e_a + e_b (a < b) and
  /// e_a (odd n).
  std::vector<NamedOperator> raising;
  std::vector<NamedOperator> lowering;
  /// Column Euler operators C_jj = sum_l x_lj d_lj (no shift).
  std::vector<NamedOperator> column_euler;
  /// E_ij = sum_l x_li d_lj for i < j; the expression is frame-independent.
  std::vector<NamedOperator> gl_raising;
  /// Laplacians P-_ij, i <= j, rewritten in null coordinates.
  std::vector<NamedOperator> p_minus;
  /// The reflection x_n -> -x_n: swaps z_m and zb_m (even n), w -> -w (odd n).
  SignedPerm reflection;

  /// so(n) weight of a monomial: (deg z_a - deg zb_a)_a.
  [[nodiscard]] std::vector<int> so_weight(const Monomial& mono) const;
  /// Degree in each column.
  [[nodiscard]] std::vector<int> column_degrees(const Monomial& mono) const;
};

/// Requires n >= 1, k >= 0 and a valid shape.
NullFrame build_null_frame(int n, int k);

/// Dominance for so(n): mu_1 >= ... >= mu_{m-1} >= |mu_m| for even n,
/// mu_1 >= ... >= mu_m >= 0 for odd n.
bool so_dominant(int n, const std::vector<int>& mu);

}  // namespace theta
