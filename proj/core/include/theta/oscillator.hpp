#pragma once

#include <string>
#include <vector>

#include "theta/diff_operator.hpp"
#include "theta/signed_perm.hpp"

namespace theta {

struct NamedOperator {
  std::string id;
  DiffOperator op;
};

/// sl_2 acting on C[R^n]:
///   e = -1/2 sum x_i^2,  h = n/2 + sum x_i d_i,  f = 1/2 sum d_i^2.
struct Sl2Triple {
  int n = 1;
  DiffOperator e;
  DiffOperator h;
  DiffOperator f;
};

Sl2Triple build_sl2(int n);

/// sp_2k = p+ (+) gl_k (+) p- acting on C[R^{n x k}]:
///   P+_ij = sum_l x_li x_lj          (i <= j)
///   E_ij  = n/2 delta_ij + sum_l x_li d_lj
///   P-_ij = sum_l d_li d_lj          (i <= j)
struct Sp2kGenerators {
  Shape shape;
  std::vector<NamedOperator> p_plus;   ///< (i,j) with i <= j, row-major
  std::vector<NamedOperator> gl;       ///< all (i,j), row-major
  std::vector<NamedOperator> p_minus;  ///< (i,j) with i <= j, row-major

  /// 1-based accessors; p+/p- accept either index order.
  [[nodiscard]] const DiffOperator& E(int i, int j) const;
  [[nodiscard]] const DiffOperator& P_plus(int i, int j) const;
  [[nodiscard]] const DiffOperator& P_minus(int i, int j) const;
  [[nodiscard]] std::vector<NamedOperator> all() const;
};

Sp2kGenerators build_sp2k(int n, int k);

/// Infinitesimal O(n) action: L_ab = sum_j (x_aj d_bj - x_bj d_aj), a < b.
struct OrthGenerators {
  Shape shape;
  std::vector<NamedOperator> generators;
  /// L_ab for any a != b (L_ba = -L_ab); throws for a == b.
  [[nodiscard]] DiffOperator L(int a, int b) const;
};

OrthGenerators build_orth(int n, int k);

/// The commuting gl_m x gl_n pair on C[R^{m x n}] with no shifts:
///   row side  R_ab = sum_j x_aj d_bj,   column side  C_ij = sum_l x_li d_lj.
struct GlPairGenerators {
  Shape shape;
  std::vector<NamedOperator> row_side;     ///< all (a,b), row-major
  std::vector<NamedOperator> column_side;  ///< all (i,j), row-major
  [[nodiscard]] const DiffOperator& R(int a, int b) const;
  [[nodiscard]] const DiffOperator& C(int i, int j) const;
};

GlPairGenerators build_gl_pair(int m, int n);

/// Generators of the signed-permutation subgroup used for certification:
/// adjacent transpositions, r = diag(-1,1,...,1) and -1.
std::vector<std::pair<std::string, SignedPerm>> signed_perm_generators(int n);

enum class CertMethod { Symbolic, Applied };

struct RelationCheck {
  std::string relation;
  CertMethod method = CertMethod::Symbolic;
  bool passed = false;
  std::string detail;
};

struct RelationReport {
  Shape shape;
  int degree_cap = 0;
  std::size_t monomials_checked = 0;
  std::vector<RelationCheck> checks;
  [[nodiscard]] bool all_passed() const;
};

/// Certifies the sl_2 relations (k = 1), the graded sp_2k brackets, the
/// so(n) brackets, [o(n), sp_2k] = 0 and the commutation of signed
/// permutations with sp_2k, each both as an exact operator identity and by
/// application to every monomial of degree <= degree_cap.
RelationReport certify_relations(int n, int k, int degree_cap, int threads = 1);

}  // namespace theta
