#pragma once

#include <string>
#include <vector>

#include "theta/polynomial.hpp"
#include "theta/rational.hpp"

namespace theta {

/// H^d[R^{n x k}]: the common kernel of the Laplacians P-_ij in degree d.
struct HarmonicSpace {
  Shape shape;
  int degree = 0;
  std::vector<Polynomial> basis;
  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

HarmonicSpace harmonic_space(int n, int k, int d);

/// binom(n+d-1, d) - binom(n+d-3, d-2), the k = 1 dimension formula.
std::int64_t harmonic_dimension_formula(int n, int d);

/// The invariant quadratic q = sum_l x_l^2 on R^{n x 1}.
Polynomial invariant_quadratic(int n);
/// r_ij = sum_l x_li x_lj on R^{n x k}.
Polynomial column_pairing(int n, int k, int i, int j);

struct SeparationPiece {
  int power = 0;            ///< j in q^j H^d
  int harmonic_degree = 0;  ///< d = m - 2j
  std::int64_t dimension = 0;
};

struct SeparationCertificate {
  int n = 0;
  int m = 0;
  std::vector<SeparationPiece> pieces;
  std::int64_t total_dimension = 0;  ///< binom(n+m-1, m)
  std::int64_t pieces_dimension = 0; ///< sum of piece dimensions
  std::int64_t combined_rank = 0;    ///< rank of the union of q^j H^d bases
  [[nodiscard]] bool passed() const {
    return total_dimension == pieces_dimension && combined_rank == total_dimension;
  }
};

/// C^m[R^n] = (+)_{2j+d=m} q^j H^d[R^n], checked on explicit bases.
SeparationCertificate separation_of_variables(int n, int m);

struct LadderRung {
  int index = 0;
  Rational eigenvalue;          ///< d + n/2 + 2j
  std::vector<Polynomial> basis;
  bool eigenvalue_verified = false;
};

struct WeightLadder {
  int n = 0;
  int degree = 0;
  std::vector<LadderRung> rungs;
  bool e_injective = false;       ///< e maps rung j onto rung j+1 injectively
  bool f_lowers = false;          ///< f maps rung j+1 into rung j
  bool f_kills_base = false;      ///< f vanishes on rung 0
  [[nodiscard]] bool passed() const;
};

/// Builds q^j H^d[R^n] for j = 0..rungs and checks the sl_2 action on it.
/// Throws InvalidArgument when H^d[R^n] = 0.
WeightLadder weight_ladder(int n, int d, int rungs);

/// O(n)-invariants of degree d on R^{n x k}: the common kernel of the
/// o(n) generators, r - 1 and (even n) (-1) - 1.
std::vector<Polynomial> invariant_subspace(int n, int k, int d);

}  // namespace theta
