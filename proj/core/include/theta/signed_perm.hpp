#pragma once

#include <vector>

#include "theta/diff_operator.hpp"

namespace theta {

/// Signed permutation matrix g in O(n): g e_l = sign(l) e_{perm(l)}.
/// Indices are 0-based internally; factory functions take 1-based rows.
class SignedPerm {
 public:
  SignedPerm(std::vector<int> perm, std::vector<int> signs);

  static SignedPerm identity(int n);
  /// r = diag(-1, 1, ..., 1)
  static SignedPerm reflection(int n);
  /// diag(1, ..., 1, -1)
  static SignedPerm last_reflection(int n);
  static SignedPerm minus_identity(int n);
  /// Swaps rows a and b (1-based).
  static SignedPerm transposition(int n, int a, int b);

  [[nodiscard]] int n() const { return static_cast<int>(perm_.size()); }
  [[nodiscard]] int perm(int l) const { return perm_[static_cast<std::size_t>(l)]; }
  [[nodiscard]] int sign(int l) const { return signs_[static_cast<std::size_t>(l)]; }
  [[nodiscard]] int determinant() const;
  [[nodiscard]] SignedPerm inverse() const;
  /// Matrix product (this * other).
  [[nodiscard]] SignedPerm operator*(const SignedPerm& other) const;

  /// (g.f)(x) = f(g^{-1} x), i.e. x_{l,j} -> sign(l) x_{perm(l),j}.
  [[nodiscard]] Polynomial act(const Polynomial& p) const;
  /// Image of a single monomial: a signed monomial.
  [[nodiscard]] std::pair<int, Monomial> act(const Monomial& m, const Shape& shape) const;
  /// g D g^{-1}.
  [[nodiscard]] DiffOperator conjugate(const DiffOperator& d) const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// A signed permutation acting on a fixed ambient shape.
struct SignedPermAction {
  Shape shape;
  SignedPerm g;
};

/// Substitution action; throws ShapeMismatch when shapes differ.
Polynomial group_act(const SignedPermAction& action, const Polynomial& p);

}  // namespace theta
