#pragma once

#include <optional>
#include <vector>

#include "theta/polynomial.hpp"

namespace theta {

/// Ordered monomial basis of the degree-d piece C^d[R^{n x k}], in
/// descending graded-lex order.
class GradedBasis {
 public:
  GradedBasis(Shape shape, int degree, std::vector<Monomial> monomials);

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const std::vector<Monomial>& monomials() const { return monomials_; }
  [[nodiscard]] const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  /// Position of m in the basis, if present.
  [[nodiscard]] std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coordinates of a homogeneous degree-d polynomial.
  [[nodiscard]] std::vector<Rational> coordinates(const Polynomial& p) const;
  [[nodiscard]] Polynomial polynomial(const std::vector<Rational>& coords) const;

 private:
  Shape shape_;
  int degree_;
  std::vector<Monomial> monomials_;
};

/// All monomials of degree d on R^{n x k}. k = 0 is allowed: degree 0 gives
/// the single empty monomial, higher degrees give an empty basis.
GradedBasis monomial_basis(int n, int k, int d);

/// Monomials of degree d in `nvars` variables starting at flat index
/// `first`, descending lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d, int first = 0);

/// Every monomial of degree <= cap on the shape, ascending degree, each
/// degree block in descending order.
std::vector<Monomial> monomials_up_to(Shape shape, int cap);

/// binom(nvars + d - 1, d) as an exact integer (1 when d == 0).
mpz_class stars_and_bars(int nvars, int d);

}  // namespace theta
