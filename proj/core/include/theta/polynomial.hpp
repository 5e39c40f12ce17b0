#pragma once

#include <optional>
#include <span>
#include <vector>

#include "theta/monomial.hpp"
#include "theta/rational.hpp"

namespace theta {

struct Term {
  Monomial mono;
  Rational coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial on R^{n x k} with exact rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(Shape shape = {});
  Polynomial(Shape shape, Rational constant);

  /// Builds from arbitrary (unsorted, possibly repeated, possibly zero) terms.
  static Polynomial from_terms(Shape shape, std::vector<Term> terms);
  static Polynomial monomial(Shape shape, const Monomial& m, Rational coef = 1);
  /// x_{row,col}
  static Polynomial variable(Shape shape, int row, int col);

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] Polynomial homogeneous_component(int d) const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.front().mono; }
  [[nodiscard]] const Rational& leading_coefficient() const { return terms_.front().coef; }

  /// d/dx_var applied `order` times.
  [[nodiscard]] Polynomial derivative(int var, int order = 1) const;
  /// Same coefficients reinterpreted on another shape; `map` sends old flat
  /// variable indices to new ones.
  [[nodiscard]] Polynomial relabel(Shape target, std::span<const int> map) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  /// p^e for e >= 0.
  [[nodiscard]] Polynomial pow(int e) const;
  /// Scales by the positive rational that makes the coefficients coprime
  /// integers with a positive leading coefficient. Zero stays zero.
  [[nodiscard]] Polynomial primitive() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  Shape shape_;
  std::vector<Term> terms_;
};

/// Sorts, merges equal monomials and drops zero coefficients in place.
void normalize_terms(std::vector<Term>& terms);

}  // namespace theta
