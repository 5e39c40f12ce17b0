#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "theta/polynomial.hpp"

namespace theta {

/// One normal-ordered term: coefficient polynomial to the left of the
/// derivative monomial d^deriv.
struct OperatorTerm {
  Polynomial coef;
  Monomial deriv;
  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// Linear differential operator with polynomial coefficients (an element of
/// the Weyl algebra), stored in normal order: sum_beta c_beta(x) d^beta.
///
/// Terms are sorted by derivative monomial (descending) with distinct
/// derivatives and nonzero coefficients, so == is operator equality.
class DiffOperator {
 public:
  explicit DiffOperator(Shape shape = {});
  static DiffOperator from_terms(Shape shape, std::vector<OperatorTerm> terms);
  static DiffOperator scalar(Shape shape, Rational c);
  static DiffOperator multiplication(const Polynomial& p);
  /// d/dx_{row,col}
  static DiffOperator derivative(Shape shape, int row, int col);

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] std::span<const OperatorTerm> terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Uniform degree shift (deg coef - |deriv|) if every term shares one.
  /// The zero operator reports nullopt.
  [[nodiscard]] std::optional<int> degree_shift() const;

  [[nodiscard]] Polynomial apply(const Polynomial& p) const;
  [[nodiscard]] Polynomial apply(const Monomial& m) const;
  /// Appends the terms of this operator applied to coef*m onto `out`
  /// without normalizing.
  void apply_into(const Monomial& m, const Rational& coef, std::vector<Term>& out) const;

  DiffOperator operator-() const;
  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const Rational& c, const DiffOperator& d);
  /// Composition a∘b, normal ordered by the Leibniz rule.
  friend DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

  /// Coordinates in the basis {x^alpha d^beta}; used for exact span solves.
  [[nodiscard]] std::map<std::pair<Monomial, Monomial>, Rational> coordinates() const;

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  Shape shape_;
  std::vector<OperatorTerm> terms_;
};

/// ab - ba as a normal-ordered operator.
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

}  // namespace theta
