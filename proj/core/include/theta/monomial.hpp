#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace theta {

/// Hard ceiling on n*k. Desk-scale instances stay well below it.
inline constexpr std::size_t kMaxVariables = 32;

/// Ambient space R^{n x k}: n rows (the O(n) side), k columns (the gl_k side).
struct Shape {
  int n = 1;
  int k = 1;

  [[nodiscard]] int variables() const { return n * k; }
  /// Flat variable index of x_{row,col}; row in [1,n], col in [1,k].
  [[nodiscard]] int index(int row, int col) const { return (row - 1) * k + (col - 1); }
  [[nodiscard]] int row_of(int var) const { return var / k + 1; }
  [[nodiscard]] int col_of(int var) const { return var % k + 1; }
  /// Throws InvalidArgument unless n >= 1, k >= 0 and n*k <= kMaxVariables.
  void validate() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Throws ShapeMismatch with `what` in the message when a != b.
void require_same_shape(const Shape& a, const Shape& b, const char* what);

/// A variable (row, col) of R^{n x k}, both 1-based.
struct VarIndex {
  int row = 1;
  int col = 1;
  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

/// Exponent vector over at most kMaxVariables variables.
///
/// Ordering is graded lexicographic on the flat (row, col) index: total
/// degree first, then the exponent of the first variable, and so on. The
/// canonical storage order everywhere in the library is *descending*.
class Monomial {
 public:
  Monomial() = default;
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int flat_index);

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int operator[](int var) const { return exps_[static_cast<std::size_t>(var)]; }
  [[nodiscard]] bool is_one() const { return degree_ == 0; }
  /// True when every exponent of `other` is <= the matching one here.
  [[nodiscard]] bool divisible_by(const Monomial& other) const;

  /// Adds `delta` to the exponent of `var`; throws on negative or overflow.
  void bump(int var, int delta);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exponent-wise difference; requires a.divisible_by(b).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.exps_ <=> b.exps_;
  }

  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] std::span<const std::uint8_t> exponents() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

/// Descending graded-lex comparator (the canonical order).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace theta
