#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws InvalidArgument on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);
  /// From column lengths (the parts of the conjugate).
  static Partition from_columns(std::vector<int> columns);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  /// lambda_i for 1-based i, 0 past the end.
  [[nodiscard]] int part(int i) const;
  [[nodiscard]] int size() const;
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] Partition conjugate() const;
  /// "()", "(2)", "(2,1,1)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Every partition of `size` with at most `max_length` parts, in reverse
/// lexicographic order ((3), (2,1), (1,1,1)).
std::vector<Partition> partitions_of(int size, int max_length);

/// O(n) label: partition with lambda'_1 + lambda'_2 <= n.
struct OrthIrrepParam {
  int n = 1;
  Partition lambda;

  [[nodiscard]] bool admissible() const;
  /// Throws InvalidArgument when inadmissible.
  void validate() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const OrthIrrepParam&, const OrthIrrepParam&) = default;
  friend auto operator<=>(const OrthIrrepParam&, const OrthIrrepParam&) = default;
};

/// gl_k label: dominant weight, possibly half-integral.
struct GlIrrepParam {
  int k = 0;
  std::vector<Rational> weight;

  [[nodiscard]] bool dominant() const;
  friend bool operator==(const GlIrrepParam&, const GlIrrepParam&) = default;
};

/// Admissible labels with |lambda| <= size_max, by size and then reverse
/// lexicographic order.
std::vector<OrthIrrepParam> enumerate_orth_params(int n, int size_max);

/// Tensoring with det: the first column length c becomes n - c.
OrthIrrepParam det_twist(const OrthIrrepParam& p);

/// Weyl dimension formula. The weight must be dominant with integral
/// differences (a uniform half-integral shift is fine).
std::int64_t gl_dimension(const GlIrrepParam& p);

/// Conjectured first occurrence index: the first column length of lambda.
int predicted_first_occurrence(const OrthIrrepParam& p);

/// Rank of so(n): floor(n/2).
inline int so_rank(int n) { return n / 2; }

/// Dominant so(n) highest weight (length so_rank(n)) of the restriction of
/// the label; for even n and lambda'_1 = n/2 this is the summand with a
/// positive last entry.
std::vector<int> so_highest_weight(const OrthIrrepParam& p);

/// Label of the O(n)-type generated by a joint highest-weight vector.
///   mu        dominant so(n) weight (last entry may be negative for even n)
///   sign      odd n: the eigenvalue of -1; even n with mu_m = 0: the
///             eigenvalue of the reflection in the last coordinate; ignored
///             otherwise.
OrthIrrepParam label_from_so_weight(int n, const std::vector<int>& mu, int sign);

/// True when the label restricts to two so(n)-types (even n, lambda'_1 = n/2).
bool is_paired_label(const OrthIrrepParam& p);

}  // namespace theta
