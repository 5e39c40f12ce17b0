#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/null_frame.hpp"
#include "theta/rep_params.hpp"

namespace theta {

enum class SpaceKind { Harmonic, Full };

std::string to_string(SpaceKind kind);

/// Largest n and k the identification engine accepts.
inline constexpr int kMaxIsotypicN = 5;
inline constexpr int kMaxIsotypicK = 4;
/// The single-label search goes one column further so that k = n is
/// reachable at n = 5.
inline constexpr int kMaxTargetedK = 5;

struct IsotypicComponent {
  OrthIrrepParam label;
  std::vector<int> so_weight;        ///< so(n) weight of the reported vectors
  std::vector<int> column_degrees;   ///< gl_k weight without the n/2 shift
  GlIrrepParam gl_weight;            ///< column degrees + n/2
  int multiplicity = 0;
  std::int64_t orth_dimension = 0;   ///< by lowering-operator enumeration
  std::int64_t gl_dimension = 0;     ///< Weyl dimension formula
  /// Joint highest-weight vectors in null coordinates (see NullFrame).
  std::vector<Polynomial> hwv_basis;
};

struct IsotypicReport {
  Shape shape;
  int degree = 0;
  SpaceKind space = SpaceKind::Harmonic;
  /// Ordered by column degrees (descending lex), then by label.
  std::vector<IsotypicComponent> components;
  /// Dimension of the decomposed space, computed in the x coordinates.
  std::int64_t space_dimension = 0;
  /// sum of multiplicity * orth_dimension * gl_dimension
  std::int64_t accounted_dimension = 0;
  /// Every reported vector is re-checked against the raising operators,
  /// the weight operators and (harmonic case) the Laplacians.
  bool hwv_verified = false;

  [[nodiscard]] bool is_zero() const { return space_dimension == 0; }
  [[nodiscard]] bool dimension_check() const { return space_dimension == accounted_dimension; }
  /// "zero", "irreducible" (one component with multiplicity one) or
  /// "reducible".
  [[nodiscard]] std::string verdict() const;
};

/// Joint O(n) x gl_k decomposition of H^d or C^d on R^{n x k}.
/// Throws UnsupportedRank outside n <= 5, k <= 4 and
/// AmbiguousIdentification when the component-group data do not determine
/// the labels consistently.
IsotypicReport isotypic_decomposition(int n, int k, int d, SpaceKind space, int threads = 1);

/// Components of one label in degree d, found by searching only the weight
/// spaces of that label's so(n) weight. Accepts k <= kMaxTargetedK.
std::vector<IsotypicComponent> label_components(const OrthIrrepParam& label, int k, int d,
                                                SpaceKind space);

/// Dimension of the irreducible so(n)-module of dominant weight mu, by
/// spanning the lowering-operator orbit of a highest-weight vector.
std::int64_t so_module_dimension(int n, const std::vector<int>& mu);

/// O(n) dimension of a label: so_module_dimension, doubled for paired labels.
std::int64_t orth_dimension(const OrthIrrepParam& label);

/// True when v is annihilated by every raising operator of `frame` (and the
/// Laplacians when harmonic) and has so weight mu and column degrees c.
bool is_joint_hwv(const NullFrame& frame, const Polynomial& v, const std::vector<int>& mu,
                  const std::vector<int>& c, SpaceKind space);

struct Theorem11Row {
  int degree = 0;
  std::int64_t dimension = 0;
  std::optional<OrthIrrepParam> label;   ///< empty for the zero space
  bool passed = false;
  std::string detail;
};

struct Theorem11Verdict {
  int n = 0;
  int d_max = 0;
  std::vector<Theorem11Row> rows;
  [[nodiscard]] bool passed() const;
};

/// Each H^d[R^n], d <= d_max, is zero or one irreducible O(n)-type.
Theorem11Verdict check_theorem_1_1(int n, int d_max, int threads = 1);

struct Theorem12Verdict {
  int n = 0;
  int k = 0;
  int d_max = 0;
  std::vector<IsotypicReport> reports;   ///< one per degree
  bool multiplicity_free = false;
  bool label_determines_weight = false;
  bool weight_determines_label = false;
  bool dimensions_match = false;
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const;
};

/// Multiplicity freeness of H[R^{n x k}] across degrees <= d_max and
/// injectivity of the correspondence between O(n) labels and gl_k weights.
Theorem12Verdict check_theorem_1_2(int n, int k, int d_max, int threads = 1);

}  // namespace theta
