#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "theta/isotypic.hpp"

namespace theta {

struct OccurrenceOptions {
  /// Search degrees 0..bound; the default bound is |lambda|.
  std::optional<int> degree_override;
  int threads = 1;
};

/// Presence of a label in the harmonics of R^{n x k}, degrees <= bound.
struct OccurrenceWitness {
  int k = 0;
  bool present = false;
  int degree = -1;                   ///< lowest degree where it occurs
  std::vector<int> column_degrees;   ///< gl_k weight of the witness, unshifted
  std::optional<Polynomial> hwv;     ///< null coordinates
};

struct OccurrenceResult {
  OrthIrrepParam label;
  std::optional<int> n_pi;           ///< empty when absent for every k <= n
  int predicted = 0;                 ///< lambda'_1
  int degree_searched = 0;
  std::vector<OccurrenceWitness> witnesses;   ///< k = 0..n
  /// Never present at k and absent at k + 1 in the table.
  [[nodiscard]] bool monotone() const;
};

OccurrenceResult first_occurrence(const OrthIrrepParam& label, const OccurrenceOptions& opts = {});

/// Presence at a single k (degrees 0..bound).
OccurrenceWitness occurrence_at(const OrthIrrepParam& label, int k, int degree_bound);

struct ConservationRow {
  OrthIrrepParam label;
  std::optional<int> n_pi;
  int predicted = 0;
  OrthIrrepParam twist;
  std::optional<int> n_twist;
  int sum = -1;
  bool passed = false;               ///< sum == n
  bool matches_prediction = false;   ///< n_pi == lambda'_1
};

struct ConservationCertificate {
  int n = 0;
  int size_max = 0;
  std::vector<ConservationRow> rows;
  [[nodiscard]] bool passed() const;                ///< every sum equals n
  [[nodiscard]] bool predictions_hold() const;      ///< every n_pi equals lambda'_1
};

ConservationCertificate conservation_check(int n, int size_max, const OccurrenceOptions& opts = {});

struct PersistenceStep {
  int k = 0;
  bool present = false;
  int degree = -1;
  /// The witness from k - 1, placed in the first k - 1 columns, is again a
  /// harmonic joint highest-weight vector (unset when there is none).
  std::optional<bool> carried_witness_verified;
};

struct PersistenceReport {
  OrthIrrepParam label;
  int k_max = 0;
  std::vector<PersistenceStep> steps;
  [[nodiscard]] bool monotone() const;
  [[nodiscard]] bool passed() const;
};

PersistenceReport persistence_check(const OrthIrrepParam& label, int k_max,
                                    const OccurrenceOptions& opts = {});

struct StableRangeRow {
  OrthIrrepParam label;
  bool present = false;
  int degree = -1;
};

struct StableRangeReport {
  int n = 0;
  int size_max = 0;
  std::vector<StableRangeRow> rows;
  [[nodiscard]] bool passed() const;
};

/// Every admissible label with |lambda| <= size_max occurs at k = n.
StableRangeReport stable_range_check(int n, int size_max, const OccurrenceOptions& opts = {});

struct GlDualityComponent {
  Partition lambda;                  ///< from the gl_m weight
  std::vector<int> row_weight;       ///< gl_m highest weight
  std::vector<int> column_weight;    ///< gl_n highest weight
  int multiplicity = 0;
  std::int64_t dim_m = 0;
  std::int64_t dim_n = 0;
  std::vector<Polynomial> hwv_basis;
};

struct GlDualityCertificate {
  int m = 0;
  int n = 0;
  int d = 0;
  std::vector<GlDualityComponent> components;
  std::int64_t total = 0;            ///< sum of mult * dim_m * dim_n
  std::int64_t expected = 0;         ///< binom(mn + d - 1, d)
  bool multiplicity_free = false;
  bool weights_match = false;        ///< row and column weights give the same lambda
  bool partitions_complete = false;  ///< exactly the lambda |- d with length <= min(m,n)
  [[nodiscard]] bool passed() const;
};

/// Decomposes C^d[R^{m x n}] under the commuting gl_m x gl_n pair.
GlDualityCertificate gl_duality_check(int m, int n, int d, int threads = 1);

}  // namespace theta
