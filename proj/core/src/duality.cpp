#include "theta/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/kernel.hpp"
#include "theta/oscillator.hpp"
#include "theta/parallel.hpp"

namespace theta {

namespace {

int search_bound(const OrthIrrepParam& label, const OccurrenceOptions& opts) {
  if (opts.degree_override) {
    if (*opts.degree_override < 0) throw InvalidArgument("degree override must be >= 0");
    return *opts.degree_override;
  }
  return label.lambda.size();
}

// Places a polynomial on R^{n x k} into the first k columns of R^{n x (k+1)}.
Polynomial add_column(const Polynomial& p) {
  const Shape s = p.shape();
  const Shape t{s.n, s.k + 1};
  std::vector<int> map(static_cast<std::size_t>(s.variables()));
  for (int l = 0; l < s.n; ++l)
    for (int j = 0; j < s.k; ++j) map[static_cast<std::size_t>(l * s.k + j)] = l * t.k + j;
  return p.relabel(t, map);
}

std::vector<int> row_degrees(const Shape& s, const Monomial& mono) {
  std::vector<int> out(static_cast<std::size_t>(s.n), 0);
  for (int l = 0; l < s.n; ++l)
    for (int j = 0; j < s.k; ++j) out[static_cast<std::size_t>(l)] += mono[l * s.k + j];
  return out;
}

std::vector<int> col_degrees(const Shape& s, const Monomial& mono) {
  std::vector<int> out(static_cast<std::size_t>(s.k), 0);
  for (int l = 0; l < s.n; ++l)
    for (int j = 0; j < s.k; ++j) out[static_cast<std::size_t>(j)] += mono[l * s.k + j];
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::int64_t integer_gl_dimension(const std::vector<int>& w) {
  GlIrrepParam p{static_cast<int>(w.size()), {}};
  for (int x : w) p.weight.emplace_back(x);
  return gl_dimension(p);
}

}  // namespace

bool OccurrenceResult::monotone() const {
  for (std::size_t i = 0; i + 1 < witnesses.size(); ++i)
    if (witnesses[i].present && !witnesses[i + 1].present) return false;
  return true;
}

OccurrenceWitness occurrence_at(const OrthIrrepParam& label, int k, int degree_bound) {
  OccurrenceWitness w;
  w.k = k;
  for (int d = 0; d <= degree_bound && !w.present; ++d) {
    auto comps = label_components(label, k, d, SpaceKind::Harmonic);
    if (comps.empty()) continue;
    const auto& comp = comps.front();
    NullFrame frame = build_null_frame(label.n, k);
    if (!is_joint_hwv(frame, comp.hwv_basis.front(), comp.so_weight, comp.column_degrees,
                      SpaceKind::Harmonic))
      throw Error("occurrence search produced a vector that is not a highest-weight vector");
    w.present = true;
    w.degree = d;
    w.column_degrees = comp.column_degrees;
    w.hwv = comp.hwv_basis.front();
  }
  return w;
}

OccurrenceResult first_occurrence(const OrthIrrepParam& label, const OccurrenceOptions& opts) {
  label.validate();
  const int bound = search_bound(label, opts);
  OccurrenceResult out;
  out.label = label;
  out.predicted = predicted_first_occurrence(label);
  out.degree_searched = bound;
  out.witnesses = parallel_map(static_cast<std::size_t>(label.n + 1), opts.threads,
                               [&](std::size_t k) {
                                 return occurrence_at(label, static_cast<int>(k), bound);
                               });
  for (const auto& w : out.witnesses)
    if (w.present) {
      out.n_pi = w.k;
      break;
    }
  return out;
}

bool ConservationCertificate::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConservationRow& r) { return r.passed; });
}

bool ConservationCertificate::predictions_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ConservationRow& r) { return r.matches_prediction; });
}

ConservationCertificate conservation_check(int n, int size_max, const OccurrenceOptions& opts) {
  const auto labels = enumerate_orth_params(n, size_max);
  std::vector<OrthIrrepParam> needed;
  for (const auto& l : labels) {
    needed.push_back(l);
    needed.push_back(det_twist(l));
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  OccurrenceOptions inner = opts;
  inner.threads = 1;
  auto results = parallel_map(needed.size(), opts.threads,
                              [&](std::size_t i) { return first_occurrence(needed[i], inner); });
  std::map<OrthIrrepParam, std::optional<int>> n_of;
  for (const auto& r : results) n_of[r.label] = r.n_pi;

  ConservationCertificate cert;
  cert.n = n;
  cert.size_max = size_max;
  for (const auto& l : labels) {
    ConservationRow row;
    row.label = l;
    row.n_pi = n_of.at(l);
    row.predicted = predicted_first_occurrence(l);
    row.twist = det_twist(l);
    row.n_twist = n_of.at(row.twist);
    if (row.n_pi && row.n_twist) row.sum = *row.n_pi + *row.n_twist;
    row.passed = row.sum == n;
    row.matches_prediction = row.n_pi && *row.n_pi == row.predicted;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

bool PersistenceReport::monotone() const {
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i].present && !steps[i + 1].present) return false;
  return true;
}

bool PersistenceReport::passed() const {
  if (!monotone()) return false;
  return std::all_of(steps.begin(), steps.end(), [](const PersistenceStep& s) {
    return !s.carried_witness_verified || *s.carried_witness_verified;
  });
}

PersistenceReport persistence_check(const OrthIrrepParam& label, int k_max,
                                    const OccurrenceOptions& opts) {
  label.validate();
  if (k_max < 0) throw InvalidArgument("persistence_check: k_max must be >= 0");
  const int bound = search_bound(label, opts);
  auto witnesses = parallel_map(static_cast<std::size_t>(k_max + 1), opts.threads,
                                [&](std::size_t k) {
                                  return occurrence_at(label, static_cast<int>(k), bound);
                                });
  PersistenceReport report;
  report.label = label;
  report.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    const auto& w = witnesses[static_cast<std::size_t>(k)];
    PersistenceStep step{k, w.present, w.degree, std::nullopt};
    if (k > 0) {
      const auto& prev = witnesses[static_cast<std::size_t>(k - 1)];
      if (prev.present) {
        Polynomial carried = add_column(*prev.hwv);
        std::vector<int> c = prev.column_degrees;
        c.push_back(0);
        NullFrame frame = build_null_frame(label.n, k);
        step.carried_witness_verified =
            is_joint_hwv(frame, carried, so_highest_weight(label), c, SpaceKind::Harmonic);
      }
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

bool StableRangeReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const StableRangeRow& r) { return r.present; });
}

StableRangeReport stable_range_check(int n, int size_max, const OccurrenceOptions& opts) {
  const auto labels = enumerate_orth_params(n, size_max);
  auto witnesses = parallel_map(labels.size(), opts.threads, [&](std::size_t i) {
    return occurrence_at(labels[i], n, search_bound(labels[i], opts));
  });
  StableRangeReport report;
  report.n = n;
  report.size_max = size_max;
  for (std::size_t i = 0; i < labels.size(); ++i)
    report.rows.push_back({labels[i], witnesses[i].present, witnesses[i].degree});
  return report;
}

bool GlDualityCertificate::passed() const {
  return total == expected && multiplicity_free && weights_match && partitions_complete;
}

GlDualityCertificate gl_duality_check(int m, int n, int d, int threads) {
  if (m < 1 || n < 1 || m > 4 || n > 4)
    throw UnsupportedRank("gl_duality_check supports 1 <= m, n <= 4");
  if (d < 0 || d > 6) throw UnsupportedRank("gl_duality_check supports 0 <= d <= 6");
  const GlPairGenerators pair = build_gl_pair(m, n);
  const Shape s = pair.shape;
  std::vector<MonomialMap> maps;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) maps.push_back(as_map(pair.R(a, b)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) maps.push_back(as_map(pair.C(i, j)));

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Monomial>> buckets;
  const GradedBasis basis = monomial_basis(m, n, d);
  for (const auto& mono : basis.monomials()) {
    auto alpha = row_degrees(s, mono);
    auto beta = col_degrees(s, mono);
    if (weakly_decreasing(alpha) && weakly_decreasing(beta))
      buckets[{std::move(alpha), std::move(beta)}].push_back(mono);
  }
  std::vector<const decltype(buckets)::value_type*> items;
  for (const auto& item : buckets) items.push_back(&item);
  auto kernels = parallel_map(items.size(), threads, [&](std::size_t i) {
    return joint_kernel(s, items[i]->second, maps).basis;
  });

  GlDualityCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.d = d;
  cert.expected = stars_and_bars(m * n, d).get_si();
  cert.multiplicity_free = true;
  cert.weights_match = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (kernels[i].empty()) continue;
    GlDualityComponent comp;
    comp.row_weight = items[i]->first.first;
    comp.column_weight = items[i]->first.second;
    comp.lambda = Partition(comp.row_weight);
    comp.multiplicity = static_cast<int>(kernels[i].size());
    comp.dim_m = integer_gl_dimension(comp.row_weight);
    comp.dim_n = integer_gl_dimension(comp.column_weight);
    comp.hwv_basis = std::move(kernels[i]);
    if (comp.multiplicity > 1) cert.multiplicity_free = false;
    if (Partition(comp.column_weight) != comp.lambda) cert.weights_match = false;
    cert.total += comp.multiplicity * comp.dim_m * comp.dim_n;
    cert.components.push_back(std::move(comp));
  }
  std::sort(cert.components.begin(), cert.components.end(),
            [](const GlDualityComponent& a, const GlDualityComponent& b) { return a.lambda > b.lambda; });
  std::vector<Partition> found;
  for (const auto& c : cert.components) found.push_back(c.lambda);
  std::vector<Partition> wanted = partitions_of(d, std::min(m, n));
  std::sort(wanted.begin(), wanted.end(), std::greater<>());
  cert.partitions_complete = found == wanted;
  return cert;
}

}  // namespace theta
