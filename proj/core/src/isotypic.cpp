#include "theta/isotypic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "theta/errors.hpp"
#include "theta/graded_basis.hpp"
#include "theta/kernel.hpp"
#include "theta/parallel.hpp"

namespace theta {

namespace {

void require_supported(int n, int k, int k_max = kMaxIsotypicK) {
  if (n < 1 || k < 0) throw InvalidArgument("isotypic decomposition: need n >= 1, k >= 0");
  if (n > kMaxIsotypicN || k > k_max)
    throw UnsupportedRank("isotypic decomposition supports n <= " +
                          std::to_string(kMaxIsotypicN) + ", k <= " +
                          std::to_string(k_max) + " (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
}

bool weakly_decreasing(const std::vector<int>& c) {
  return std::is_sorted(c.begin(), c.end(), std::greater<>());
}

GlIrrepParam shifted_weight(int n, const std::vector<int>& c) {
  GlIrrepParam p{static_cast<int>(c.size()), {}};
  for (int cj : c) p.weight.push_back(Rational(cj) + Rational(n, 2));
  return p;
}

std::int64_t unshifted_gl_dimension(const std::vector<int>& c) {
  GlIrrepParam p{static_cast<int>(c.size()), {}};
  for (int cj : c) p.weight.emplace_back(cj);
  return gl_dimension(p);
}

using BucketKey = std::pair<std::vector<int>, std::vector<int>>;  // (c, mu)

// Monomials of degree d grouped by (column degrees, so weight); each group
// keeps descending graded-lex order.
std::map<BucketKey, std::vector<Monomial>> weight_buckets(const NullFrame& f, int d) {
  std::map<BucketKey, std::vector<Monomial>> out;
  GradedBasis basis = monomial_basis(f.shape.n, f.shape.k, d);
  for (const auto& mono : basis.monomials())
    out[{f.column_degrees(mono), f.so_weight(mono)}].push_back(mono);
  return out;
}

MonomialMap reflection_minus(const SignedPerm& g, Shape s, int sign) {
  return [g, s, sign](const Monomial& mono, std::vector<Term>& out) {
    auto [sg, image] = g.act(mono, s);
    out.push_back({image, Rational(sg)});
    out.push_back({mono, Rational(-sign)});
  };
}

JointKernel bucket_kernel(const NullFrame& f, std::span<const Monomial> monos, SpaceKind space,
                          std::optional<int> reflection_sign) {
  std::vector<MonomialMap> maps;
  for (const auto& op : f.raising) maps.push_back(as_map(op.op));
  for (const auto& op : f.gl_raising) maps.push_back(as_map(op.op));
  if (space == SpaceKind::Harmonic)
    for (const auto& op : f.p_minus) maps.push_back(as_map(op.op));
  if (reflection_sign) maps.push_back(reflection_minus(f.reflection, f.shape, *reflection_sign));
  return joint_kernel(f.shape, monos, maps);
}

IsotypicComponent make_component(const NullFrame& f, OrthIrrepParam label,
                                 const std::vector<int>& mu, const std::vector<int>& c,
                                 std::vector<Polynomial> basis) {
  IsotypicComponent comp;
  comp.label = std::move(label);
  comp.so_weight = mu;
  comp.column_degrees = c;
  comp.gl_weight = shifted_weight(f.shape.n, c);
  comp.multiplicity = static_cast<int>(basis.size());
  comp.orth_dimension = orth_dimension(comp.label);
  comp.gl_dimension = unshifted_gl_dimension(c);
  comp.hwv_basis = std::move(basis);
  return comp;
}

struct BucketResult {
  std::vector<IsotypicComponent> components;
  std::size_t kernel_dim = 0;
};

// Highest-weight vectors of one dominant weight space, grouped into O(n)
// labels. only_sign restricts the r-split case to one eigenvalue.
BucketResult analyze_bucket(const NullFrame& f, int d, std::span<const Monomial> monos,
                            const std::vector<int>& mu, const std::vector<int>& c,
                            SpaceKind space, std::optional<int> only_sign = std::nullopt) {
  const int n = f.shape.n;
  BucketResult out;
  if (n % 2 == 1) {
    const int sign = d % 2 == 0 ? 1 : -1;
    JointKernel k = bucket_kernel(f, monos, space, std::nullopt);
    out.kernel_dim = k.basis.size();
    if (!k.basis.empty())
      out.components.push_back(
          make_component(f, label_from_so_weight(n, mu, sign), mu, c, std::move(k.basis)));
    return out;
  }
  const int last = mu.back();
  if (last != 0) {
    JointKernel k = bucket_kernel(f, monos, space, std::nullopt);
    out.kernel_dim = k.basis.size();
    if (last > 0 && !k.basis.empty())
      out.components.push_back(
          make_component(f, label_from_so_weight(n, mu, 1), mu, c, std::move(k.basis)));
    return out;
  }
  if (only_sign) {
    JointKernel k = bucket_kernel(f, monos, space, *only_sign);
    out.kernel_dim = k.basis.size();
    if (!k.basis.empty())
      out.components.push_back(make_component(f, label_from_so_weight(n, mu, *only_sign), mu, c,
                                              std::move(k.basis)));
    return out;
  }
  JointKernel all = bucket_kernel(f, monos, space, std::nullopt);
  JointKernel plus = bucket_kernel(f, monos, space, 1);
  JointKernel minus = bucket_kernel(f, monos, space, -1);
  out.kernel_dim = all.basis.size();
  if (plus.basis.size() + minus.basis.size() != all.basis.size())
    throw AmbiguousIdentification(
        "reflection eigenspaces of the highest-weight space do not add up (" +
        std::to_string(plus.basis.size()) + " + " + std::to_string(minus.basis.size()) +
        " != " + std::to_string(all.basis.size()) + ")");
  if (!plus.basis.empty())
    out.components.push_back(
        make_component(f, label_from_so_weight(n, mu, 1), mu, c, std::move(plus.basis)));
  if (!minus.basis.empty())
    out.components.push_back(
        make_component(f, label_from_so_weight(n, mu, -1), mu, c, std::move(minus.basis)));
  return out;
}

std::int64_t space_dimension(int n, int k, int d, SpaceKind space) {
  GradedBasis basis = monomial_basis(n, k, d);
  auto total = static_cast<std::int64_t>(basis.size());
  if (space == SpaceKind::Full || k == 0) return total;
  Sp2kGenerators sp = build_sp2k(n, k);
  std::vector<DiffOperator> ops;
  for (const auto& p : sp.p_minus) ops.push_back(p.op);
  return total - static_cast<std::int64_t>(kernel_with_rank(ops, n, k, d).rank);
}

// Standard highest-weight vector of weight mu in null coordinates: the
// product of leading z-minors Delta_j^(a_j - a_{j+1}), a = mu with |mu_m|,
// using zb_m in place of z_m when mu_m < 0. Needs k >= length of mu.
Polynomial minor_product(const NullFrame& f, const std::vector<int>& mu) {
  const Shape& s = f.shape;
  const int m = f.m;
  std::vector<int> a(mu);
  if (m > 0) a.back() = std::abs(a.back());
  a.push_back(0);
  Polynomial out(s, Rational(1));
  for (int j = 1; j <= m; ++j) {
    const int exponent = a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)];
    if (exponent == 0) continue;
    std::vector<int> perm(static_cast<std::size_t>(j));
    std::iota(perm.begin(), perm.end(), 1);
    Polynomial det(s);
    do {
      int inversions = 0;
      for (int p = 0; p < j; ++p)
        for (int q = p + 1; q < j; ++q)
          if (perm[static_cast<std::size_t>(p)] > perm[static_cast<std::size_t>(q)]) ++inversions;
      Polynomial term(s, Rational(inversions % 2 == 0 ? 1 : -1));
      for (int r = 1; r <= j; ++r) {
        const int row = (r == m && mu.back() < 0) ? 2 * r : 2 * r - 1;
        term = term * Polynomial::variable(s, row, perm[static_cast<std::size_t>(r - 1)]);
      }
      det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = out * det.pow(exponent);
  }
  return out;
}

// Leading-monomial echelon form, one per weight.
class WeightSpans {
 public:
  // Adds p if it is independent of what was already added; returns whether
  // it was.
  bool insert(const std::vector<int>& weight, Polynomial p) {
    auto& pivots = spans_[weight];
    while (!p.is_zero()) {
      auto it = pivots.find(p.leading_monomial());
      if (it == pivots.end()) break;
      p = p - (p.leading_coefficient() / it->second.leading_coefficient()) * it->second;
    }
    if (p.is_zero()) return false;
    Polynomial q = p.primitive();
    pivots.emplace(q.leading_monomial(), std::move(q));
    ++count_;
    return true;
  }
  [[nodiscard]] std::int64_t count() const { return count_; }

 private:
  std::map<std::vector<int>, std::map<Monomial, Polynomial>> spans_;
  std::int64_t count_ = 0;
};

}  // namespace

std::string to_string(SpaceKind kind) { return kind == SpaceKind::Harmonic ? "harmonic" : "full"; }

std::string IsotypicReport::verdict() const {
  if (is_zero()) return "zero";
  if (components.size() == 1 && components.front().multiplicity == 1) return "irreducible";
  return "reducible";
}

bool is_joint_hwv(const NullFrame& frame, const Polynomial& v, const std::vector<int>& mu,
                  const std::vector<int>& c, SpaceKind space) {
  if (v.is_zero() || v.shape() != frame.shape) return false;
  for (const auto& op : frame.raising)
    if (!op.op.apply(v).is_zero()) return false;
  for (const auto& op : frame.gl_raising)
    if (!op.op.apply(v).is_zero()) return false;
  if (space == SpaceKind::Harmonic)
    for (const auto& op : frame.p_minus)
      if (!op.op.apply(v).is_zero()) return false;
  if (mu.size() != frame.cartan.size() || c.size() != frame.column_euler.size()) return false;
  for (std::size_t a = 0; a < mu.size(); ++a)
    if (frame.cartan[a].op.apply(v) != Rational(mu[a]) * v) return false;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (frame.column_euler[j].op.apply(v) != Rational(c[j]) * v) return false;
  return true;
}

std::int64_t so_module_dimension(int n, const std::vector<int>& mu) {
  if (n < 1) throw InvalidArgument("so_module_dimension: n must be >= 1");
  if (!so_dominant(n, mu)) throw InvalidArgument("so_module_dimension: weight is not dominant");
  static std::mutex cache_mutex;
  static std::map<std::pair<int, std::vector<int>>, std::int64_t> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({n, mu});
    if (it != cache.end()) return it->second;
  }
  int k = 0;
  for (int x : mu)
    if (x != 0) ++k;
  NullFrame f = build_null_frame(n, std::max(k, 1));
  Polynomial v = minor_product(f, mu);
  const std::vector<int> c = f.column_degrees(v.leading_monomial());
  if (!is_joint_hwv(f, v, mu, c, SpaceKind::Full))
    throw Error("so_module_dimension: minor product is not a highest-weight vector");
  WeightSpans spans;
  std::deque<Polynomial> queue;
  spans.insert(mu, v);
  queue.push_back(v);
  while (!queue.empty()) {
    Polynomial p = std::move(queue.front());
    queue.pop_front();
    for (const auto& y : f.lowering) {
      Polynomial q = y.op.apply(p);
      if (q.is_zero()) continue;
      if (spans.insert(f.so_weight(q.leading_monomial()), q)) queue.push_back(std::move(q));
    }
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(std::make_pair(n, mu), spans.count());
  return spans.count();
}

std::int64_t orth_dimension(const OrthIrrepParam& label) {
  std::int64_t d = so_module_dimension(label.n, so_highest_weight(label));
  return is_paired_label(label) ? 2 * d : d;
}

IsotypicReport isotypic_decomposition(int n, int k, int d, SpaceKind space, int threads) {
  require_supported(n, k);
  if (d < 0) throw InvalidArgument("isotypic decomposition: degree must be >= 0");
  NullFrame f = build_null_frame(n, k);
  auto buckets = weight_buckets(f, d);
  std::vector<std::pair<const BucketKey*, const std::vector<Monomial>*>> dominant;
  for (const auto& [key, monos] : buckets)
    if (weakly_decreasing(key.first) && so_dominant(n, key.second))
      dominant.emplace_back(&key, &monos);

  auto results = parallel_map(dominant.size(), threads, [&](std::size_t i) {
    const auto& [c, mu] = *dominant[i].first;
    return analyze_bucket(f, d, *dominant[i].second, mu, c, space);
  });

  IsotypicReport report;
  report.shape = f.shape;
  report.degree = d;
  report.space = space;
  std::map<BucketKey, std::size_t> dims;
  for (std::size_t i = 0; i < dominant.size(); ++i) {
    dims[*dominant[i].first] = results[i].kernel_dim;
    for (auto& comp : results[i].components) report.components.push_back(std::move(comp));
  }
  // r pairs the weight spaces mu and r(mu) when mu_m != 0 (even n).
  if (n % 2 == 0)
    for (const auto& [key, dim] : dims) {
      if (key.second.back() <= 0) continue;
      BucketKey mirror = key;
      mirror.second.back() = -mirror.second.back();
      auto it = dims.find(mirror);
      std::size_t other = it == dims.end() ? 0 : it->second;
      if (other != dim)
        throw AmbiguousIdentification("highest-weight spaces of mu and its reflection differ (" +
                                      std::to_string(dim) + " vs " + std::to_string(other) + ")");
    }
  std::sort(report.components.begin(), report.components.end(),
            [](const IsotypicComponent& a, const IsotypicComponent& b) {
              if (a.column_degrees != b.column_degrees) return a.column_degrees > b.column_degrees;
              return a.label < b.label;
            });
  report.space_dimension = space_dimension(n, k, d, space);
  report.hwv_verified = true;
  for (const auto& comp : report.components) {
    report.accounted_dimension +=
        static_cast<std::int64_t>(comp.multiplicity) * comp.orth_dimension * comp.gl_dimension;
    for (const auto& v : comp.hwv_basis)
      if (!is_joint_hwv(f, v, comp.so_weight, comp.column_degrees, space))
        report.hwv_verified = false;
  }
  return report;
}

std::vector<IsotypicComponent> label_components(const OrthIrrepParam& label, int k, int d,
                                                SpaceKind space) {
  label.validate();
  const int n = label.n;
  require_supported(n, k, kMaxTargetedK);
  if (d < 0) throw InvalidArgument("label_components: degree must be >= 0");
  const std::vector<int> mu = so_highest_weight(label);
  std::optional<int> sign;
  if (n % 2 == 1) {
    const int want = label_from_so_weight(n, mu, 1) == label ? 1 : -1;
    if ((d % 2 == 0 ? 1 : -1) != want) return {};
  } else if (mu.empty() || mu.back() == 0) {
    sign = label_from_so_weight(n, mu, 1) == label ? 1 : -1;
  }
  int mu_size = 0;
  for (int x : mu) mu_size += std::abs(x);
  if (d < mu_size) return {};
  NullFrame f = build_null_frame(n, k);
  std::vector<IsotypicComponent> out;
  for (const auto& [key, monos] : weight_buckets(f, d)) {
    if (key.second != mu || !weakly_decreasing(key.first)) continue;
    auto res = analyze_bucket(f, d, monos, mu, key.first, space, sign);
    for (auto& comp : res.components)
      if (comp.label == label) out.push_back(std::move(comp));
  }
  return out;
}

bool Theorem11Verdict::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Theorem11Row& r) { return r.passed; });
}

Theorem11Verdict check_theorem_1_1(int n, int d_max, int threads) {
  Theorem11Verdict out{n, d_max, {}};
  for (int d = 0; d <= d_max; ++d) {
    IsotypicReport rep = isotypic_decomposition(n, 1, d, SpaceKind::Harmonic, threads);
    Theorem11Row row;
    row.degree = d;
    row.dimension = rep.space_dimension;
    if (!rep.components.empty()) row.label = rep.components.front().label;
    const bool consistent = rep.dimension_check() && rep.hwv_verified;
    if (rep.is_zero()) {
      row.passed = rep.components.empty();
      row.detail = "zero";
    } else {
      row.passed = consistent && rep.verdict() == "irreducible";
      row.detail = rep.verdict();
      if (!consistent) row.detail += " (dimension or highest-weight check failed)";
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool Theorem12Verdict::passed() const {
  return multiplicity_free && label_determines_weight && weight_determines_label &&
         dimensions_match;
}

Theorem12Verdict check_theorem_1_2(int n, int k, int d_max, int threads) {
  Theorem12Verdict out;
  out.n = n;
  out.k = k;
  out.d_max = d_max;
  out.dimensions_match = true;
  std::map<OrthIrrepParam, int> multiplicity;
  std::map<OrthIrrepParam, std::set<std::vector<int>>> weights_of;
  std::map<std::vector<int>, std::set<OrthIrrepParam>> labels_of;
  for (int d = 0; d <= d_max; ++d) {
    IsotypicReport rep = isotypic_decomposition(n, k, d, SpaceKind::Harmonic, threads);
    if (!rep.dimension_check() || !rep.hwv_verified) {
      out.dimensions_match = false;
      out.failures.push_back("degree " + std::to_string(d) + ": dimension or highest-weight check failed");
    }
    for (const auto& comp : rep.components) {
      multiplicity[comp.label] += comp.multiplicity;
      weights_of[comp.label].insert(comp.column_degrees);
      labels_of[comp.column_degrees].insert(comp.label);
    }
    out.reports.push_back(std::move(rep));
  }
  out.multiplicity_free = true;
  for (const auto& [label, mult] : multiplicity)
    if (mult > 1) {
      out.multiplicity_free = false;
      out.failures.push_back(label.to_string() + " occurs " + std::to_string(mult) + " times");
    }
  out.label_determines_weight = true;
  for (const auto& [label, ws] : weights_of)
    if (ws.size() > 1) {
      out.label_determines_weight = false;
      out.failures.push_back(label.to_string() + " pairs with several gl weights");
    }
  out.weight_determines_label = true;
  for (const auto& [w, ls] : labels_of)
    if (ls.size() > 1) {
      out.weight_determines_label = false;
      out.failures.push_back("a gl weight pairs with several O(n) labels");
    }
  return out;
}

}  // namespace theta
