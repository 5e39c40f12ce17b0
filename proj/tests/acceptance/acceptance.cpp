// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "theta/duality.hpp"
#include "theta/harmonic.hpp"
#include "theta/isotypic.hpp"
#include "theta/kernel.hpp"
#include "theta/oscillator.hpp"

using namespace theta;

namespace {

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
};

int threads_for_run() {
  const char* t = std::getenv("THETA_ACCEPTANCE_THREADS");
  return t ? std::max(1, std::atoi(t)) : 1;
}

// 1. operator relations, both certification modes
void relations(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      const RelationReport r = certify_relations(n, k, 6, threads_for_run());
      std::set<std::string> symbolic, applied;
      for (const auto& ch : r.checks) {
        if (!ch.passed) c.fail(ch.relation + " at n=" + std::to_string(n) + ",k=" + std::to_string(k));
        (ch.method == CertMethod::Symbolic ? symbolic : applied).insert(ch.relation);
      }
      if (symbolic.empty() || symbolic != applied) c.fail("modes disagree on the relation list");
      if (k == 1 && !symbolic.contains("sl2: [e,f] = h")) c.fail("[e,f] = h missing");
    }
}

// 2. spherical harmonics
void spherical(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    const Theorem11Verdict v = check_theorem_1_1(n, 6, threads_for_run());
    if (!v.passed()) c.fail("H^d not zero-or-irreducible at n=" + std::to_string(n));
    for (const auto& row : v.rows) {
      if (row.dimension == 0) continue;
      const WeightLadder w = weight_ladder(n, row.degree, 2);
      if (!w.passed() || w.rungs.size() != 3) c.fail("ladder");
      for (std::size_t j = 0; j < w.rungs.size(); ++j) {
        const Rational expect(2 * row.degree + n + 4 * static_cast<int>(j), 2);
        if (w.rungs[j].eigenvalue != expect || !w.rungs[j].eigenvalue_verified) c.fail("h eigenvalue");
      }
    }
  }
}

// 3. multiplicity freeness and the label <-> weight bijection
void duality(Check& c) {
  for (auto [n, k] : {std::pair{2, 2}, {3, 1}, {3, 2}, {4, 2}}) {
    const Theorem12Verdict v = check_theorem_1_2(n, k, 4, threads_for_run());
    const std::string at = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
    if (!v.multiplicity_free) c.fail("multiplicity" + at);
    if (!v.label_determines_weight || !v.weight_determines_label) c.fail("not a bijection" + at);
    if (!v.dimensions_match) c.fail("dimension mismatch" + at);
    if (!v.passed()) c.fail("verdict" + at);
  }
}

// 4. conservation; the brute-force sum and the first-column prediction are separate routes
void conservation(Check& c) {
  OccurrenceOptions opts;
  opts.threads = threads_for_run();
  for (int n = 1; n <= 4; ++n) {
    const ConservationCertificate cert = conservation_check(n, 4, opts);
    if (!cert.passed()) c.fail("sum != n at n=" + std::to_string(n));
    if (!cert.predictions_hold()) c.fail("n(pi) != first column at n=" + std::to_string(n));
    bool saw_det = false, saw_trivial = false;
    for (const auto& row : cert.rows) {
      if (row.sum != n) c.fail("row " + row.label.to_string());
      if (row.label.lambda.empty()) saw_trivial = row.n_pi == 0;
      if (row.label.lambda.length() == n && row.label.lambda.size() == n) saw_det = row.n_pi == n;
    }
    if (!saw_trivial || !saw_det) c.fail("anchor n(det)=n or n(1)=0 at n=" + std::to_string(n));
  }
}

// 5. invariants: q^{d/2} for k = 1, the r_ij in degree 2 for n >= 2k
void invariants(Check& c) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 8; ++d) {
      const auto b = invariant_subspace(n, 1, d);
      if (b.size() != (d % 2 == 0 ? 1u : 0u)) c.fail("dim at n=" + std::to_string(n) + ",d=" + std::to_string(d));
      if (b.size() == 1 && b[0].primitive() != invariant_quadratic(n).pow(d / 2).primitive())
        c.fail("not q^{d/2}");
    }
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
    const auto b = invariant_subspace(n, k, 2);
    std::vector<Polynomial> r;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j) r.push_back(column_pairing(n, k, i, j));
    std::vector<Polynomial> both = b;
    both.insert(both.end(), r.begin(), r.end());
    if (b.size() != r.size() || polynomial_rank(r) != r.size() || polynomial_rank(both) != r.size())
      c.fail("degree-2 invariants != span r_ij at n=" + std::to_string(n));
  }
}

// 6. Cauchy identity for the gl_m x gl_n pair
void type_two(Check& c) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 5; ++d) {
        const GlDualityCertificate g = gl_duality_check(m, n, d, threads_for_run());
        const std::string at = " at " + std::to_string(m) + "x" + std::to_string(n) + ",d=" + std::to_string(d);
        if (g.total != binom(m * n + d - 1, d)) c.fail("Cauchy sum" + at);
        if (!g.multiplicity_free || !g.weights_match || !g.partitions_complete) c.fail("components" + at);
      }
}

// 7. persistence and stable range
void persistence(Check& c) {
  OccurrenceOptions opts;
  opts.threads = threads_for_run();
  for (int n = 1; n <= 4; ++n) {
    const int k_max = std::min(n + 1, kMaxTargetedK);
    for (const auto& label : enumerate_orth_params(n, 3)) {
      const PersistenceReport r = persistence_check(label, k_max, opts);
      if (!r.monotone() || !r.passed()) c.fail("persistence " + label.to_string());
    }
  }
  for (int n = 1; n <= 5; ++n)
    if (!stable_range_check(n, 3, opts).passed()) c.fail("stable range n=" + std::to_string(n));
}

// 8. byte-identical artifacts across thread counts
void determinism(Check& c) {
  using cli::RunConfig;
  std::vector<RunConfig> runs;
  auto add = [&](std::string cmd, std::string target, auto&& set) {
    RunConfig r;
    r.command = std::move(cmd);
    r.target = std::move(target);
    set(r);
    runs.push_back(r);
  };
  add("check", "relations", [](RunConfig& r) { r.n = 3; r.k = 2; });
  add("check", "spherical-harmonics", [](RunConfig& r) { r.n = 4; });
  add("check", "duality", [](RunConfig& r) { r.n = 4; r.k = 2; });
  add("check", "conservation", [](RunConfig& r) { r.n = 4; r.size_max = 4; });
  add("check", "gl-duality", [](RunConfig& r) { r.m = 3; r.n = 3; r.d_max = 5; });
  add("check", "persistence", [](RunConfig& r) { r.n = 3; });
  add("check", "stable-range", [](RunConfig& r) { r.n = 4; });
  add("invariants", "", [](RunConfig& r) { r.n = 4; });
  add("harmonics", "", [](RunConfig& r) { r.n = 3; r.k = 2; r.d_max = 3; r.seed = 17; });

  const auto dir = std::filesystem::temp_directory_path() / "theta-acceptance";
  std::filesystem::create_directories(dir);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  int idx = 0;
  for (auto r : runs) {
    std::string files[2];
    int t = 0;
    for (int threads : {1, 3}) {
      r.threads = threads;
      r.out = (dir / (std::to_string(idx) + "-t" + std::to_string(threads) + ".json")).string();
      const auto o = cli::run_command(r);
      if (o.exit_code != 0) c.fail(r.command + " " + r.target + " exit " + std::to_string(o.exit_code));
      std::ofstream(r.out, std::ios::binary) << o.text;
      files[t++] = slurp(r.out);
    }
    if (files[0].empty() || files[0] != files[1]) c.fail(r.command + " " + r.target + " differs");
    ++idx;
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {1, "operator relations n<=5 k<=3 cap 6 (symbolic and applied)", 60, relations},
      {2, "H^d[R^n] zero or irreducible, h = d + n/2, ladder to j=2 (n<=4 d<=6)", 120, spherical},
      {3, "harmonics multiplicity free, label <-> gl weight bijective (d<=4)", 600, duality},
      {4, "n(pi) + n(pi x det) = n and n(pi) = first column (n<=4 |lambda|<=4)", 900, conservation},
      {5, "invariants: C[q] for k=1 (n<=4 d<=8), span r_ij in degree 2", 120, invariants},
      {6, "Cauchy identity for gl_m x gl_n (m,n<=3 d<=5)", 120, type_two},
      {7, "occurrence monotone in k, every label present at k=n", 300, persistence},
      {8, "byte-identical output across thread counts", 600, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > cr.budget_s) c.fail("over the runtime budget");
    std::printf("criterion %d: %s  %s  (%.2fs, budget %.0fs)%s%s\n", cr.id, c.ok ? "PASS" : "FAIL",
                cr.name, s, cr.budget_s, c.ok ? "" : "  reason: ", c.why.str().c_str());
    std::fflush(stdout);
    failed += c.ok ? 0 : 1;
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
