#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "catalog.hpp"
#include "table.hpp"
#include "theta/duality.hpp"
#include "theta/errors.hpp"
#include "theta/harmonic.hpp"
#include "theta/isotypic.hpp"
#include "theta/kernel.hpp"
#include "theta/oscillator.hpp"
#include "theta/report_json.hpp"
#include "theta/text_format.hpp"

namespace theta::cli {

namespace {

// What a command hands back before rendering.
struct Outcome {
  bool passed = true;
  Json result;
  Table table;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

void require_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) {
    throw UnsupportedRank(std::string(what) + " = " + std::to_string(v) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string weight_text(const GlIrrepParam& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.weight.size(); ++i) s += (i ? "," : "") + g.weight[i].to_string();
  return s + ")";
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Partition parse_lambda(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw UsageError("bad --lambda part '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return Partition(parts);
}

OrthIrrepParam label_from(const RunConfig& cfg, int n) {
  OrthIrrepParam p{n, parse_lambda(*cfg.lambda)};
  p.validate();
  return p;
}

SpaceKind parse_space(const std::string& s) {
  if (s == "harmonic") return SpaceKind::Harmonic;
  if (s == "full") return SpaceKind::Full;
  throw UsageError("--space must be harmonic or full");
}

int default_dmax(int k) { return k == 1 ? 6 : 4; }

void add_component_rows(Table& t, int degree, const IsotypicReport& r) {
  for (const auto& c : r.components) {
    t.rows.push_back({std::to_string(degree), c.label.to_string(), ints(c.so_weight),
                      weight_text(c.gl_weight), std::to_string(c.multiplicity),
                      std::to_string(c.orth_dimension), std::to_string(c.gl_dimension)});
  }
}

const std::vector<std::string> kComponentHeader{
    "degree", "label", "so_weight", "gl_weight", "multiplicity", "orth_dim", "gl_dim"};

// --- harmonics ---------------------------------------------------------------

Outcome cmd_harmonics(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k = cfg.k.value_or(1);
  const int dmax = cfg.d_max.value_or(cfg.d.value_or(default_dmax(k)));
  require_range(n, 1, 8, "n");
  require_range(k, 1, 4, "k");
  require_range(dmax, 0, 10, "dmax");

  const Sp2kGenerators sp = build_sp2k(n, k);
  std::mt19937_64 rng(cfg.seed);
  const bool decompose = n <= kMaxIsotypicN && k <= kMaxIsotypicK;

  Outcome o;
  o.table.header = {"degree", "dimension", "formula", "verdict", "sampled"};
  Json rows = Json::array();
  for (int d = 0; d <= dmax; ++d) {
    const HarmonicSpace h = harmonic_space(n, k, d);
    Json row = to_json(h, cfg.with_basis);
    std::string formula = "-";
    if (k == 1) {
      const auto f = harmonic_dimension_formula(n, d);
      row["formula"] = f;
      formula = std::to_string(f);
      if (f != static_cast<std::int64_t>(h.dimension())) o.passed = false;
    }
    // random combinations of the basis must stay in the joint kernel
    int samples = 0;
    bool sampled_ok = true;
    if (!h.basis.empty()) {
      for (; samples < 3; ++samples) {
        Polynomial v(Shape{n, k});
        for (const auto& b : h.basis) {
          const auto c = static_cast<std::int64_t>(rng() % 11) - 5;
          v += Rational(c) * b;
        }
        for (const auto& pm : sp.p_minus) {
          if (!pm.op.apply(v).is_zero()) sampled_ok = false;
        }
      }
    }
    row["sampled"] = {{"samples", samples}, {"passed", sampled_ok}};
    o.passed = o.passed && sampled_ok;
    std::string verdict = "-";
    if (decompose) {
      const IsotypicReport r = isotypic_decomposition(n, k, d, SpaceKind::Harmonic, cfg.threads);
      row["decomposition"] = to_json(r);
      verdict = r.verdict();
      if (!r.dimension_check() || !r.hwv_verified) o.passed = false;
    }
    o.table.rows.push_back({std::to_string(d), std::to_string(h.dimension()), formula, verdict,
                            sampled_ok ? "ok" : "FAIL"});
    rows.push_back(std::move(row));
  }
  o.result = {{"n", n}, {"k", k}, {"d_max", dmax}, {"seed", cfg.seed}, {"degrees", rows}};
  return o;
}

// --- check targets -------------------------------------------------------------

Outcome check_spherical(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int dmax = cfg.d_max.value_or(6);
  require_range(n, 1, kMaxIsotypicN, "n");
  require_range(dmax, 0, 10, "dmax");

  Outcome o;
  const Theorem11Verdict v = check_theorem_1_1(n, dmax, cfg.threads);
  Json ladders = Json::array();
  Json separation = Json::array();
  bool ladders_ok = true;
  bool separation_ok = true;
  o.table.header = {"degree", "dimension", "label", "eigenvalue", "ladder", "separation"};
  for (const auto& row : v.rows) {
    const int d = row.degree;
    std::string eig = "-";
    std::string ladder = "-";
    if (row.dimension > 0) {
      const WeightLadder w = weight_ladder(n, d, 2);
      ladders.push_back(to_json(w));
      ladders_ok = ladders_ok && w.passed();
      eig = w.rungs.front().eigenvalue.to_string();
      ladder = w.passed() ? "ok" : "FAIL";
    }
    const SeparationCertificate s = separation_of_variables(n, d);
    separation.push_back(to_json(s));
    separation_ok = separation_ok && s.passed();
    o.table.rows.push_back({std::to_string(d), std::to_string(row.dimension),
                            row.label ? row.label->to_string() : "zero", eig, ladder,
                            s.passed() ? "ok" : "FAIL"});
  }
  o.passed = v.passed() && ladders_ok && separation_ok;
  o.result = {{"irreducibility", to_json(v)},
              {"ladders", ladders},
              {"separation", separation}};
  return o;
}

Outcome check_duality(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k = need(cfg.k, "--k");
  const int dmax = cfg.d_max.value_or(4);
  require_range(n, 1, kMaxIsotypicN, "n");
  require_range(k, 1, kMaxIsotypicK, "k");
  require_range(dmax, 0, 8, "dmax");

  Outcome o;
  const Theorem12Verdict v = check_theorem_1_2(n, k, dmax, cfg.threads);
  o.passed = v.passed();
  o.result = to_json(v);
  o.table.header = kComponentHeader;
  for (const auto& r : v.reports) add_component_rows(o.table, r.degree, r);
  return o;
}

OccurrenceOptions occurrence_options(const RunConfig& cfg) {
  OccurrenceOptions opts;
  opts.degree_override = cfg.degree_override;
  opts.threads = cfg.threads;
  return opts;
}

Outcome check_conservation(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int size_max = cfg.size_max.value_or(3);
  require_range(n, 1, kMaxTargetedK, "n");
  require_range(size_max, 0, 6, "size-max");

  Outcome o;
  const ConservationCertificate c = conservation_check(n, size_max, occurrence_options(cfg));
  o.passed = c.passed() && c.predictions_hold();
  o.result = to_json(c);
  o.table.header = {"label", "n_pi", "predicted", "twist", "n_twist", "sum", "passed"};
  for (const auto& r : c.rows) {
    o.table.rows.push_back({r.label.to_string(), opt_int(r.n_pi), std::to_string(r.predicted),
                            r.twist.to_string(), opt_int(r.n_twist), std::to_string(r.sum),
                            yes_no(r.passed && r.matches_prediction)});
  }
  return o;
}

Outcome check_persistence(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k_max = cfg.k_max.value_or(n);
  require_range(n, 1, kMaxTargetedK, "n");
  require_range(k_max, 0, kMaxTargetedK, "kmax");

  std::vector<OrthIrrepParam> labels;
  if (cfg.lambda) {
    labels.push_back(label_from(cfg, n));
  } else {
    labels = enumerate_orth_params(n, cfg.size_max.value_or(3));
  }
  Outcome o;
  Json reports = Json::array();
  o.table.header = {"label", "k", "present", "degree", "carried_witness"};
  for (const auto& label : labels) {
    const PersistenceReport r = persistence_check(label, k_max, occurrence_options(cfg));
    o.passed = o.passed && r.passed();
    reports.push_back(to_json(r));
    for (const auto& s : r.steps) {
      std::string carried = "-";
      if (s.carried_witness_verified) carried = *s.carried_witness_verified ? "ok" : "FAIL";
      o.table.rows.push_back({label.to_string(), std::to_string(s.k), yes_no(s.present),
                              s.present ? std::to_string(s.degree) : "-", carried});
    }
  }
  o.result = {{"n", n}, {"k_max", k_max}, {"reports", reports}};
  return o;
}

Outcome check_stable_range(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int size_max = cfg.size_max.value_or(3);
  require_range(n, 1, kMaxTargetedK, "n");
  require_range(size_max, 0, 6, "size-max");

  Outcome o;
  const StableRangeReport r = stable_range_check(n, size_max, occurrence_options(cfg));
  o.passed = r.passed();
  o.result = to_json(r);
  o.table.header = {"label", "present_at_k_eq_n", "degree"};
  for (const auto& row : r.rows) {
    o.table.rows.push_back({row.label.to_string(), yes_no(row.present),
                            row.present ? std::to_string(row.degree) : "-"});
  }
  return o;
}

Outcome check_relations(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k = need(cfg.k, "--k");
  const int cap = cfg.d_max.value_or(cfg.d.value_or(6));
  require_range(n, 1, 8, "n");
  require_range(k, 1, 4, "k");
  require_range(cap, 2, 10, "dmax");

  Outcome o;
  const RelationReport r = certify_relations(n, k, cap, cfg.threads);
  o.passed = r.all_passed();
  o.result = to_json(r);
  o.table.header = {"relation", "method", "passed"};
  for (const auto& c : r.checks) {
    o.table.rows.push_back({c.relation, c.method == CertMethod::Symbolic ? "symbolic" : "applied",
                            yes_no(c.passed)});
  }
  return o;
}

Outcome check_gl_duality(const RunConfig& cfg) {
  const int m = need(cfg.m, "--m");
  const int n = need(cfg.n, "--n");
  int lo = 0;
  int hi = cfg.d_max.value_or(5);
  if (cfg.d) lo = hi = *cfg.d;

  Outcome o;
  Json certs = Json::array();
  o.table.header = {"degree", "lambda", "multiplicity", "dim_m", "dim_n", "total", "expected"};
  for (int d = lo; d <= hi; ++d) {
    const GlDualityCertificate c = gl_duality_check(m, n, d, cfg.threads);
    o.passed = o.passed && c.passed();
    certs.push_back(to_json(c));
    for (const auto& comp : c.components) {
      o.table.rows.push_back({std::to_string(d), comp.lambda.to_string(),
                              std::to_string(comp.multiplicity), std::to_string(comp.dim_m),
                              std::to_string(comp.dim_n), std::to_string(c.total),
                              std::to_string(c.expected)});
    }
  }
  o.result = {{"m", m}, {"n", n}, {"certificates", certs}};
  return o;
}

Outcome cmd_check(const RunConfig& cfg) {
  const std::string& t = cfg.target;
  if (t == "spherical-harmonics") return check_spherical(cfg);
  if (t == "duality") return check_duality(cfg);
  if (t == "conservation") return check_conservation(cfg);
  if (t == "persistence") return check_persistence(cfg);
  if (t == "stable-range") return check_stable_range(cfg);
  if (t == "relations") return check_relations(cfg);
  if (t == "gl-duality") return check_gl_duality(cfg);
  throw UsageError("unknown check target '" + t + "'");
}

// --- decompose / invariants / occurrence / catalog -------------------------------

Outcome cmd_decompose(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k = need(cfg.k, "--k");
  const int d = need(cfg.d, "--d");
  require_range(d, 0, 10, "d");
  const IsotypicReport r = isotypic_decomposition(n, k, d, parse_space(cfg.space), cfg.threads);

  Outcome o;
  o.passed = r.dimension_check() && r.hwv_verified;
  o.result = to_json(r);
  if (!cfg.with_basis) {
    for (auto& c : o.result["components"]) c.erase("hwv_basis");
  }
  o.table.header = kComponentHeader;
  add_component_rows(o.table, d, r);
  return o;
}

// Products r_{i1 j1} ... r_{ie je} over multisets of pairs i <= j.
std::vector<Polynomial> pairing_products(int n, int k, int e) {
  std::vector<Polynomial> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) pairs.push_back(column_pairing(n, k, i, j));
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(e, 0);
  if (e == 0) return {Polynomial(Shape{n, k}, 1)};
  while (true) {
    Polynomial p = pairs[idx[0]];
    for (int t = 1; t < e; ++t) p = p * pairs[idx[t]];
    out.push_back(std::move(p));
    int t = e - 1;
    while (t >= 0 && idx[t] + 1 == pairs.size()) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < e; ++u) idx[u] = idx[t];
  }
  return out;
}

Outcome cmd_invariants(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  const int k = cfg.k.value_or(1);
  const int dmax = cfg.d_max.value_or(cfg.d.value_or(k == 1 ? 8 : 4));
  require_range(n, 1, 6, "n");
  require_range(k, 1, 3, "k");
  require_range(dmax, 0, 10, "dmax");

  Outcome o;
  Json rows = Json::array();
  o.table.header = {"degree", "dimension", "pairing_span", "matches"};
  for (int d = 0; d <= dmax; ++d) {
    const std::vector<Polynomial> basis = invariant_subspace(n, k, d);
    // expected: polynomials in the r_ij (q = r_11 when k = 1)
    std::vector<Polynomial> expected;
    if (d % 2 == 0) expected = pairing_products(n, k, d / 2);
    const std::size_t span = polynomial_rank(expected);
    std::vector<Polynomial> both = basis;
    both.insert(both.end(), expected.begin(), expected.end());
    const std::size_t joint = polynomial_rank(both);
    const bool ok = joint == basis.size() && joint == span;
    o.passed = o.passed && ok;
    Json row = {{"degree", d},
                {"dimension", basis.size()},
                {"pairing_span", span},
                {"matches", ok}};
    if (cfg.with_basis) {
      Json b = Json::array();
      for (const auto& p : basis) b.push_back(format_polynomial(p));
      row["basis"] = b;
    }
    rows.push_back(row);
    o.table.rows.push_back(
        {std::to_string(d), std::to_string(basis.size()), std::to_string(span), yes_no(ok)});
  }
  o.result = {{"n", n}, {"k", k}, {"d_max", dmax}, {"degrees", rows}};
  return o;
}

Outcome cmd_occurrence(const RunConfig& cfg) {
  const int n = need(cfg.n, "--n");
  if (!cfg.lambda) throw UsageError("missing required flag --lambda");
  require_range(n, 1, kMaxTargetedK, "n");
  const OrthIrrepParam label = label_from(cfg, n);
  const OccurrenceResult r = first_occurrence(label, occurrence_options(cfg));

  Outcome o;
  o.passed = r.monotone() && r.n_pi && *r.n_pi == r.predicted;
  o.result = to_json(r);
  o.table.header = {"label", "k", "present", "degree", "column_degrees"};
  for (const auto& w : r.witnesses) {
    o.table.rows.push_back({label.to_string(), std::to_string(w.k), yes_no(w.present),
                            w.present ? std::to_string(w.degree) : "-",
                            w.present ? ints(w.column_degrees) : "-"});
  }
  return o;
}

Outcome cmd_catalog() {
  Outcome o;
  o.result = Json::array();
  o.table.header = {"family", "condition", "source"};
  for (const auto& e : catalog()) {
    o.result.push_back({{"family", e.family}, {"condition", e.condition}, {"source", e.source}});
    o.table.rows.push_back({e.family, e.condition, e.source});
  }
  return o;
}

Outcome dispatch(const RunConfig& cfg) {
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
  const std::string& c = cfg.command;
  if (c == "harmonics") return cmd_harmonics(cfg);
  if (c == "check") return cmd_check(cfg);
  if (c == "decompose") return cmd_decompose(cfg);
  if (c == "invariants") return cmd_invariants(cfg);
  if (c == "occurrence") return cmd_occurrence(cfg);
  if (c == "catalog") return cmd_catalog();
  throw UsageError("unknown command '" + c + "'");
}

// Thread count, output path and format do not change the data.
Json parameters(const RunConfig& cfg) {
  Json p = Json::object();
  if (!cfg.target.empty()) p["target"] = cfg.target;
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) p[key] = *v;
  };
  put("n", cfg.n);
  put("k", cfg.k);
  put("m", cfg.m);
  put("d", cfg.d);
  put("d_max", cfg.d_max);
  put("size_max", cfg.size_max);
  put("k_max", cfg.k_max);
  put("degree_override", cfg.degree_override);
  if (cfg.lambda) p["lambda"] = *cfg.lambda;
  if (cfg.command == "decompose") p["space"] = cfg.space;
  if (cfg.with_basis) p["with_basis"] = true;
  if (cfg.command == "harmonics") p["seed"] = cfg.seed;
  return p;
}

std::string render(const RunConfig& cfg, bool passed, const Json& result, const Table& table,
                   const std::string& error) {
  switch (cfg.format) {
    case OutputFormat::Csv:
      return table.to_csv();
    case OutputFormat::Markdown:
      return table.to_markdown();
    case OutputFormat::Json:
      break;
  }
  Json env = {{"command", cfg.command}, {"parameters", parameters(cfg)}, {"passed", passed}};
  if (error.empty()) {
    env["result"] = result;
  } else {
    env["error"] = error;
  }
  return env.dump(2) + "\n";
}

}  // namespace

CommandOutput run_command(const RunConfig& config) {
  CommandOutput out;
  try {
    const Outcome o = dispatch(config);
    out.exit_code = o.passed ? 0 : 1;
    out.text = render(config, o.passed, o.result, o.table, "");
    if (!o.passed) out.message = "check failed";
  } catch (const AmbiguousIdentification& e) {
    out.exit_code = 1;
    out.message = std::string("ambiguous identification: ") + e.what();
    out.text = render(config, false, {}, Table{{"error"}, {{out.message}}}, out.message);
  } catch (const UsageError& e) {
    out = {2, "", std::string("usage: ") + e.what()};
  } catch (const UnsupportedRank& e) {
    out = {2, "", std::string("unsupported rank: ") + e.what()};
  } catch (const InvalidArgument& e) {
    out = {2, "", std::string("invalid argument: ") + e.what()};
  } catch (const std::exception& e) {
    out = {2, "", std::string("error: ") + e.what()};
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the compact theta correspondence", "theta-lab"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<int> n, k, m, d, dmax, size_max, kmax, degree_override;
  std::string lambda;
  std::string format = "json";

  app.add_option("--n", n, "rows (O(n) side)");
  app.add_option("--k", k, "columns (sp_2k side)");
  app.add_option("--m", m, "rows for gl-duality");
  app.add_option("--d", d, "single degree");
  app.add_option("--dmax", dmax, "degree cap");
  app.add_option("--size-max", size_max, "largest |lambda|");
  app.add_option("--kmax", kmax, "largest k for persistence");
  app.add_option("--degree-override", degree_override, "occurrence search degree bound");
  app.add_option("--lambda", lambda, "partition, e.g. 2,1");
  app.add_option("--space", cfg.space, "harmonic or full")->check(CLI::IsMember({"harmonic", "full"}));
  app.add_flag("--with-basis", cfg.with_basis, "include bases in the output");
  app.add_option("--format", format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  for (const char* name : {"harmonics", "decompose", "invariants", "occurrence", "catalog"}) {
    app.add_subcommand(name)->fallthrough();
  }
  auto* check = app.add_subcommand("check", "run one theorem check")->fallthrough();
  check->add_option("target", cfg.target,
                    "spherical-harmonics | duality | conservation | persistence | "
                    "stable-range | relations | gl-duality")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.n = n;
  cfg.k = k;
  cfg.m = m;
  cfg.d = d;
  cfg.d_max = dmax;
  cfg.size_max = size_max;
  cfg.k_max = kmax;
  cfg.degree_override = degree_override;
  if (!lambda.empty() || app.count("--lambda") > 0) cfg.lambda = lambda;
  cfg.format = format == "csv"        ? OutputFormat::Csv
               : format == "markdown" ? OutputFormat::Markdown
                                      : OutputFormat::Json;

  const CommandOutput r = run_command(cfg);
  if (!r.message.empty()) err << r.message << "\n";
  if (r.text.empty()) return r.exit_code;
  if (cfg.out.empty()) {
    out << r.text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    f << r.text;
    if (!f) {
      err << "cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  return r.exit_code;
}

}  // namespace theta::cli
