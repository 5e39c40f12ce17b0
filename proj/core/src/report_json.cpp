#include "theta/report_json.hpp"

#include "theta/text_format.hpp"

namespace theta {

namespace {

template <class T>
Json optional_int(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json polynomials(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

Json shape_json(const Shape& s) { return Json{{"n", s.n}, {"k", s.k}}; }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const OrthIrrepParam& p) { return Json{{"n", p.n}, {"lambda", to_json(p.lambda)}}; }

Json to_json(const GlIrrepParam& p) {
  Json w = Json::array();
  for (const auto& x : p.weight) w.push_back(to_json(x));
  return w;
}

Json to_json(const HarmonicSpace& h, bool with_basis) {
  Json out{{"shape", shape_json(h.shape)},
           {"degree", h.degree},
           {"dimension", h.dimension()}};
  if (with_basis) out["basis"] = polynomials(h.basis);
  return out;
}

Json to_json(const SeparationCertificate& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces)
    pieces.push_back({{"power", p.power}, {"harmonic_degree", p.harmonic_degree}, {"dimension", p.dimension}});
  return Json{{"n", c.n},
              {"degree", c.m},
              {"pieces", pieces},
              {"total_dimension", c.total_dimension},
              {"pieces_dimension", c.pieces_dimension},
              {"combined_rank", c.combined_rank},
              {"passed", c.passed()}};
}

Json to_json(const WeightLadder& w) {
  Json rungs = Json::array();
  for (const auto& r : w.rungs)
    rungs.push_back({{"index", r.index},
                     {"eigenvalue", to_json(r.eigenvalue)},
                     {"dimension", r.basis.size()},
                     {"eigenvalue_verified", r.eigenvalue_verified}});
  return Json{{"n", w.n},
              {"degree", w.degree},
              {"rungs", rungs},
              {"e_injective", w.e_injective},
              {"f_lowers", w.f_lowers},
              {"f_kills_base", w.f_kills_base},
              {"passed", w.passed()}};
}

Json to_json(const IsotypicComponent& c) {
  return Json{{"orth_label", to_json(c.label)},
              {"so_weight", c.so_weight},
              {"column_degrees", c.column_degrees},
              {"glk_weight", to_json(c.gl_weight)},
              {"multiplicity", c.multiplicity},
              {"orth_dimension", c.orth_dimension},
              {"gl_dimension", c.gl_dimension},
              {"hwv_basis", polynomials(c.hwv_basis)}};
}

Json to_json(const IsotypicReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  return Json{{"shape", shape_json(r.shape)},
              {"degree", r.degree},
              {"space", to_string(r.space)},
              {"coordinates", "null"},
              {"verdict", r.verdict()},
              {"components", comps},
              {"space_dimension", r.space_dimension},
              {"accounted_dimension", r.accounted_dimension},
              {"dimension_check", r.dimension_check()},
              {"hwv_verified", r.hwv_verified}};
}

Json to_json(const Theorem11Verdict& v) {
  Json rows = Json::array();
  for (const auto& r : v.rows)
    rows.push_back({{"degree", r.degree},
                    {"dimension", r.dimension},
                    {"label", r.label ? to_json(*r.label) : Json(nullptr)},
                    {"verdict", r.detail},
                    {"passed", r.passed}});
  return Json{{"n", v.n}, {"d_max", v.d_max}, {"rows", rows}, {"passed", v.passed()}};
}

Json to_json(const Theorem12Verdict& v) {
  Json pairs = Json::array();
  for (const auto& rep : v.reports)
    for (const auto& c : rep.components)
      pairs.push_back({{"degree", rep.degree},
                       {"orth_label", to_json(c.label)},
                       {"glk_weight", to_json(c.gl_weight)},
                       {"multiplicity", c.multiplicity}});
  return Json{{"n", v.n},
              {"k", v.k},
              {"d_max", v.d_max},
              {"correspondence", pairs},
              {"multiplicity_free", v.multiplicity_free},
              {"label_determines_weight", v.label_determines_weight},
              {"weight_determines_label", v.weight_determines_label},
              {"dimensions_match", v.dimensions_match},
              {"failures", v.failures},
              {"passed", v.passed()}};
}

Json to_json(const OccurrenceResult& r) {
  Json table = Json::array();
  for (const auto& w : r.witnesses)
    table.push_back({{"k", w.k},
                     {"present", w.present},
                     {"degree", w.present ? Json(w.degree) : Json(nullptr)},
                     {"column_degrees", w.column_degrees},
                     {"hwv", w.hwv ? Json(format_polynomial(*w.hwv)) : Json(nullptr)}});
  return Json{{"label", to_json(r.label)},
              {"n_pi", optional_int(r.n_pi)},
              {"predicted", r.predicted},
              {"degree_searched", r.degree_searched},
              {"witnesses", table},
              {"monotone", r.monotone()}};
}

Json to_json(const ConservationCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"label", to_json(r.label)},
                    {"n_pi", optional_int(r.n_pi)},
                    {"predicted", r.predicted},
                    {"twist", to_json(r.twist)},
                    {"n_twist", optional_int(r.n_twist)},
                    {"sum", r.sum},
                    {"passed", r.passed},
                    {"matches_prediction", r.matches_prediction}});
  return Json{{"n", c.n},
              {"size_max", c.size_max},
              {"rows", rows},
              {"passed", c.passed()},
              {"predictions_hold", c.predictions_hold()}};
}

Json to_json(const PersistenceReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"k", s.k},
                     {"present", s.present},
                     {"degree", s.present ? Json(s.degree) : Json(nullptr)},
                     {"carried_witness_verified", s.carried_witness_verified
                                                      ? Json(*s.carried_witness_verified)
                                                      : Json(nullptr)}});
  return Json{{"label", to_json(r.label)},
              {"k_max", r.k_max},
              {"steps", steps},
              {"monotone", r.monotone()},
              {"passed", r.passed()}};
}

Json to_json(const StableRangeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"label", to_json(row.label)},
                    {"present", row.present},
                    {"degree", row.present ? Json(row.degree) : Json(nullptr)}});
  return Json{{"n", r.n}, {"size_max", r.size_max}, {"rows", rows}, {"passed", r.passed()}};
}

Json to_json(const GlDualityCertificate& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components)
    comps.push_back({{"lambda", to_json(comp.lambda)},
                     {"row_weight", comp.row_weight},
                     {"column_weight", comp.column_weight},
                     {"multiplicity", comp.multiplicity},
                     {"dim_m", comp.dim_m},
                     {"dim_n", comp.dim_n},
                     {"hwv_basis", polynomials(comp.hwv_basis)}});
  return Json{{"m", c.m},
              {"n", c.n},
              {"degree", c.d},
              {"components", comps},
              {"total", c.total},
              {"expected", c.expected},
              {"multiplicity_free", c.multiplicity_free},
              {"weights_match", c.weights_match},
              {"partitions_complete", c.partitions_complete},
              {"passed", c.passed()}};
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"relation", c.relation},
                      {"method", c.method == CertMethod::Symbolic ? "symbolic" : "applied"},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  return Json{{"shape", shape_json(r.shape)},
              {"degree_cap", r.degree_cap},
              {"monomials_checked", r.monomials_checked},
              {"checks", checks},
              {"passed", r.all_passed()}};
}

}  // namespace theta
