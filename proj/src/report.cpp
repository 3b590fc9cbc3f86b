#include "wellscmp/report.hpp"

#include <sstream>

namespace wellscmp {

Json tag_value(const Value& v) {
  if (v.exact()) return Json{{"exact", v.str()}};
  return Json{{"float", v.as_double()}};
}

Json tag_float(double d) { return Json{{"float", d}}; }

Json manifest_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["params"] = m.params;
  if (m.seed) j["seed"] = *m.seed;
  j["arithmetic"] = m.arithmetic;
  j["version"] = m.version;
  j["timings"] = Json{{"elapsed_ms", m.elapsed_ms}};
  return j;
}

Json wells_report_json(const WellsReport& r) {
  Json j;
  j["upper"] = r.upper_label;
  j["lower"] = r.lower_label;
  j["max_degree"] = r.max_degree;
  j["tol"] = tag_float(r.tol);
  j["exact"] = r.exact;
  j["note"] = "certificate up to degree " + std::to_string(r.max_degree) +
              ", not a proof for all degrees";
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"n", e.n}, {"m", e.m}, {"value", tag_value(e.value)}});
  j["entries"] = entries;
  j["min_slack"] = tag_value(r.min_slack);
  j["worst"] = Json{{"n", r.worst_n}, {"m", r.worst_m}};
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

Json tminus_report_json(const TMinusReport& r) {
  Json j;
  j["measure"] = r.label;
  j["cutoff"] = r.cutoff;
  j["tol"] = tag_float(r.tol);
  Json roots = Json::array();
  for (const auto& root : r.roots)
    roots.push_back(Json{{"n", root.n},
                         {"s", tag_float(root.s)},
                         {"s_sq_low", tag_value(root.s_sq_low)},
                         {"at_support_sup", root.at_support_sup}});
  j["per_power_roots"] = roots;
  j["t_minus_estimate"] = tag_float(r.estimate);
  j["argmin_n"] = r.argmin_n;
  j["stabilized"] = r.stabilized;
  return j;
}

Json canonical_report_json(const CanonicalReport& r) {
  Json j;
  j["measure"] = r.label;
  j["second_moment"] = tag_value(r.second_moment);
  Json gaps = Json::array();
  for (const auto& g : r.gaps)
    gaps.push_back(Json{{"m", g.m}, {"value", tag_value(g.gap)}});
  j["gaps"] = gaps;
  j["canonical"] = r.canonical;
  if (r.first_negative_m) j["first_negative_m"] = *r.first_negative_m;
  j["exact"] = r.exact;
  return j;
}

Json family_certs_json(const std::vector<FamilyCertificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) {
    Json j;
    j["family"] = c.family;
    j["parameter"] = c.parameter;
    Json rows = Json::array();
    for (size_t i = 0; i < c.checked_powers.size(); ++i)
      rows.push_back(Json{{"m", c.checked_powers[i]}, {"value", tag_value(c.values[i])}});
    j["rows"] = rows;
    j["all_zero"] = c.all_zero;
    j["all_nonneg"] = c.all_nonneg;
    j["strictly_negative_tail"] = c.strictly_negative_tail;
    if (c.first_violation_m) j["first_violation_m"] = *c.first_violation_m;
    arr.push_back(j);
  }
  return Json{{"certificates", arr}};
}

Json power_analog_json(const PowerAnalogReport& r) {
  Json j;
  j["p"] = tag_float(r.p);
  j["S"] = r.S.get_str();
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"m", row.m},
                        {"value", tag_float(row.value)},
                        {"sign", row.sign},
                        {"indeterminate", row.indeterminate}});
  j["rows"] = rows;
  j["low_exponent_regime"] = r.low_exponent_regime;
  return j;
}

static Json values_json(const std::vector<Value>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(tag_value(v));
  return arr;
}

static std::string route_name(MajorizationRoute r) {
  switch (r) {
    case MajorizationRoute::Direct: return "direct";
    case MajorizationRoute::SingleCrossing: return "single_crossing";
    case MajorizationRoute::ViaW: return "via_w";
  }
  return "?";
}

Json majorization_cert_json(const MajorizationCertificate& c) {
  Json j;
  j["x"] = values_json(c.x.entries());
  j["y"] = values_json(c.y.entries());
  j["partial_sum_gaps"] = values_json(c.partial_sum_gaps);
  j["total_equal"] = c.total_equal;
  j["majorizes"] = c.majorizes;
  j["route"] = route_name(c.route);
  if (c.crossing_index) j["crossing_index"] = *c.crossing_index;
  if (c.w) j["w"] = values_json(*c.w);
  j["exact"] = c.exact;
  return j;
}

Json karamata_json(const KaramataReport& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& e : r.entries)
    rows.push_back(Json{{"phi", e.phi}, {"gap", tag_value(e.gap)}, {"ok", e.ok}});
  j["entries"] = rows;
  j["all_ok"] = r.all_ok;
  j["exact"] = r.exact;
  return j;
}

Json theorem_report_json(const TheoremReport& r) {
  Json j;
  j["variant"] = r.variant;
  j["N"] = r.N;
  j["m_max"] = r.m_max;
  j["psi"] = r.psi;
  j["refused"] = r.refused;
  if (r.refused) j["refusal"] = r.refusal;
  j["direct_sums"] = values_json(r.direct_sums);
  j["direct_all_nonneg"] = r.direct_all_nonneg;
  j["cert_ok"] = r.cert_ok;
  j["routes_agree"] = r.routes_agree;
  if (r.a1) {
    j["build"] = Json{{"x", values_json(r.a1->x.entries())},
                      {"y", values_json(r.a1->y.entries())},
                      {"psi_bar", tag_value(r.a1->psi_bar)},
                      {"n", r.a1->n},
                      {"q", r.a1->q},
                      {"midpoint_proxy_le_avg", r.a1->midpoint_proxy_le_avg},
                      {"avg_le_endpoint_mean", r.a1->avg_le_endpoint_mean}};
  }
  if (r.a2) {
    Json b{{"x", values_json(r.a2->x.entries())},
           {"y", values_json(r.a2->y.entries())},
           {"w", values_json(r.a2->w)},
           {"psi_bar", tag_value(r.a2->psi_bar)},
           {"n", r.a2->n},
           {"gate_avg5", r.a2->gate_avg5},
           {"gate_avg5_margin", tag_value(r.a2->gate_avg5_margin)},
           {"gate_endpoint", r.a2->gate_endpoint},
           {"gate_endpoint_margin", tag_value(r.a2->gate_endpoint_margin)}};
    if (r.a2->gate_mid) {
      b["gate_mid"] = *r.a2->gate_mid;
      b["gate_mid_margin"] = tag_value(*r.a2->gate_mid_margin);
    }
    j["build"] = b;
  }
  if (r.cert) j["certificate"] = majorization_cert_json(*r.cert);
  return j;
}

Json gks_json(const GksReport& r) {
  Json j;
  j["tol"] = tag_float(r.tol);
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"label", row.label}, {"value", tag_float(row.value)}, {"ok", row.ok}});
  j["rows"] = rows;
  j["worst"] = tag_float(r.worst);
  j["worst_label"] = r.worst_label;
  j["all_ok"] = r.all_ok;
  return j;
}

Json domination_json(const DominationReport& r) {
  Json j;
  j["lower"] = r.lower_label;
  j["upper"] = r.upper_label;
  j["tol"] = tag_float(r.tol);
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"monomial", row.monomial},
                        {"lower_value", tag_float(row.lower_value)},
                        {"upper_value", tag_float(row.upper_value)},
                        {"slack", tag_float(row.slack)},
                        {"ok", row.ok}});
  j["rows"] = rows;
  j["worst_slack"] = tag_float(r.worst_slack);
  j["worst_monomial"] = r.worst_monomial;
  j["all_ok"] = r.all_ok;
  return j;
}

Json ginibre_json(const GinibreReport& r) {
  Json j;
  j["measure"] = r.measure;
  j["k_max"] = r.k_max;
  j["exact"] = r.exact;
  Json rows = Json::array();
  for (const auto& e : r.entries)
    rows.push_back(Json{{"k", e.k},
                        {"m", e.m},
                        {"value", tag_value(e.value)},
                        {"must_vanish", e.must_vanish},
                        {"ok", e.ok}});
  j["entries"] = rows;
  j["all_ok"] = r.all_ok;
  return j;
}

Json scaling_json(const ScalingReport& r) {
  Json j;
  j["measure"] = r.measure;
  j["s"] = tag_value(r.s);
  j["tol"] = tag_float(r.tol);
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"monomial", row.monomial},
                        {"lhs", tag_float(row.lhs)},
                        {"rhs", tag_float(row.rhs)},
                        {"rel_err", tag_float(row.rel_err)},
                        {"ok", row.ok}});
  j["rows"] = rows;
  j["worst_rel"] = tag_float(r.worst_rel);
  j["all_ok"] = r.all_ok;
  return j;
}

Json ensemble_json(const EnsembleReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["template"] = r.template_name;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["worst"] = tag_float(r.worst);
  j["worst_detail"] = r.worst_detail;
  j["worst_trial"] = r.worst_trial;
  j["failures"] = r.failures;
  j["all_ok"] = r.all_ok;
  return j;
}

Json bounds_json(const TemperatureBounds& b) {
  Json j;
  j["measure"] = b.measure;
  j["second_moment"] = tag_value(b.second_moment);
  j["t_minus_sq"] = tag_value(b.t_minus_sq);
  j["t_plus_sq"] = tag_value(b.t_plus_sq);
  j["lower_factor"] = tag_value(b.lower_factor);
  j["canonical"] = b.canonical;
  j["t_minus_exact"] = b.t_minus_exact;
  if (b.cutoff) j["cutoff"] = b.cutoff;
  if (b.mean_field_tc) j["mean_field_tc"] = tag_value(*b.mean_field_tc);
  if (b.griffiths_factor) j["griffiths_factor"] = tag_value(*b.griffiths_factor);
  if (b.improvement_ratio) j["improvement_ratio"] = tag_value(*b.improvement_ratio);
  if (b.improvement_vs_quarter)
    j["improvement_vs_quarter"] = tag_value(*b.improvement_vs_quarter);
  return j;
}

Json measure_json(const EvenMeasure& mu, unsigned moments_to) {
  Json j;
  j["label"] = mu.label;
  j["kind"] = mu.kind == MeasureKind::Atomic ? "atomic" : "dvector";
  j["exact"] = mu.exact;
  if (mu.kind == MeasureKind::DVector) j["D"] = mu.dim;
  Json atoms = Json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back(Json{{"t", tag_value(a.t)}, {"w", tag_value(a.w)}});
  j["atoms"] = atoms;
  Json moments = Json::array();
  for (unsigned k = 0; k <= moments_to; ++k)
    moments.push_back(Json{{"k", k}, {"value", tag_value(moment(mu, k))}});
  j["moments"] = moments;
  j["support_sup"] = tag_value(support_sup(mu));
  return j;
}

// ---- CSV --------------------------------------------------------------------

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  out += '\n';
  return out;
}

std::string value_cell(const Value& v) { return v.str(); }

static std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string wells_report_csv(const WellsReport& r) {
  std::string out = csv_row({"n", "m", "value", "exact"});
  for (const auto& e : r.entries)
    out += csv_row({std::to_string(e.n), std::to_string(e.m), value_cell(e.value),
                    bool_cell(e.value.exact())});
  return out;
}

std::string tminus_report_csv(const TMinusReport& r) {
  std::string out = csv_row({"n", "s", "s_sq_low", "at_support_sup"});
  for (const auto& root : r.roots)
    out += csv_row({std::to_string(root.n), format_double(root.s),
                    value_cell(root.s_sq_low), bool_cell(root.at_support_sup)});
  return out;
}

std::string canonical_report_csv(const CanonicalReport& r) {
  std::string out = csv_row({"m", "gap", "exact"});
  for (const auto& g : r.gaps)
    out += csv_row({std::to_string(g.m), value_cell(g.gap), bool_cell(g.gap.exact())});
  return out;
}

std::string family_certs_csv(const std::vector<FamilyCertificate>& certs) {
  std::string out = csv_row({"family", "parameter", "m", "value"});
  for (const auto& c : certs)
    for (size_t i = 0; i < c.checked_powers.size(); ++i)
      out += csv_row({c.family, c.parameter, std::to_string(c.checked_powers[i]),
                      value_cell(c.values[i])});
  return out;
}

std::string power_analog_csv(const PowerAnalogReport& r) {
  std::string out = csv_row({"m", "value", "sign", "indeterminate"});
  for (const auto& row : r.rows)
    out += csv_row({std::to_string(row.m), format_double(row.value),
                    std::to_string(row.sign), bool_cell(row.indeterminate)});
  return out;
}

std::string theorem_report_csv(const TheoremReport& r) {
  std::string out = csv_row({"m", "direct_sum"});
  for (size_t m = 0; m < r.direct_sums.size(); ++m)
    out += csv_row({std::to_string(m), value_cell(r.direct_sums[m])});
  return out;
}

std::string gks_csv(const GksReport& r) {
  std::string out = csv_row({"label", "value", "ok"});
  for (const auto& row : r.rows)
    out += csv_row({row.label, format_double(row.value), bool_cell(row.ok)});
  return out;
}

std::string domination_csv(const DominationReport& r) {
  std::string out = csv_row({"monomial", "lower", "upper", "slack", "ok"});
  for (const auto& row : r.rows)
    out += csv_row({row.monomial, format_double(row.lower_value),
                    format_double(row.upper_value), format_double(row.slack),
                    bool_cell(row.ok)});
  return out;
}

std::string ginibre_csv(const GinibreReport& r) {
  std::string out = csv_row({"k", "m", "value", "must_vanish", "ok"});
  for (const auto& e : r.entries)
    out += csv_row({std::to_string(e.k), std::to_string(e.m), value_cell(e.value),
                    bool_cell(e.must_vanish), bool_cell(e.ok)});
  return out;
}

std::string scaling_csv(const ScalingReport& r) {
  std::string out = csv_row({"monomial", "lhs", "rhs", "rel_err", "ok"});
  for (const auto& row : r.rows)
    out += csv_row({row.monomial, format_double(row.lhs), format_double(row.rhs),
                    format_double(row.rel_err), bool_cell(row.ok)});
  return out;
}

std::string ensemble_csv(const EnsembleReport& r) {
  std::string out = csv_row({"kind", "template", "trials", "seed", "worst",
                             "worst_detail", "worst_trial", "failures", "all_ok"});
  out += csv_row({r.kind, r.template_name, std::to_string(r.trials),
                  std::to_string(r.seed), format_double(r.worst), r.worst_detail,
                  std::to_string(r.worst_trial), std::to_string(r.failures),
                  bool_cell(r.all_ok)});
  return out;
}

std::string bounds_csv(const TemperatureBounds& b) {
  std::vector<std::string> header = {"measure", "second_moment", "t_minus_sq",
                                     "t_plus_sq", "lower_factor", "canonical",
                                     "t_minus_exact"};
  std::vector<std::string> row = {b.measure,
                                  value_cell(b.second_moment),
                                  value_cell(b.t_minus_sq),
                                  value_cell(b.t_plus_sq),
                                  value_cell(b.lower_factor),
                                  bool_cell(b.canonical),
                                  bool_cell(b.t_minus_exact)};
  auto opt = [&](const char* name, const std::optional<Value>& v) {
    if (v) {
      header.push_back(name);
      row.push_back(value_cell(*v));
    }
  };
  opt("mean_field_tc", b.mean_field_tc);
  opt("griffiths_factor", b.griffiths_factor);
  opt("improvement_ratio", b.improvement_ratio);
  opt("improvement_vs_quarter", b.improvement_vs_quarter);
  return csv_row(header) + csv_row(row);
}

std::string measure_csv(const EvenMeasure& mu, unsigned moments_to) {
  std::string out = csv_row({"k", "moment"});
  for (unsigned k = 0; k <= moments_to; ++k)
    out += csv_row({std::to_string(k), value_cell(moment(mu, k))});
  return out;
}

}  // namespace wellscmp
