#include "wellscmp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wellscmp/canonical_families.hpp"
#include "wellscmp/gibbs.hpp"
#include "wellscmp/majorization.hpp"
#include "wellscmp/parallel.hpp"
#include "wellscmp/report.hpp"
#include "wellscmp/temperature.hpp"
#include "wellscmp/wells.hpp"

namespace wellscmp {

namespace {

struct Global {
  std::string format = "json";
  std::string out;
  uint64_t seed = 42;
  bool float_mode = false;
  bool exact_mode = false;
  unsigned jobs_n = 0;
  int rc = 0;
  std::chrono::steady_clock::time_point t0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_file(const std::string& text) {
  return std::ifstream(text).good();
}

MeasureSpec load_spec(const std::string& text) {
  if (looks_like_file(text)) return MeasureSpec::from_json_text(slurp(text));
  return MeasureSpec::parse(text);
}

EvenMeasure load_measure(const Global& g, const std::string& text,
                         MeasureSpec* spec_out = nullptr) {
  MeasureSpec spec = load_spec(text);
  if (spec_out) *spec_out = spec;
  EvenMeasure mu = make_measure(spec);
  return g.float_mode ? to_float(mu) : mu;
}

void emit(Global& g, RunManifest man, Json body, const std::string& csv_text) {
  auto dt = std::chrono::steady_clock::now() - g.t0;
  man.elapsed_ms = std::chrono::duration<double, std::milli>(dt).count();
  man.arithmetic = g.float_mode ? "float" : "exact";
  std::string text;
  if (g.format == "csv") {
    text = "# " + man.command + " version=" + man.version +
           " arithmetic=" + man.arithmetic;
    if (man.seed) text += " seed=" + std::to_string(*man.seed);
    text += "\n" + csv_text;
  } else {
    body["manifest"] = manifest_json(man);
    text = body.dump(2) + "\n";
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out);
    if (!out) throw std::invalid_argument("cannot write '" + g.out + "'");
    out << text;
  }
}

std::vector<Value> parse_value_list(const std::string& text) {
  std::vector<Value> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t");
    out.push_back(Value::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty vector '" + text + "'");
  return out;
}

Interaction load_or_build_interaction(const std::string& system_path,
                                      const std::string& template_name,
                                      double coupling, double temperature) {
  if (!system_path.empty()) return Interaction::from_json_text(slurp(system_path));
  int sites = 0;
  auto edges = template_edges(template_name, sites);
  Interaction inter;
  inter.sites = sites;
  inter.temperature = temperature;
  for (const auto& [a, b] : edges)
    inter.terms.push_back({Monomial{{a, 1}, {b, 1}}, coupling});
  inter.validate();
  return inter;
}

}  // namespace

int run_cli(int argc, char** argv) {
  Global g;
  g.t0 = std::chrono::steady_clock::now();

  CLI::App app{"Wells-domination toolkit for even apriori measures"};
  app.fallthrough(true);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag_callback("--csv", [&g]() { g.format = "csv"; },
                        "Shorthand for --format csv");
  app.add_option("--out", g.out, "Write the report to a file instead of stdout");
  app.add_option("--seed", g.seed, "Base seed for ensemble commands");
  app.add_flag("--float", g.float_mode, "Demote measures to double precision");
  app.add_flag("--exact", g.exact_mode, "Keep rational arithmetic (default)");
  app.add_option("--jobs", g.jobs_n, "Worker thread cap (0 = all cores)")
      ->each([](const std::string& s) {
        set_jobs(static_cast<unsigned>(std::stoul(s)));
      });
  app.require_subcommand(1);

  auto manifest_for = [&](std::string command,
                          std::map<std::string, std::string> params,
                          bool uses_seed = false) {
    RunManifest man;
    man.command = std::move(command);
    man.params = std::move(params);
    if (uses_seed) man.seed = g.seed;
    return man;
  };

  // ---- wells ----------------------------------------------------------------
  auto* wells_cmd = app.add_subcommand("wells", "Domination integrals and thresholds");
  wells_cmd->fallthrough(true);
  wells_cmd->require_subcommand(1);

  struct {
    std::string upper, lower;
    unsigned max_degree = 12;
    double tol = 1e-9;
  } wc;
  auto* wells_check = wells_cmd->add_subcommand("check", "Domination certificate");
  wells_check->fallthrough(true);
  wells_check->add_option("--upper", wc.upper, "Candidate dominant measure")->required();
  wells_check->add_option("--lower", wc.lower, "Dominated measure")->required();
  wells_check->add_option("--max-degree", wc.max_degree, "Grid cutoff n+m <= 2d");
  wells_check->add_option("--tol", wc.tol, "Float-mode slack tolerance");
  wells_check->callback([&]() {
    EvenMeasure up = load_measure(g, wc.upper);
    EvenMeasure lo = load_measure(g, wc.lower);
    WellsReport rep = wells_dominates(up, lo, wc.max_degree, wc.tol);
    emit(g,
         manifest_for("wells check", {{"upper", wc.upper},
                                      {"lower", wc.lower},
                                      {"max_degree", std::to_string(wc.max_degree)}}),
         wells_report_json(rep), wells_report_csv(rep));
    g.rc = rep.verdict == Verdict::Dominates ? 0 : 1;
  });

  struct {
    std::string measure;
    unsigned cutoff = 101;
    double tol = 1e-9;
  } wt;
  auto* wells_tminus = wells_cmd->add_subcommand("tminus", "Lower threshold estimate");
  wells_tminus->fallthrough(true);
  wells_tminus->add_option("--measure", wt.measure, "Measure spec")->required();
  wells_tminus->add_option("--cutoff", wt.cutoff, "Largest odd power checked");
  wells_tminus->add_option("--tol", wt.tol, "Bisection tolerance");
  wells_tminus->callback([&]() {
    EvenMeasure mu = load_measure(g, wt.measure);
    TMinusReport rep = t_minus(mu, wt.cutoff, wt.tol);
    emit(g,
         manifest_for("wells tminus", {{"measure", wt.measure},
                                       {"cutoff", std::to_string(wt.cutoff)}}),
         tminus_report_json(rep), tminus_report_csv(rep));
    g.rc = 0;
  });

  struct {
    std::string measure;
    unsigned m_max = 25;
  } wca;
  auto* wells_canonical = wells_cmd->add_subcommand("canonical", "Equality-case check");
  wells_canonical->fallthrough(true);
  wells_canonical->add_option("--measure", wca.measure, "Measure spec")->required();
  wells_canonical->add_option("--mmax", wca.m_max, "Largest odd power (2m+1)");
  wells_canonical->callback([&]() {
    EvenMeasure mu = load_measure(g, wca.measure);
    CanonicalReport rep = canonical_check(mu, wca.m_max);
    emit(g,
         manifest_for("wells canonical", {{"measure", wca.measure},
                                          {"mmax", std::to_string(wca.m_max)}}),
         canonical_report_json(rep), canonical_report_csv(rep));
    g.rc = 0;
  });

  struct {
    std::string a, b, c;
    unsigned max_degree = 12;
    double tol = 1e-9;
  } wtr;
  auto* wells_trans = wells_cmd->add_subcommand(
      "transitivity", "Three-measure probe; reports evidence, draws no conclusion");
  wells_trans->fallthrough(true);
  wells_trans->add_option("--a", wtr.a, "First measure")->required();
  wells_trans->add_option("--b", wtr.b, "Second measure")->required();
  wells_trans->add_option("--c", wtr.c, "Third measure")->required();
  wells_trans->add_option("--max-degree", wtr.max_degree, "Grid cutoff");
  wells_trans->add_option("--tol", wtr.tol, "Float-mode slack tolerance");
  wells_trans->callback([&]() {
    EvenMeasure a = load_measure(g, wtr.a);
    EvenMeasure b = load_measure(g, wtr.b);
    EvenMeasure c = load_measure(g, wtr.c);
    WellsReport ab = wells_dominates(a, b, wtr.max_degree, wtr.tol);
    WellsReport bc = wells_dominates(b, c, wtr.max_degree, wtr.tol);
    WellsReport ac = wells_dominates(a, c, wtr.max_degree, wtr.tol);
    Json body;
    body["a_over_b"] = wells_report_json(ab);
    body["b_over_c"] = wells_report_json(bc);
    body["a_over_c"] = wells_report_json(ac);
    bool premises = ab.verdict == Verdict::Dominates && bc.verdict == Verdict::Dominates;
    body["chain_applicable"] = premises;
    body["chain_conclusion_holds_at_degree"] =
        premises ? Json(ac.verdict == Verdict::Dominates) : Json(nullptr);
    std::string csv = csv_row({"pair", "verdict", "min_slack"}) +
                      csv_row({"a>b", verdict_name(ab.verdict), ab.min_slack.str()}) +
                      csv_row({"b>c", verdict_name(bc.verdict), bc.min_slack.str()}) +
                      csv_row({"a>c", verdict_name(ac.verdict), ac.min_slack.str()});
    emit(g,
         manifest_for("wells transitivity",
                      {{"a", wtr.a}, {"b", wtr.b}, {"c", wtr.c},
                       {"max_degree", std::to_string(wtr.max_degree)}}),
         body, csv);
    g.rc = 0;
  });

  // ---- families ---------------------------------------------------------------
  auto* fam_cmd = app.add_subcommand("families", "Closed-form family certificates");
  fam_cmd->fallthrough(true);
  fam_cmd->require_subcommand(1);

  struct {
    std::string smax = "10";
    unsigned m_max = 50;
    bool include_one = false;
  } fs;
  auto* fam_spin = fam_cmd->add_subcommand("spin", "Odd-power sums over spin grids");
  fam_spin->fallthrough(true);
  fam_spin->add_option("--smax", fs.smax, "Largest S (half-integers allowed)");
  fam_spin->add_option("--mmax", fs.m_max, "Largest m");
  fam_spin->add_flag("--include-one", fs.include_one,
                     "Include S=1, whose sums run negative by design");
  fam_spin->callback([&]() {
    Rat smax = Value::parse(fs.smax).rat();
    std::vector<Rat> S_list;
    for (long p = 1; Rat(p, 2) <= smax; ++p) {
      Rat S(p, 2);
      S.canonicalize();
      if (S == 1 && !fs.include_one) continue;
      S_list.push_back(S);
    }
    if (S_list.empty()) throw std::invalid_argument("empty S range");
    auto certs = verify_spin_canonical(S_list, fs.m_max);
    bool ok = true;
    for (size_t i = 0; i < certs.size(); ++i) {
      const Rat& S = S_list[i];
      if (S == Rat(1, 2) || S == Rat(3, 2))
        ok = ok && certs[i].all_zero;
      else if (S == 1)
        ok = ok && certs[i].values[0].is_zero() && certs[i].strictly_negative_tail;
      else
        ok = ok && certs[i].all_nonneg;
    }
    emit(g,
         manifest_for("families spin", {{"smax", fs.smax},
                                        {"mmax", std::to_string(fs.m_max)},
                                        {"include_one", fs.include_one ? "1" : "0"}}),
         family_certs_json(certs), family_certs_csv(certs));
    g.rc = ok ? 0 : 1;
  });

  struct {
    int d_max = 10;
    unsigned m_max = 30;
  } fd;
  auto* fam_dvec = fam_cmd->add_subcommand("dvector", "Odd gap integrals, sphere components");
  fam_dvec->fallthrough(true);
  fam_dvec->add_option("--dmax", fd.d_max, "Largest dimension");
  fam_dvec->add_option("--mmax", fd.m_max, "Largest m");
  fam_dvec->callback([&]() {
    auto certs = verify_dvector_canonical(fd.d_max, fd.m_max);
    bool ok = true;
    for (size_t i = 0; i < certs.size(); ++i) {
      int D = 2 + static_cast<int>(i);
      if (D == 2) {
        ok = ok && certs[i].all_zero;
      } else {
        ok = ok && certs[i].all_nonneg;
        for (size_t r = 0; r < certs[i].checked_powers.size(); ++r)
          if (certs[i].checked_powers[r] >= 1)
            ok = ok && certs[i].values[r].sign() > 0;
      }
    }
    emit(g,
         manifest_for("families dvector", {{"dmax", std::to_string(fd.d_max)},
                                           {"mmax", std::to_string(fd.m_max)}}),
         family_certs_json(certs), family_certs_csv(certs));
    g.rc = ok ? 0 : 1;
  });

  struct {
    double p = 2.0;
    std::string S = "10";
    unsigned m_max = 20;
  } fp;
  auto* fam_power = fam_cmd->add_subcommand(
      "power", "Exploratory |j|^p analog of the spin sums (evidence only)");
  fam_power->fallthrough(true);
  fam_power->add_option("--p", fp.p, "Exponent")->required();
  fam_power->add_option("--S", fp.S, "Grid size S");
  fam_power->add_option("--mmax", fp.m_max, "Largest m");
  fam_power->callback([&]() {
    PowerAnalogReport rep = power_analog_table(fp.p, Value::parse(fp.S).rat(), fp.m_max);
    emit(g,
         manifest_for("families power", {{"p", std::to_string(fp.p)},
                                         {"S", fp.S},
                                         {"mmax", std::to_string(fp.m_max)}}),
         power_analog_json(rep), power_analog_csv(rep));
    g.rc = 0;
  });

  // ---- majorize ---------------------------------------------------------------
  auto* maj_cmd = app.add_subcommand("majorize", "Majorization and convex-sum routes");
  maj_cmd->fallthrough(true);
  maj_cmd->require_subcommand(1);

  struct {
    std::string x, y;
    bool karamata = false;
    double tol = 1e-12;
  } mc;
  auto* maj_check = maj_cmd->add_subcommand("check", "Partial-sum comparison of two vectors");
  maj_check->fallthrough(true);
  maj_check->add_option("--x", mc.x, "Comma list, the candidate majorant")->required();
  maj_check->add_option("--y", mc.y, "Comma list")->required();
  maj_check->add_flag("--karamata", mc.karamata, "Run the convex test family too");
  maj_check->add_option("--tol", mc.tol, "Float-mode tolerance");
  maj_check->callback([&]() {
    OrderedVector x = OrderedVector::sorted(parse_value_list(mc.x));
    OrderedVector y = OrderedVector::sorted(parse_value_list(mc.y));
    MajorizationCertificate cert = majorizes(x, y, mc.tol);
    Json body = majorization_cert_json(cert);
    std::string csv = csv_row({"k", "partial_sum_gap"});
    for (size_t k = 0; k < cert.partial_sum_gaps.size(); ++k)
      csv += csv_row({std::to_string(k + 1), cert.partial_sum_gaps[k].str()});
    if (cert.total_equal) {
      auto crossing = single_crossing_check(x, y, mc.tol);
      body["single_crossing_index"] =
          crossing ? Json(*crossing->crossing_index) : Json(nullptr);
      if (cert.majorizes && mc.karamata)
        body["karamata"] = karamata_json(karamata_test(x, y));
      if (!cert.majorizes) {
        auto witness = karamata_converse_witness(x, y);
        if (witness) body["converse_witness_hinge"] = tag_value(*witness);
      }
    }
    emit(g, manifest_for("majorize check", {{"x", mc.x}, {"y", mc.y}}), body, csv);
    g.rc = cert.majorizes ? 0 : 1;
  });

  struct {
    std::string variant = "A2";
    std::string psi = "power:2";
    unsigned N = 6;
    unsigned m_max = 25;
  } mt;
  auto* maj_theorem = maj_cmd->add_subcommand(
      "theorem", "Dual-route convex-sum verification on a psi grid");
  maj_theorem->fallthrough(true);
  maj_theorem->add_option("--variant", mt.variant, "A1 (increasing) or A2 (even)")
      ->check(CLI::IsMember({"A1", "A2"}));
  maj_theorem->add_option("--psi", mt.psi, "power:p | shifted_power:p | table:...");
  maj_theorem->add_option("--N", mt.N, "Grid resolution")->required();
  maj_theorem->add_option("--mmax", mt.m_max, "Largest m for the direct sums");
  maj_theorem->callback([&]() {
    TheoremReport rep = verify_theorem(PsiSpec::parse(mt.psi), mt.N, mt.m_max, mt.variant);
    emit(g,
         manifest_for("majorize theorem", {{"variant", mt.variant},
                                           {"psi", mt.psi},
                                           {"N", std::to_string(mt.N)},
                                           {"mmax", std::to_string(mt.m_max)}}),
         theorem_report_json(rep), theorem_report_csv(rep));
    g.rc = rep.routes_agree ? 0 : 1;
  });

  // ---- gibbs --------------------------------------------------------------------
  auto* gibbs_cmd = app.add_subcommand("gibbs", "Exactly enumerated finite systems");
  gibbs_cmd->fallthrough(true);
  gibbs_cmd->require_subcommand(1);

  struct {
    std::string system, measure, monomial;
    unsigned cells = 16;
  } ge;
  auto* gibbs_expect = gibbs_cmd->add_subcommand("expect", "Single correlation function");
  gibbs_expect->fallthrough(true);
  gibbs_expect->add_option("--system", ge.system, "Interaction JSON file")->required();
  gibbs_expect->add_option("--measure", ge.measure, "Site measure spec")->required();
  gibbs_expect->add_option("--monomial", ge.monomial, "site:exp list, e.g. 0:1,1:1")
      ->required();
  gibbs_expect->add_option("--cells", ge.cells, "Discretization cells for dvector");
  gibbs_expect->callback([&]() {
    Interaction inter = Interaction::from_json_text(slurp(ge.system));
    GibbsSystem sys(inter, load_measure(g, ge.measure), ge.cells);
    Monomial a = parse_monomial(ge.monomial);
    double v = sys.expectation(a);
    double z = sys.partition_function();
    Json body{{"monomial", monomial_str(a)},
              {"value", tag_float(v)},
              {"partition_function", tag_float(z)},
              {"configurations", sys.config_count()}};
    std::string csv = csv_row({"monomial", "value", "partition_function"}) +
                      csv_row({monomial_str(a), format_double(v), format_double(z)});
    emit(g,
         manifest_for("gibbs expect", {{"system", ge.system},
                                       {"measure", ge.measure},
                                       {"monomial", ge.monomial}}),
         body, csv);
    g.rc = 0;
  });

  struct {
    std::string lower, upper, system, templ;
    unsigned trials = 100;
    int degree = 2;
    double temperature = 1.0;
    bool no_odd_fields = false;
    bool even_singles = false;
    unsigned cells = 16;
    double tol = 1e-10;
  } gd;
  auto* gibbs_dom = gibbs_cmd->add_subcommand("dominate", "Correlation ordering check");
  gibbs_dom->fallthrough(true);
  gibbs_dom->add_option("--lower", gd.lower, "Dominated measure")->required();
  gibbs_dom->add_option("--upper", gd.upper, "Dominant measure")->required();
  gibbs_dom->add_option("--system", gd.system, "Interaction JSON file (single check)");
  gibbs_dom->add_option("--template", gd.templ, "Ensemble template (path3, ring4, ...)");
  gibbs_dom->add_option("--trials", gd.trials, "Ensemble size");
  gibbs_dom->add_option("--degree", gd.degree, "Monomial degree cap");
  gibbs_dom->add_option("--temperature", gd.temperature, "Ensemble temperature");
  gibbs_dom->add_flag("--no-odd-fields", gd.no_odd_fields, "Drop random odd fields");
  gibbs_dom->add_flag("--even-singles", gd.even_singles, "Add random square terms");
  gibbs_dom->add_option("--cells", gd.cells, "Discretization cells for dvector");
  gibbs_dom->add_option("--tol", gd.tol, "Slack tolerance");
  gibbs_dom->callback([&]() {
    EvenMeasure lo = load_measure(g, gd.lower);
    EvenMeasure up = load_measure(g, gd.upper);
    if (gd.system.empty() == gd.templ.empty())
      throw std::invalid_argument("give exactly one of --system and --template");
    if (!gd.system.empty()) {
      Interaction inter = Interaction::from_json_text(slurp(gd.system));
      auto monos = monomials_up_to_degree(inter.sites, gd.degree);
      DominationReport rep = domination_check(lo, up, inter, monos, gd.tol, gd.cells);
      emit(g,
           manifest_for("gibbs dominate", {{"lower", gd.lower},
                                           {"upper", gd.upper},
                                           {"system", gd.system},
                                           {"degree", std::to_string(gd.degree)}}),
           domination_json(rep), domination_csv(rep));
      g.rc = rep.all_ok ? 0 : 1;
      return;
    }
    EnsembleOptions opt;
    opt.trials = gd.trials;
    opt.seed = g.seed;
    opt.temperature = gd.temperature;
    opt.odd_fields = !gd.no_odd_fields;
    opt.even_singles = gd.even_singles;
    opt.max_degree = gd.degree;
    opt.tol = gd.tol;
    opt.dvector_cells = gd.cells;
    EnsembleReport rep = domination_ensemble(lo, up, gd.templ, opt);
    emit(g,
         manifest_for("gibbs dominate", {{"lower", gd.lower},
                                         {"upper", gd.upper},
                                         {"template", gd.templ},
                                         {"trials", std::to_string(gd.trials)},
                                         {"degree", std::to_string(gd.degree)}},
                      true),
         ensemble_json(rep), ensemble_csv(rep));
    g.rc = rep.all_ok ? 0 : 1;
  });

  struct {
    std::string measure, system, templ;
    unsigned trials = 100;
    int degree = 2;
    double temperature = 1.0;
    bool no_odd_fields = false;
    bool even_singles = false;
    unsigned cells = 16;
    double tol = 1e-10;
  } gk;
  auto* gibbs_gks = gibbs_cmd->add_subcommand("gks", "Correlation positivity check");
  gibbs_gks->fallthrough(true);
  gibbs_gks->add_option("--measure", gk.measure, "Site measure spec")->required();
  gibbs_gks->add_option("--system", gk.system, "Interaction JSON file (single check)");
  gibbs_gks->add_option("--template", gk.templ, "Ensemble template");
  gibbs_gks->add_option("--trials", gk.trials, "Ensemble size");
  gibbs_gks->add_option("--degree", gk.degree, "Monomial degree cap");
  gibbs_gks->add_option("--temperature", gk.temperature, "Ensemble temperature");
  gibbs_gks->add_flag("--no-odd-fields", gk.no_odd_fields, "Drop random odd fields");
  gibbs_gks->add_flag("--even-singles", gk.even_singles, "Add random square terms");
  gibbs_gks->add_option("--cells", gk.cells, "Discretization cells for dvector");
  gibbs_gks->add_option("--tol", gk.tol, "Relative tolerance");
  gibbs_gks->callback([&]() {
    EvenMeasure mu = load_measure(g, gk.measure);
    if (gk.system.empty() == gk.templ.empty())
      throw std::invalid_argument("give exactly one of --system and --template");
    if (!gk.system.empty()) {
      Interaction inter = Interaction::from_json_text(slurp(gk.system));
      GibbsSystem sys(inter, mu, gk.cells);
      GksReport rep = gks_check(sys, monomials_up_to_degree(inter.sites, gk.degree),
                                default_gks_pairs(inter.sites), gk.tol);
      emit(g,
           manifest_for("gibbs gks", {{"measure", gk.measure}, {"system", gk.system}}),
           gks_json(rep), gks_csv(rep));
      g.rc = rep.all_ok ? 0 : 1;
      return;
    }
    EnsembleOptions opt;
    opt.trials = gk.trials;
    opt.seed = g.seed;
    opt.temperature = gk.temperature;
    opt.odd_fields = !gk.no_odd_fields;
    opt.even_singles = gk.even_singles;
    opt.max_degree = gk.degree;
    opt.tol = gk.tol;
    opt.dvector_cells = gk.cells;
    EnsembleReport rep = gks_ensemble(mu, gk.templ, opt);
    emit(g,
         manifest_for("gibbs gks", {{"measure", gk.measure},
                                    {"template", gk.templ},
                                    {"trials", std::to_string(gk.trials)}},
                      true),
         ensemble_json(rep), ensemble_csv(rep));
    g.rc = rep.all_ok ? 0 : 1;
  });

  struct {
    std::string measure, system, templ = "path2", s = "1/2";
    double coupling = 1.0;
    double temperature = 1.0;
    int degree = 2;
    unsigned cells = 16;
    double tol = 1e-10;
  } gs;
  auto* gibbs_scaling = gibbs_cmd->add_subcommand(
      "scaling", "Measure-rescale vs temperature-rescale identity");
  gibbs_scaling->fallthrough(true);
  gibbs_scaling->add_option("--measure", gs.measure, "Base measure spec")->required();
  gibbs_scaling->add_option("--s", gs.s, "Scale factor (rational ok)");
  gibbs_scaling->add_option("--system", gs.system, "Interaction JSON file, pair terms only");
  gibbs_scaling->add_option("--template", gs.templ, "Edge template for a uniform coupling");
  gibbs_scaling->add_option("--coupling", gs.coupling, "Uniform edge coupling");
  gibbs_scaling->add_option("--temperature", gs.temperature, "System temperature");
  gibbs_scaling->add_option("--degree", gs.degree, "Monomial degree cap");
  gibbs_scaling->add_option("--cells", gs.cells, "Discretization cells for dvector");
  gibbs_scaling->add_option("--tol", gs.tol, "Relative tolerance");
  gibbs_scaling->callback([&]() {
    Interaction inter =
        load_or_build_interaction(gs.system, gs.templ, gs.coupling, gs.temperature);
    EvenMeasure mu = load_measure(g, gs.measure);
    ScalingReport rep = scaling_check(inter, mu, Value::parse(gs.s),
                                      monomials_up_to_degree(inter.sites, gs.degree),
                                      gs.tol, gs.cells);
    emit(g,
         manifest_for("gibbs scaling", {{"measure", gs.measure},
                                        {"s", gs.s},
                                        {"degree", std::to_string(gs.degree)}}),
         scaling_json(rep), scaling_csv(rep));
    g.rc = rep.all_ok ? 0 : 1;
  });

  struct {
    std::string measure;
    unsigned k_max = 6;
    double tol = 1e-12;
  } gg;
  auto* gibbs_gin = gibbs_cmd->add_subcommand(
      "ginibre", "Duplicate-variable parity and positivity grid");
  gibbs_gin->fallthrough(true);
  gibbs_gin->add_option("--measure", gg.measure, "Atomic measure spec")->required();
  gibbs_gin->add_option("--kmax", gg.k_max, "Grid cutoff");
  gibbs_gin->add_option("--tol", gg.tol, "Float-mode tolerance");
  gibbs_gin->callback([&]() {
    GinibreReport rep = ginibre_g2_check(load_measure(g, gg.measure), gg.k_max, gg.tol);
    emit(g,
         manifest_for("gibbs ginibre", {{"measure", gg.measure},
                                        {"kmax", std::to_string(gg.k_max)}}),
         ginibre_json(rep), ginibre_csv(rep));
    g.rc = rep.all_ok ? 0 : 1;
  });

  // ---- bounds -------------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "Transition-temperature coefficients");
  bounds_cmd->fallthrough(true);
  bounds_cmd->require_subcommand(1);

  struct {
    std::string measure;
    std::string coupling_sum;
    unsigned cutoff = 101;
  } br;
  auto* bounds_report_cmd = bounds_cmd->add_subcommand("report", "Coefficient table");
  bounds_report_cmd->fallthrough(true);
  bounds_report_cmd->add_option("--measure", br.measure, "Measure spec")->required();
  bounds_report_cmd->add_option("--coupling-sum", br.coupling_sum,
                                "Total coupling per site, for the mean-field value");
  bounds_report_cmd->add_option("--cutoff", br.cutoff, "Odd-power cutoff (atomic fallback)");
  bounds_report_cmd->callback([&]() {
    MeasureSpec spec = load_spec(br.measure);
    std::optional<Value> cs;
    if (!br.coupling_sum.empty()) cs = Value::parse(br.coupling_sum);
    TemperatureBounds b = bound_report(spec, br.cutoff, cs);
    double eps = b.t_minus_exact ? 0.0 : 1e-9;
    bool sandwich = b.lower_factor.as_double() <= b.second_moment.as_double() + eps &&
                    b.second_moment.as_double() <= b.t_plus_sq.as_double() + eps;
    Json body = bounds_json(b);
    body["sandwich_ok"] = sandwich;
    emit(g,
         manifest_for("bounds report", {{"measure", br.measure},
                                        {"cutoff", std::to_string(br.cutoff)}}),
         body, bounds_csv(b));
    g.rc = sandwich ? 0 : 1;
  });

  // ---- measures -------------------------------------------------------------------
  auto* meas_cmd = app.add_subcommand("measures", "Measure inspection");
  meas_cmd->fallthrough(true);
  meas_cmd->require_subcommand(1);

  struct {
    std::string measure;
    unsigned moments = 12;
  } ms;
  auto* meas_show = meas_cmd->add_subcommand("show", "Atoms and moment table");
  meas_show->fallthrough(true);
  meas_show->add_option("--measure", ms.measure, "Measure spec")->required();
  meas_show->add_option("--moments", ms.moments, "Highest moment to print");
  meas_show->callback([&]() {
    EvenMeasure mu = load_measure(g, ms.measure);
    emit(g,
         manifest_for("measures show", {{"measure", ms.measure},
                                        {"moments", std::to_string(ms.moments)}}),
         measure_json(mu, ms.moments), measure_csv(mu, ms.moments));
    g.rc = 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g.rc;
}

}  // namespace wellscmp
