#include "doctest.h"
#include "wellscmp/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "wellscmp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return wellscmp::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OutFile {
  std::string path;
  explicit OutFile(const std::string& name) : path(name) {}
  ~OutFile() { std::remove(path.c_str()); }
  Json json() const { return Json::parse(slurp(path)); }
};

OutFile write_file(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return OutFile(name);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"no_such_command"}) == 2);
  CHECK(run({"wells", "check"}) == 2);                        // missing required options
  CHECK(run({"wells", "check", "--upper", "bernoulli:1"}) == 2);
  OutFile out("cli_bad_spec.json");
  CHECK(run({"wells", "check", "--upper", "what:1", "--lower", "bernoulli:1", "--out",
             out.path}) == 2);
  CHECK(run({"measures", "show", "--measure", "spin:0.4", "--out", out.path}) == 2);
  CHECK(run({"gibbs", "dominate", "--lower", "bernoulli:0.5", "--upper",
             "three_point:0.5", "--out", out.path}) == 2);  // no system, no template
}

TEST_CASE("wells check: verdicts drive the exit code") {
  OutFile out("cli_wells.json");
  CHECK(run({"wells", "check", "--upper", "bernoulli:1", "--lower", "three_point:0.5",
             "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["verdict"] == "dominates");
  CHECK(j["exact"] == true);
  CHECK(j["manifest"]["command"] == "wells check");
  CHECK(j["manifest"]["arithmetic"] == "exact");
  CHECK(j["manifest"]["timings"]["elapsed_ms"].is_number());
  CHECK(j["entries"].size() > 0);

  CHECK(run({"wells", "check", "--upper", "bernoulli:1/2", "--lower", "bernoulli:1",
             "--max-degree", "1", "--out", out.path}) == 1);
  auto v = out.json();
  CHECK(v["verdict"] == "violated");
  CHECK(v["min_slack"]["exact"] == "-3/4");
  CHECK(v["worst"]["n"] == 1);
  CHECK(v["worst"]["m"] == 1);
}

TEST_CASE("wells check in float mode reports float arithmetic") {
  OutFile out("cli_wells_float.json");
  CHECK(run({"--float", "wells", "check", "--upper", "bernoulli:1", "--lower",
             "three_point:0.5", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["exact"] == false);
  CHECK(j["manifest"]["arithmetic"] == "float");
  CHECK(j["min_slack"].contains("float"));
}

TEST_CASE("wells tminus reports per-power roots") {
  OutFile out("cli_tminus.json");
  CHECK(run({"wells", "tminus", "--measure", "three_point:0.7", "--cutoff", "21",
             "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["cutoff"] == 21);
  CHECK(j["per_power_roots"].size() == 11);
  double est = j["t_minus_estimate"]["float"].get<double>();
  CHECK(est > 0.70);
  CHECK(est < 0.76);
  CHECK(j["argmin_n"] == 21);
}

TEST_CASE("wells canonical and transitivity") {
  OutFile out("cli_canonical.json");
  CHECK(run({"wells", "canonical", "--measure", "spin:3/2", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["canonical"] == true);
  CHECK(j["second_moment"]["exact"] == "5/9");

  OutFile tout("cli_trans.json");
  CHECK(run({"wells", "transitivity", "--a", "bernoulli:1", "--b", "three_point:0.5",
             "--c", "bernoulli:0.5", "--out", tout.path}) == 0);
  auto t = tout.json();
  CHECK(t["chain_applicable"] == true);
  CHECK(t["chain_conclusion_holds_at_degree"] == true);
}

TEST_CASE("families commands expose the sign certificates") {
  OutFile out("cli_spin.json");
  CHECK(run({"families", "spin", "--smax", "5/2", "--mmax", "8", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["certificates"].size() == 4);  // 1/2, 3/2, 2, 5/2 (S=1 needs opt-in)
  CHECK(run({"families", "spin", "--smax", "2", "--mmax", "8", "--include-one", "--out",
             out.path}) == 0);
  auto with_one = out.json();
  CHECK(with_one["certificates"].size() == 4);

  OutFile dout("cli_dvec.json");
  CHECK(run({"families", "dvector", "--dmax", "5", "--mmax", "6", "--out", dout.path}) ==
        0);
  auto d = dout.json();
  CHECK(d["certificates"].size() == 4);
  for (const auto& c : d["certificates"]) {
    if (c["parameter"] == "D=2") CHECK(c["all_zero"] == true);
    else CHECK(c["all_nonneg"] == true);
  }

  OutFile pout("cli_power.json");
  CHECK(run({"families", "power", "--p", "2", "--S", "3", "--mmax", "4", "--out",
             pout.path}) == 0);
}

TEST_CASE("majorize check handles both verdicts and extras") {
  OutFile out("cli_maj.json");
  CHECK(run({"majorize", "check", "--x", "5,3,2", "--y", "4,4,2", "--karamata", "--out",
             out.path}) == 0);
  auto j = out.json();
  CHECK(j["majorizes"] == true);
  CHECK(j["single_crossing_index"] == 2);
  CHECK(j["karamata"]["all_ok"] == true);

  CHECK(run({"majorize", "check", "--x", "3,3", "--y", "4,2", "--out", out.path}) == 1);
  auto f = out.json();
  CHECK(f["majorizes"] == false);
  CHECK(f["converse_witness_hinge"]["exact"] == "3");
}

TEST_CASE("majorize theorem emits the worked example") {
  OutFile out("cli_thm.json");
  CHECK(run({"majorize", "theorem", "--variant", "A2", "--psi", "power:2", "--N", "6",
             "--mmax", "5", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["routes_agree"] == true);
  CHECK(j["refused"] == false);
  CHECK(j["build"]["x"][0]["exact"] == "22");
  CHECK(j["build"]["gate_avg5_margin"]["exact"] == "4");
  CHECK(j["certificate"]["route"] == "via_w");

  // refusal keeps the exit code at zero: the command reports, it does not judge
  CHECK(run({"majorize", "theorem", "--variant", "A2", "--psi", "power:2", "--N", "1",
             "--out", out.path}) == 0);
  auto r = out.json();
  CHECK(r["refused"] == true);
  CHECK(r["routes_agree"] == true);
}

TEST_CASE("gibbs expect matches the closed form") {
  OutFile out("cli_expect.json");
  OutFile sys = write_file(
      "cli_expect_system.json",
      R"({"sites":2,"temperature":1.0,"terms":[{"exps":{"0":1,"1":1},"J":0.7}]})");
  CHECK(run({"gibbs", "expect", "--system", sys.path, "--measure", "bernoulli:1",
             "--monomial", "0:1,1:1", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["monomial"] == "0:1,1:1");
  CHECK(j["configurations"] == 4);
  double z = j["partition_function"]["float"].get<double>();
  double c = j["value"]["float"].get<double>();
  CHECK(z == doctest::Approx(std::cosh(0.7)).epsilon(1e-13));
  CHECK(c == doctest::Approx(std::tanh(0.7)).epsilon(1e-13));
}

TEST_CASE("gibbs ensemble commands are seed-reproducible") {
  OutFile a("cli_ens_a.json"), b("cli_ens_b.json");
  std::vector<std::string> base = {"gibbs",   "dominate",        "--template", "path3",
                                   "--lower", "bernoulli:0.5",   "--upper",
                                   "three_point:0.5", "--trials", "10"};
  auto run_to = [&](const std::string& path, uint64_t seed) {
    auto args = base;
    args.insert(args.begin(), {"--seed", std::to_string(seed)});
    args.push_back("--out");
    args.push_back(path);
    return run(args);
  };
  CHECK(run_to(a.path, 7) == 0);
  CHECK(run_to(b.path, 7) == 0);
  auto ja = a.json(), jb = b.json();
  CHECK(ja["worst"] == jb["worst"]);
  CHECK(ja["worst_trial"] == jb["worst_trial"]);
  CHECK(ja["manifest"]["seed"] == 7);

  CHECK(run_to(a.path, 8) == 0);
  CHECK(a.json()["worst"] != ja["worst"]);

  OutFile g("cli_gks.json");
  CHECK(run({"gibbs", "gks", "--template", "ring3", "--measure", "spin:1", "--trials",
             "5", "--out", g.path}) == 0);
  CHECK(g.json()["all_ok"] == true);
}

TEST_CASE("gibbs scaling and ginibre") {
  OutFile out("cli_scaling.json");
  OutFile sys = write_file("cli_scaling_system.json",
                           R"({"sites":2,"terms":[{"exps":{"0":1,"1":1},"J":1.0}]})");
  CHECK(run({"gibbs", "scaling", "--system", sys.path, "--measure", "bernoulli:1", "--s",
             "1/2", "--out", out.path}) == 0);
  auto j = out.json();
  CHECK(j["all_ok"] == true);

  OutFile gout("cli_ginibre.json");
  CHECK(run({"gibbs", "ginibre", "--measure", "spin:2", "--kmax", "3", "--out",
             gout.path}) == 0);
  CHECK(gout.json()["all_ok"] == true);
}

TEST_CASE("bounds report carries the sandwich flag") {
  OutFile out("cli_bounds.json");
  CHECK(run({"bounds", "report", "--measure", "spin:3/2", "--coupling-sum", "4", "--out",
             out.path}) == 0);
  auto j = out.json();
  CHECK(j["sandwich_ok"] == true);
  CHECK(j["lower_factor"]["exact"] == "5/9");
  CHECK(j["improvement_ratio"]["exact"] == "5/4");
  CHECK(j["mean_field_tc"]["exact"] == "20/9");
}

TEST_CASE("measures show lists atoms and moments") {
  OutFile out("cli_show.json");
  CHECK(run({"measures", "show", "--measure", "spin:3/2", "--moments", "6", "--out",
             out.path}) == 0);
  auto j = out.json();
  CHECK(j["kind"] == "atomic");
  CHECK(j["atoms"].size() == 2);
  CHECK(j["moments"][2]["value"]["exact"] == "5/9");
  CHECK(j["support_sup"]["exact"] == "1");
}

TEST_CASE("csv output starts with a manifest comment") {
  OutFile out("cli_csv.csv");
  CHECK(run({"--csv", "families", "dvector", "--dmax", "3", "--mmax", "2", "--out",
             out.path}) == 0);
  auto text = slurp(out.path);
  CHECK(text.rfind("# families dvector version=", 0) == 0);
  CHECK(text.find("family,parameter,m,value") != std::string::npos);
  CHECK(text.find("16/945") != std::string::npos);
}
