#include "wellscmp/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wellscmp/parallel.hpp"

namespace wellscmp {

Monomial parse_monomial(const std::string& text) {
  Monomial m;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    int site = std::stoi(item.substr(0, colon));
    int exp = colon == std::string::npos ? 1 : std::stoi(item.substr(colon + 1));
    if (exp < 1) throw std::invalid_argument("monomial exponents must be >= 1");
    if (site < 0) throw std::invalid_argument("negative site index");
    m[site] += exp;
  }
  if (m.empty()) throw std::invalid_argument("empty monomial");
  return m;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [site, exp] : m) {
    if (!s.empty()) s += ",";
    s += std::to_string(site) + ":" + std::to_string(exp);
  }
  return s;
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [site, exp] : m) d += exp;
  return d;
}

void Interaction::validate() const {
  if (sites < 1) throw std::invalid_argument("need at least one site");
  if (!(temperature > 0) || !std::isfinite(temperature))
    throw std::invalid_argument("temperature must be positive");
  for (const auto& t : terms) {
    if (!(t.J >= 0) || !std::isfinite(t.J))
      throw std::invalid_argument("couplings must be >= 0 (ferromagnetic)");
    if (t.exps.empty()) throw std::invalid_argument("empty interaction term");
    for (const auto& [site, exp] : t.exps) {
      if (site < 0 || site >= sites)
        throw std::invalid_argument("term references site " + std::to_string(site) +
                                    " outside 0.." + std::to_string(sites - 1));
      if (exp < 1) throw std::invalid_argument("exponents must be >= 1");
    }
  }
}

bool Interaction::pair_only() const {
  for (const auto& t : terms)
    if (monomial_degree(t.exps) != 2) return false;
  return true;
}

Interaction Interaction::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad interaction JSON: ") + e.what());
  }
  Interaction inter;
  try {
    inter.sites = j.at("sites").get<int>();
    inter.temperature = j.value("temperature", 1.0);
    for (const auto& t : j.value("terms", nlohmann::json::array())) {
      InteractionTerm term;
      term.J = t.at("J").get<double>();
      for (auto it = t.at("exps").begin(); it != t.at("exps").end(); ++it)
        term.exps[std::stoi(it.key())] += it.value().get<int>();
      inter.terms.push_back(std::move(term));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad interaction JSON: ") + e.what());
  }
  inter.validate();
  return inter;
}

GibbsSystem::GibbsSystem(Interaction interaction, const EvenMeasure& site_measure,
                         unsigned dvector_cells)
    : interaction_(std::move(interaction)) {
  interaction_.validate();
  if (site_measure.kind == MeasureKind::DVector) {
    site_measure_ = discretize(site_measure, static_cast<int>(dvector_cells));
    discretize_cells_ = dvector_cells;
  } else {
    site_measure_ = site_measure;
  }
  for (const Atom& a : site_measure_.atoms) {
    double t = a.t.as_double(), w = a.w.as_double();
    if (t == 0.0) {
      points_.push_back(0.0);
      weights_.push_back(w);
    } else {
      points_.push_back(t);
      weights_.push_back(w / 2);
      points_.push_back(-t);
      weights_.push_back(w / 2);
    }
  }
  if (config_count() > kMaxConfigs)
    throw std::invalid_argument("enumeration too large: " +
                                std::to_string(points_.size()) + "^" +
                                std::to_string(interaction_.sites) + " configurations");
}

double GibbsSystem::config_count() const {
  return std::pow(static_cast<double>(points_.size()), interaction_.sites);
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct FlatFactor {
  int site;
  int exp;
};

struct FlatTerm {
  double coef;
  std::vector<FlatFactor> factors;
};

/// Streaming accumulator with running max-exponent rescale, so exp() never
/// overflows however large the couplings get.
struct gibbs_accum {
  double max_e = kNegInf;
  double z = 0.0;
  std::vector<double> nums;

  explicit gibbs_accum(size_t n) : nums(n, 0.0) {}

  void add(double e, double w, const double* f) {
    if (e > max_e) {
      double sc = std::exp(max_e - e);
      z *= sc;
      for (auto& v : nums) v *= sc;
      max_e = e;
    }
    double b = w * std::exp(e - max_e);
    z += b;
    for (size_t i = 0; i < nums.size(); ++i) nums[i] += b * f[i];
  }

  void merge(const gibbs_accum& o) {
    if (o.max_e == kNegInf) return;
    if (o.max_e > max_e) {
      double sc = max_e == kNegInf ? 0.0 : std::exp(max_e - o.max_e);
      z *= sc;
      for (auto& v : nums) v *= sc;
      max_e = o.max_e;
    }
    double sc = std::exp(o.max_e - max_e);
    z += o.z * sc;
    for (size_t i = 0; i < nums.size(); ++i) nums[i] += o.nums[i] * sc;
  }
};

std::vector<FlatFactor> flatten(const Monomial& m) {
  std::vector<FlatFactor> fs;
  for (const auto& [site, exp] : m) fs.push_back({site, exp});
  return fs;
}

}  // namespace

struct EnumPass {
  static gibbs_accum run(const GibbsSystem& sys, const std::vector<Monomial>& monomials) {
    const int L = sys.interaction_.sites;
    const size_t K = sys.points_.size();
    const double invT = 1.0 / sys.interaction_.temperature;

    int max_exp = 1;
    std::vector<FlatTerm> terms;
    for (const auto& t : sys.interaction_.terms) {
      terms.push_back({t.J * invT, flatten(t.exps)});
      for (const auto& f : terms.back().factors) max_exp = std::max(max_exp, f.exp);
    }
    std::vector<std::vector<FlatFactor>> monos;
    for (const auto& m : monomials) {
      monos.push_back(flatten(m));
      for (const auto& f : monos.back()) max_exp = std::max(max_exp, f.exp);
    }

    std::vector<std::vector<double>> pw(K, std::vector<double>(max_exp + 1, 1.0));
    for (size_t a = 0; a < K; ++a)
      for (int e = 1; e <= max_exp; ++e) pw[a][e] = pw[a][e - 1] * sys.points_[a];

    unsigned long long total = 1;
    for (int s = 0; s < L; ++s) total *= K;

    // fixed block partition keeps the reduction order independent of --jobs
    size_t blocks = total >= 32768 ? 64 : 1;
    std::vector<gibbs_accum> acc(blocks, gibbs_accum(monos.size()));
    parallel_blocks(blocks, [&](size_t b) {
      unsigned long long begin = total * b / blocks;
      unsigned long long end = total * (b + 1) / blocks;
      std::vector<size_t> idx(L);
      unsigned long long c = begin;
      for (int s = 0; s < L; ++s) {
        idx[s] = c % K;
        c /= K;
      }
      gibbs_accum& A = acc[b];
      std::vector<double> f(monos.size());
      for (unsigned long long i = begin; i < end; ++i) {
        double w = 1.0;
        for (int s = 0; s < L; ++s) w *= sys.weights_[idx[s]];
        double e = 0.0;
        for (const auto& t : terms) {
          double p = t.coef;
          for (const auto& fa : t.factors) p *= pw[idx[fa.site]][fa.exp];
          e += p;
        }
        for (size_t m = 0; m < monos.size(); ++m) {
          double p = 1.0;
          for (const auto& fa : monos[m]) p *= pw[idx[fa.site]][fa.exp];
          f[m] = p;
        }
        A.add(e, w, f.data());
        for (int s = 0; s < L; ++s) {
          if (++idx[s] < K) break;
          idx[s] = 0;
        }
      }
    });

    gibbs_accum out = std::move(acc[0]);
    for (size_t b = 1; b < blocks; ++b) out.merge(acc[b]);
    if (!std::isfinite(out.z) || out.z <= 0.0)
      throw std::overflow_error("partition sum lost precision (couplings too large)");
    return out;
  }
};

double GibbsSystem::partition_function() const {
  gibbs_accum a = EnumPass::run(*this, {});
  double z = std::exp(a.max_e) * a.z;
  if (!std::isfinite(z))
    throw std::overflow_error("partition function overflow (couplings too large)");
  return z;
}

double GibbsSystem::expectation(const Monomial& a) const {
  return expectation_many({a})[0];
}

std::vector<double> GibbsSystem::expectation_many(
    const std::vector<Monomial>& monomials) const {
  gibbs_accum a = EnumPass::run(*this, monomials);
  std::vector<double> out(monomials.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.nums[i] / a.z;
  return out;
}

GksReport gks_check(const GibbsSystem& system, const std::vector<Monomial>& monomials,
                    const std::vector<std::pair<Monomial, Monomial>>& pairs,
                    double tol) {
  std::map<Monomial, size_t> index;
  std::vector<Monomial> needed;
  auto idx_of = [&](const Monomial& m) {
    auto [it, fresh] = index.emplace(m, needed.size());
    if (fresh) needed.push_back(m);
    return it->second;
  };
  std::vector<size_t> mono_idx;
  for (const auto& m : monomials) mono_idx.push_back(idx_of(m));
  struct PairIdx {
    size_t a, b, ab;
  };
  std::vector<PairIdx> pair_idx;
  for (const auto& [a, b] : pairs) {
    Monomial ab = a;
    for (const auto& [site, exp] : b) ab[site] += exp;
    pair_idx.push_back({idx_of(a), idx_of(b), idx_of(ab)});
  }

  std::vector<double> vals = system.expectation_many(needed);

  GksReport rep;
  rep.tol = tol;
  rep.worst = std::numeric_limits<double>::infinity();
  auto push = [&](const std::string& label, double value, double scale) {
    bool ok = value >= -tol * std::max(1.0, scale);
    rep.rows.push_back({label, value, ok});
    rep.all_ok = rep.all_ok && ok;
    if (value < rep.worst) {
      rep.worst = value;
      rep.worst_label = label;
    }
  };
  for (size_t i = 0; i < monomials.size(); ++i)
    push("<" + monomial_str(monomials[i]) + ">", vals[mono_idx[i]],
         std::abs(vals[mono_idx[i]]));
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pair_idx[i];
    double cov = vals[p.ab] - vals[p.a] * vals[p.b];
    push("cov(" + monomial_str(pairs[i].first) + ";" + monomial_str(pairs[i].second) + ")",
         cov, std::max(std::abs(vals[p.ab]), std::abs(vals[p.a] * vals[p.b])));
  }
  if (rep.rows.empty()) rep.worst = 0.0;
  return rep;
}

DominationReport domination_check(const EvenMeasure& lower, const EvenMeasure& upper,
                                  const Interaction& interaction,
                                  const std::vector<Monomial>& monomials,
                                  double tol, unsigned dvector_cells) {
  GibbsSystem low_sys(interaction, lower, dvector_cells);
  GibbsSystem up_sys(interaction, upper, dvector_cells);
  std::vector<double> lv = low_sys.expectation_many(monomials);
  std::vector<double> uv = up_sys.expectation_many(monomials);

  DominationReport rep;
  rep.lower_label = low_sys.site_measure().label;
  rep.upper_label = up_sys.site_measure().label;
  rep.tol = tol;
  rep.worst_slack = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < monomials.size(); ++i) {
    double slack = uv[i] - lv[i];
    bool ok = slack >= -tol;
    rep.rows.push_back({monomial_str(monomials[i]), lv[i], uv[i], slack, ok});
    rep.all_ok = rep.all_ok && ok;
    if (slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.worst_monomial = monomial_str(monomials[i]);
    }
  }
  if (rep.rows.empty()) rep.worst_slack = 0.0;
  return rep;
}

GinibreReport ginibre_g2_check(const EvenMeasure& mu, unsigned k_max, double tol) {
  if (mu.kind != MeasureKind::Atomic)
    throw std::invalid_argument("duplicate-variable check needs an atomic measure");
  std::vector<Value> xs, ws;
  for (const Atom& a : mu.atoms) {
    if (a.t.is_zero()) {
      xs.push_back(a.t);
      ws.push_back(a.w);
    } else {
      xs.push_back(a.t);
      ws.push_back(a.w / Value(2));
      xs.push_back(-a.t);
      ws.push_back(a.w / Value(2));
    }
  }

  GinibreReport rep;
  rep.measure = mu.label;
  rep.k_max = k_max;
  rep.exact = mu.exact;
  rep.tol = tol;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned m = 0; m <= k_max; ++m) {
      Value sum(0);
      for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < xs.size(); ++j)
          sum += ws[i] * ws[j] * (xs[i] + xs[j]).pow(k) * (xs[i] - xs[j]).pow(m);
      GinibreEntry e;
      e.k = k;
      e.m = m;
      e.value = sum;
      e.must_vanish = (m % 2 == 1) || ((k + m) % 2 == 1);
      if (e.must_vanish)
        e.ok = rep.exact ? sum.is_zero() : std::abs(sum.as_double()) <= tol;
      else
        e.ok = rep.exact ? sum.sign() >= 0 : sum.as_double() >= -tol;
      rep.all_ok = rep.all_ok && e.ok;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

ScalingReport scaling_check(const Interaction& interaction, const EvenMeasure& base,
                            const Value& s, const std::vector<Monomial>& monomials,
                            double tol, unsigned dvector_cells) {
  if (!interaction.pair_only())
    throw std::invalid_argument("scaling identity requires pair interactions only");
  if (s.sign() <= 0) throw std::invalid_argument("scale factor must be positive");

  EvenMeasure atomic_base = base.kind == MeasureKind::DVector
                                ? discretize(base, static_cast<int>(dvector_cells))
                                : base;
  double sd = s.as_double();
  GibbsSystem lhs_sys(interaction, scale(atomic_base, s), dvector_cells);
  Interaction cooled = interaction;
  cooled.temperature = interaction.temperature / (sd * sd);
  GibbsSystem rhs_sys(cooled, atomic_base, dvector_cells);

  std::vector<double> lhs = lhs_sys.expectation_many(monomials);
  std::vector<double> rhs_base = rhs_sys.expectation_many(monomials);

  ScalingReport rep;
  rep.measure = atomic_base.label;
  rep.s = s;
  rep.tol = tol;
  for (size_t i = 0; i < monomials.size(); ++i) {
    double rhs = std::pow(sd, monomial_degree(monomials[i])) * rhs_base[i];
    double rel = std::abs(lhs[i] - rhs) / std::max({1.0, std::abs(lhs[i]), std::abs(rhs)});
    bool ok = rel <= tol;
    rep.rows.push_back({monomial_str(monomials[i]), lhs[i], rhs, rel, ok});
    rep.all_ok = rep.all_ok && ok;
    rep.worst_rel = std::max(rep.worst_rel, rel);
  }
  return rep;
}

// ---- templates, ensembles ----------------------------------------------------

std::vector<std::pair<int, int>> template_edges(const std::string& name, int& sites) {
  if (name == "path2") {
    sites = 2;
    return {{0, 1}};
  }
  if (name == "path3") {
    sites = 3;
    return {{0, 1}, {1, 2}};
  }
  if (name == "path4") {
    sites = 4;
    return {{0, 1}, {1, 2}, {2, 3}};
  }
  if (name == "ring3" || name == "complete3") {
    sites = 3;
    return {{0, 1}, {1, 2}, {0, 2}};
  }
  if (name == "ring4") {
    sites = 4;
    return {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  }
  if (name == "complete4") {
    sites = 4;
    return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  }
  throw std::invalid_argument("unknown template '" + name +
                              "' (path2..path4, ring3, ring4, complete3, complete4)");
}

std::vector<std::string> template_names() {
  return {"path2", "path3", "path4", "ring3", "ring4", "complete3", "complete4"};
}

std::vector<Monomial> monomials_up_to_degree(int sites, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int site, int remaining) {
    if (site == sites) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    rec(site + 1, remaining);
    for (int e = 1; e <= remaining; ++e) {
      cur[site] = e;
      rec(site + 1, remaining - e);
    }
    cur.erase(site);
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<std::pair<Monomial, Monomial>> default_gks_pairs(int sites) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (int i = 0; i < sites; ++i)
    for (int j = i; j < sites; ++j)
      out.emplace_back(Monomial{{i, 1}}, Monomial{{j, 1}});
  std::vector<Monomial> doubles;
  for (int i = 0; i < sites; ++i)
    for (int j = i + 1; j < sites; ++j)
      doubles.push_back(Monomial{{i, 1}, {j, 1}});
  for (size_t a = 0; a < doubles.size(); ++a)
    for (size_t b = a + 1; b < doubles.size(); ++b)
      out.emplace_back(doubles[a], doubles[b]);
  return out;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t trial_seed(uint64_t base_seed, uint64_t trial) {
  uint64_t state = base_seed + (trial + 1) * 0x9E3779B97F4A7C15ull;
  splitmix64(state);
  return splitmix64(state);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Interaction random_interaction(const std::string& template_name, uint64_t seed,
                               const EnsembleOptions& opt) {
  int sites = 0;
  auto edges = template_edges(template_name, sites);
  std::mt19937_64 gen(seed);
  Interaction inter;
  inter.sites = sites;
  inter.temperature = opt.temperature;
  for (const auto& [a, b] : edges)
    inter.terms.push_back({Monomial{{a, 1}, {b, 1}}, uniform01(gen)});
  if (opt.odd_fields)
    for (int j = 0; j < sites; ++j)
      inter.terms.push_back({Monomial{{j, 1}}, uniform01(gen)});
  if (opt.even_singles)
    for (int j = 0; j < sites; ++j)
      inter.terms.push_back({Monomial{{j, 2}}, uniform01(gen)});
  inter.validate();
  return inter;
}

namespace {

struct TrialOutcome {
  double worst = 0.0;
  std::string detail;
  bool ok = true;
};

EnsembleReport reduce_trials(std::string kind, std::string template_name,
                             const EnsembleOptions& opt,
                             const std::vector<TrialOutcome>& outs) {
  EnsembleReport rep;
  rep.kind = std::move(kind);
  rep.template_name = std::move(template_name);
  rep.trials = opt.trials;
  rep.seed = opt.seed;
  rep.worst = std::numeric_limits<double>::infinity();
  for (size_t t = 0; t < outs.size(); ++t) {
    if (outs[t].worst < rep.worst) {
      rep.worst = outs[t].worst;
      rep.worst_detail = outs[t].detail;
      rep.worst_trial = static_cast<unsigned>(t);
    }
    if (!outs[t].ok) ++rep.failures;
  }
  rep.all_ok = rep.failures == 0;
  if (outs.empty()) rep.worst = 0.0;
  return rep;
}

}  // namespace

EnsembleReport domination_ensemble(const EvenMeasure& lower, const EvenMeasure& upper,
                                   const std::string& template_name,
                                   const EnsembleOptions& opt) {
  int sites = 0;
  template_edges(template_name, sites);
  auto monos = monomials_up_to_degree(sites, opt.max_degree);
  std::vector<TrialOutcome> outs(opt.trials);
  parallel_blocks(opt.trials, [&](size_t t) {
    Interaction inter = random_interaction(template_name, trial_seed(opt.seed, t), opt);
    DominationReport r =
        domination_check(lower, upper, inter, monos, opt.tol, opt.dvector_cells);
    outs[t] = {r.worst_slack, r.worst_monomial, r.all_ok};
  });
  return reduce_trials("domination", template_name, opt, outs);
}

EnsembleReport gks_ensemble(const EvenMeasure& mu, const std::string& template_name,
                            const EnsembleOptions& opt) {
  int sites = 0;
  template_edges(template_name, sites);
  auto monos = monomials_up_to_degree(sites, opt.max_degree);
  auto pairs = default_gks_pairs(sites);
  std::vector<TrialOutcome> outs(opt.trials);
  parallel_blocks(opt.trials, [&](size_t t) {
    Interaction inter = random_interaction(template_name, trial_seed(opt.seed, t), opt);
    GibbsSystem sys(inter, mu, opt.dvector_cells);
    GksReport r = gks_check(sys, monos, pairs, opt.tol);
    outs[t] = {r.worst, r.worst_label, r.all_ok};
  });
  return reduce_trials("gks", template_name, opt, outs);
}

}  // namespace wellscmp
