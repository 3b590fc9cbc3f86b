#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wellscmp/measures.hpp"
#include "wellscmp/value.hpp"

namespace wellscmp {

/// site -> exponent, exponents >= 1.
using Monomial = std::map<int, int>;

Monomial parse_monomial(const std::string& text);  // "0:1,1:2"
std::string monomial_str(const Monomial& m);
int monomial_degree(const Monomial& m);

struct InteractionTerm {
  Monomial exps;
  double J = 0.0;
};

/// Ferromagnetic Hamiltonian -H = sum_A J(A) sigma^A with couplings applied
/// as J/temperature.
struct Interaction {
  int sites = 0;
  double temperature = 1.0;
  std::vector<InteractionTerm> terms;

  void validate() const;
  bool pair_only() const;
  static Interaction from_json_text(const std::string& text);
};

/// Finite product state over one even site measure, enumerated exactly.
/// Continuous site measures are discretized up front (cell count recorded).
class GibbsSystem {
 public:
  static constexpr double kMaxConfigs = 1e7;

  GibbsSystem(Interaction interaction, const EvenMeasure& site_measure,
              unsigned dvector_cells = 16);

  const Interaction& interaction() const { return interaction_; }
  const EvenMeasure& site_measure() const { return site_measure_; }
  unsigned discretize_cells() const { return discretize_cells_; }
  size_t signed_atom_count() const { return points_.size(); }
  double config_count() const;

  double partition_function() const;
  double expectation(const Monomial& a) const;
  /// One enumeration pass for many observables.
  std::vector<double> expectation_many(const std::vector<Monomial>& monomials) const;

 private:
  Interaction interaction_;
  EvenMeasure site_measure_;
  unsigned discretize_cells_ = 0;
  std::vector<double> points_;   // signed support
  std::vector<double> weights_;  // per-point mass

  friend struct EnumPass;
};

struct GksRow {
  std::string label;
  double value = 0.0;
  bool ok = false;
};

struct GksReport {
  double tol = 1e-10;
  std::vector<GksRow> rows;
  double worst = 0.0;
  std::string worst_label;
  bool all_ok = true;
};

/// Positivity of expectations and covariances: <s^A> >= -tol and
/// <s^A s^B> - <s^A><s^B> >= -tol (tolerance relative to the magnitudes
/// entering each row).
GksReport gks_check(const GibbsSystem& system, const std::vector<Monomial>& monomials,
                    const std::vector<std::pair<Monomial, Monomial>>& pairs,
                    double tol = 1e-10);

struct DominationRow {
  std::string monomial;
  double lower_value = 0.0;
  double upper_value = 0.0;
  double slack = 0.0;  // upper - lower
  bool ok = false;
};

struct DominationReport {
  std::string lower_label, upper_label;
  double tol = 1e-10;
  std::vector<DominationRow> rows;
  double worst_slack = 0.0;
  std::string worst_monomial;
  bool all_ok = true;
};

/// Correlation ordering under one shared interaction: every requested
/// <s^A> must be at least as large for the upper measure.
DominationReport domination_check(const EvenMeasure& lower, const EvenMeasure& upper,
                                  const Interaction& interaction,
                                  const std::vector<Monomial>& monomials,
                                  double tol = 1e-10, unsigned dvector_cells = 16);

struct GinibreEntry {
  unsigned k = 0, m = 0;
  Value value;
  bool must_vanish = false;
  bool ok = false;
};

struct GinibreReport {
  std::string measure;
  unsigned k_max = 0;
  bool exact = true;
  double tol = 1e-12;
  std::vector<GinibreEntry> entries;
  bool all_ok = true;
};

/// Duplicate-variable positivity over mu x mu by direct double summation:
/// integral of (x+y)^k (x-y)^m vanishes for odd m or odd k+m, and is
/// nonnegative for even k, even m.
GinibreReport ginibre_g2_check(const EvenMeasure& mu, unsigned k_max,
                               double tol = 1e-12);

struct ScalingRow {
  std::string monomial;
  double lhs = 0.0;  // <s^A> at (scaled measure, T)
  double rhs = 0.0;  // s^deg <s^A> at (base, T/s^2)
  double rel_err = 0.0;
  bool ok = false;
};

struct ScalingReport {
  std::string measure;
  Value s;
  double tol = 1e-10;
  std::vector<ScalingRow> rows;
  double worst_rel = 0.0;
  bool all_ok = true;
};

/// Rescaling a pair-interaction system: magnitudes by s on the measure side
/// equals temperature by s^2 plus the s^degree prefactor. Throws on non-pair
/// terms.
ScalingReport scaling_check(const Interaction& interaction, const EvenMeasure& base,
                            const Value& s, const std::vector<Monomial>& monomials,
                            double tol = 1e-10, unsigned dvector_cells = 16);

// ---- interaction templates and seeded ensembles -----------------------------

/// path2..path4, ring3, ring4, complete3, complete4.
std::vector<std::pair<int, int>> template_edges(const std::string& name, int& sites);
std::vector<std::string> template_names();

/// All monomials with total degree in [1, max_degree] on the given sites.
std::vector<Monomial> monomials_up_to_degree(int sites, int max_degree);

/// Covariance pair set: singles x singles plus distinct two-site products.
std::vector<std::pair<Monomial, Monomial>> default_gks_pairs(int sites);

uint64_t splitmix64(uint64_t& state);
uint64_t trial_seed(uint64_t base_seed, uint64_t trial);
double uniform01(std::mt19937_64& gen);  // 53-bit mantissa draw

struct EnsembleOptions {
  unsigned trials = 100;
  uint64_t seed = 42;
  double temperature = 1.0;
  bool odd_fields = true;    // uniform [0,1] single-site sigma_j terms
  bool even_singles = false;  // uniform [0,1] sigma_j^2 terms
  int max_degree = 2;
  double tol = 1e-10;
  unsigned dvector_cells = 16;
};

/// Edge couplings (and optional site terms) drawn uniform on [0,1].
Interaction random_interaction(const std::string& template_name, uint64_t seed,
                               const EnsembleOptions& opt);

struct EnsembleReport {
  std::string kind;  // "domination" | "gks"
  std::string template_name;
  unsigned trials = 0;
  uint64_t seed = 0;
  double worst = 0.0;
  std::string worst_detail;
  unsigned worst_trial = 0;
  unsigned failures = 0;
  bool all_ok = true;
};

EnsembleReport domination_ensemble(const EvenMeasure& lower, const EvenMeasure& upper,
                                   const std::string& template_name,
                                   const EnsembleOptions& opt);

EnsembleReport gks_ensemble(const EvenMeasure& mu, const std::string& template_name,
                            const EnsembleOptions& opt);

}  // namespace wellscmp
