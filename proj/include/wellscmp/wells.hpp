#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wellscmp/measures.hpp"

namespace wellscmp {

enum class Verdict { Dominates, Violated, Inconclusive };
std::string verdict_name(Verdict v);

struct WellsEntry {
  unsigned n, m;
  Value value;
};

/// Finite-degree domination certificate: entries cover the odd (n, m) grid
/// with n <= m and n + m <= 2 * max_degree. "dominates" means every entry is
/// nonnegative up to that degree, never a proof for all degrees.
struct WellsReport {
  std::string upper_label, lower_label;
  unsigned max_degree = 12;
  double tol = 1e-9;
  bool exact = true;
  std::vector<WellsEntry> entries;
  Value min_slack;
  unsigned worst_n = 0, worst_m = 0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Integral of (x+y)^n (x-y)^m with x from `upper` (the candidate dominant
/// measure) and y from `lower`, by binomial expansion into moments.
/// Exactly zero when n + m is odd.
Value wells_integral(const EvenMeasure& upper, const EvenMeasure& lower,
                     unsigned n, unsigned m);

WellsReport wells_dominates(const EvenMeasure& upper, const EvenMeasure& lower,
                            unsigned max_degree = 12, double tol = 1e-9);

/// Integral of (x^2 - s2)^n against mu, n odd. Takes the squared threshold so
/// irrational thresholds with rational squares stay exact.
Value odd_moment_gap(const EvenMeasure& mu, const Value& s2, unsigned n);

/// Supremum of the support. Rejects the point mass at zero, which has no
/// comparison thresholds.
Value t_plus(const EvenMeasure& mu);

struct PowerRoot {
  unsigned n;
  double s;             // root of S -> gap(mu, S^2, n), accurate to tol
  Value s_sq_low;       // bracket end with gap >= 0, a certified lower bound
  bool at_support_sup;  // gap at T_+^2 is already >= 0, s == T_+ exactly
};

struct TMinusReport {
  std::string label;
  unsigned cutoff = 101;
  double tol = 1e-9;
  std::vector<PowerRoot> roots;  // one per odd n <= cutoff
  double estimate = 0.0;         // min over roots; reported from the certified side
  unsigned argmin_n = 1;
  bool stabilized = false;  // estimate moved < tol over the last two cutoff steps
};

/// Threshold estimate via per-power bisection on S^2 (rational midpoints in
/// exact mode). The estimate is an upper bound on the true threshold up to
/// tol and is non-increasing in cutoff.
TMinusReport t_minus(const EvenMeasure& mu, unsigned cutoff = 101,
                     double tol = 1e-9);

struct ThreePointThreshold {
  Rat t_minus_sq;  // lambda if lambda <= 1/2, else 1/2
  double t_minus;
};

ThreePointThreshold t_minus_three_point(const Rat& lambda);

struct CanonicalGap {
  unsigned m;  // gap value is the integral of (x^2 - <x^2>)^(2m+1)
  Value gap;
};

struct CanonicalReport {
  std::string label;
  Value second_moment;
  std::vector<CanonicalGap> gaps;
  bool canonical = false;
  std::optional<unsigned> first_negative_m;
  bool exact = true;
  double tol = 1e-12;
};

/// Checks the equality case T_-^2 = <x^2> through the odd gap integrals at
/// the measure's own second moment, up to power 2*m_max+1.
CanonicalReport canonical_check(const EvenMeasure& mu, unsigned m_max = 25,
                                double tol = 1e-12);

}  // namespace wellscmp
