#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wellscmp/value.hpp"

namespace wellscmp {

/// Per-parameter sign certificate over a range of odd powers 2m+1.
struct FamilyCertificate {
  std::string family;     // "spin" | "dvector" | "power_analog"
  std::string parameter;  // "S=3/2", "D=4", "p=1.2,S=10"
  std::vector<unsigned> checked_powers;  // the m values
  std::vector<Value> values;             // aligned with checked_powers
  bool all_zero = false;
  bool all_nonneg = false;
  bool strictly_negative_tail = false;  // < 0 for every m >= 1 (the S=1 case)
  std::optional<unsigned> first_violation_m;  // first m with value < 0
};

/// a_S = (S+1)/(3S) when normalized, A_S = S(S+1)/3 otherwise. Cross-checked
/// internally by direct summation over the 2S+1 points.
Rat spin_second_moment(const Rat& S, bool normalized = true);

/// Integer sum over j = -S..S of (3j^2 - S(S+1))^(2m+1). For half-odd S the
/// k = 2j substitution is used: sum over odd k in [-2S, 2S] of
/// (3k^2 - 2S(2S+2))^(2m+1), equal to 4^(2m+1) times the j-grid sum, so the
/// sign is unchanged.
BigInt spin_odd_sum(const Rat& S, unsigned m);

std::vector<FamilyCertificate> verify_spin_canonical(const std::vector<Rat>& S_list,
                                                     unsigned m_max);

Rat dvector_moment(int D, unsigned k);

/// Exact value of the integral of (x^2 - 1/D)^(2m+1) against the D-vector
/// component measure. Zero for D = 2, strictly positive for D >= 3, m >= 1.
Rat dvector_odd_expectation(int D, unsigned m);

std::vector<FamilyCertificate> verify_dvector_canonical(int D_max, unsigned m_max);

/// Exploratory |j|^p analog of the spin sum, double precision:
/// sum over j = -S..S of (3(|j|^p - avg))^(2m+1) with avg chosen so m = 0
/// vanishes. p = 2 reproduces spin_odd_sum numerically.
double power_analog_sum(double p, const Rat& S, unsigned m);

struct PowerAnalogRow {
  unsigned m;
  double value;
  int sign;            // -1 / 0 / +1 after the indeterminacy guard
  bool indeterminate;  // |sum| < 1e-9 * max |term|
};

struct PowerAnalogReport {
  double p;
  Rat S;
  std::vector<PowerAnalogRow> rows;
  bool low_exponent_regime;  // p < 3/2, where the averaging gate can fail
};

PowerAnalogReport power_analog_table(double p, const Rat& S, unsigned m_max);

/// Margins of the two averaging gates used for the integral-spin route,
/// as polynomial identities in S:
///   gate one:  2S^2 + 2 - 5 A_S    = (S-2)(S-3)/3
///   gate two:  A_S - ((S+1)/2)^2   = (S+1)(S-3)/12, used for odd S
Rat spin_gate_one_margin(long S);
Rat spin_gate_two_margin(long S);

}  // namespace wellscmp
