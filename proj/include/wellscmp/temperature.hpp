#pragma once

#include <optional>
#include <string>

#include "wellscmp/measures.hpp"
#include "wellscmp/value.hpp"

namespace wellscmp {

/// Transition-temperature bookkeeping. Everything is a coefficient of the
/// (symbolic) nearest-neighbour Ising T_c at the same couplings; no critical
/// temperature is ever computed.
struct TemperatureBounds {
  std::string measure;
  Value second_moment;
  Value t_minus_sq;    // lower-bound coefficient, exact for closed-form families
  Value t_plus_sq;
  Value lower_factor;  // alias of t_minus_sq in reports
  bool canonical = false;
  bool t_minus_exact = false;
  unsigned cutoff = 0;  // odd-power cutoff when the numeric pipeline was used
  std::optional<Value> mean_field_tc;
  std::optional<Value> griffiths_factor;
  std::optional<Value> improvement_ratio;       // lower_factor / griffiths_factor
  std::optional<Value> improvement_vs_quarter;  // lower_factor / (1/4), same units
};

/// <x^2>_mu times the coupling sum.
Value mean_field_tc(const EvenMeasure& mu, const Value& coupling_sum);

/// (S+1)/(3S) for S != 1, 1/2 for S = 1 (normalized spin convention).
Rat spin_lower_factor(const Rat& S);

/// Classic spin-family factor: 1/4 for integral S, ((k+1)/(2k+1))^2 for
/// S = k + 1/2.
Rat spin_griffiths_factor(const Rat& S);

/// Closed-form lower factors where the family admits one (spin, uniform
/// D-vector, three-point, two-point, scaled versions thereof); otherwise the
/// odd-power bisection estimate with the cutoff recorded.
TemperatureBounds bound_report(const MeasureSpec& spec, unsigned cutoff = 101,
                               std::optional<Value> coupling_sum = std::nullopt);

}  // namespace wellscmp
