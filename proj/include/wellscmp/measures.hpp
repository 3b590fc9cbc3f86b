#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wellscmp/value.hpp"

namespace wellscmp {

/// Atom of an even measure: total mass w sitting at +-t (split evenly when
/// t > 0, all of it at the origin when t == 0).
struct Atom {
  Value t;
  Value w;
};

enum class MeasureKind { Atomic, DVector };

/// Even probability measure on the line. Either a finite list of symmetric
/// atoms or the single-coordinate distribution of a unit D-vector, kept
/// symbolic so its moments stay exact.
struct EvenMeasure {
  MeasureKind kind = MeasureKind::Atomic;
  std::vector<Atom> atoms;  // t strictly increasing, t >= 0, w > 0, sum w == 1
  int dim = 0;              // DVector only, D >= 2
  bool exact = true;
  std::string label;

  static EvenMeasure atomic(std::vector<Atom> atoms, std::string label = "");
  static EvenMeasure dvector(int D);
};

/// Parsed description of a measure, before construction. Inline syntax:
///   bernoulli:T | three_point:L | spin:S | spin:S:unnormalized |
///   dvector:D | atoms:t,w;t,w;... | scaled:s:SPEC
/// Numbers accept fractions ("3/2") and decimals; both parse exactly.
struct MeasureSpec {
  enum class Type { Bernoulli, ThreePoint, Spin, DVector, Atoms, Scaled };
  Type type = Type::Bernoulli;

  Value T;                  // bernoulli: T > 0
  Value lambda;             // three_point: 0 < lambda <= 1
  Rat S{0};                 // spin: 2S a positive integer
  bool normalized = true;   // spin: support {k/S} vs {k}
  int D = 0;                // dvector: D >= 2
  std::vector<Atom> atom_list;
  Value s;                  // scaled: s > 0
  std::shared_ptr<MeasureSpec> base;

  static MeasureSpec parse(const std::string& text);
  static MeasureSpec from_json_text(const std::string& json_text);
  std::string describe() const;
};

EvenMeasure make_measure(const MeasureSpec& spec);

/// k-th moment; exactly zero for odd k. DVector moments use the closed form
/// m_{2j} = prod_{i=1..j} (2i-1)/(D+2i-2).
Value moment(const EvenMeasure& mu, unsigned k);

/// Moments 0..k_max in one pass (atomic powers are built incrementally).
std::vector<Value> moment_table(const EvenMeasure& mu, unsigned k_max);

/// Pushforward under x -> s*x, s > 0. A DVector measure is discretized
/// (64 cells) first since its scaled law has no symbolic form here.
EvenMeasure scale(const EvenMeasure& mu, const Value& s);

/// Replace a DVector measure by cells/2 equal-width cells on [0,1], one atom
/// per cell at the cell's probability-weighted centroid. Atomic measures
/// pass through unchanged. cells must be even and >= 2.
EvenMeasure discretize(const EvenMeasure& mu, int cells);

Value support_sup(const EvenMeasure& mu);

/// Same atoms with every coordinate demoted to double.
EvenMeasure to_float(const EvenMeasure& mu);

}  // namespace wellscmp
