#pragma once

// Reference computations for the test suite, kept deliberately on different
// algebraic routes than the library: brute-force double sums instead of
// moment expansion, binomial power sums instead of direct odd-power
// evaluation, adaptive quadrature instead of closed-form moment products,
// and a plain nested-loop Gibbs enumerator with no streaming rescale.

#include <random>
#include <utility>
#include <vector>

#include "wellscmp/gibbs.hpp"
#include "wellscmp/measures.hpp"
#include "wellscmp/value.hpp"

namespace oracles {

using wellscmp::BigInt;
using wellscmp::EvenMeasure;
using wellscmp::Interaction;
using wellscmp::Monomial;
using wellscmp::Rat;
using wellscmp::Value;

// Signed expansion of an atomic measure: (+t, w/2), (-t, w/2), or (0, w).
std::vector<std::pair<Value, Value>> signed_points(const EvenMeasure& mu);

// Integral of (x+y)^n (x-y)^m over upper x lower by direct double summation.
Value bf_wells(const EvenMeasure& upper, const EvenMeasure& lower, unsigned n,
               unsigned m);

// k-th moment of the D-vector component law by adaptive Gauss-Kronrod on
// the x = sin(theta) form of the density integral.
double quad_dvector_moment(int D, unsigned k);

// Exact moment for odd D >= 3: the density exponent (D-3)/2 is an integer,
// so both integrals expand into alternating sums of reciprocals.
Rat binom_dvector_moment(int D, unsigned k);

// D = 3 odd gap by direct polynomial integration over the uniform density:
// integral over [0,1] of (x^2 - 1/3)^(2m+1).
Rat uniform_odd_gap_d3(unsigned m);

// Spin grid sum of (3j^2 - S(S+1))^(2m+1) via binomial expansion into even
// power sums of the grid (odd-integer grid for half-odd S, matching the
// k = 2j substitution).
BigInt spin_sum_by_power_sums(const Rat& S, unsigned m);

// Closed-form root of the n-th odd-power gap for three_point(lambda):
// s_n^2 = 1 / (1 + ((1-lambda)/lambda)^(1/n)).
double three_point_root(double lambda, unsigned n);

// Tiny product-state enumerator: plain exp sums in long double, no block
// partition, no rescaling. Only for desk-size systems.
struct NaiveGibbs {
  Interaction inter;
  std::vector<double> pts, wts;

  double z() const;
  double expect(const Monomial& mono) const;
};

NaiveGibbs naive_gibbs(const Interaction& inter, const EvenMeasure& mu);

// Majorizing pair generator: y is a random nonnegative non-increasing
// rational vector; x is y after `transfers` moves of mass from a smaller
// entry to a larger one, so x majorizes y with equal totals.
std::pair<std::vector<Rat>, std::vector<Rat>> robin_hood_pair(std::mt19937_64& gen,
                                                              size_t n,
                                                              unsigned transfers);

// Random strictly increasing convex sequence psi(0..N) with nonnegative
// (strictly positive when strict) second differences.
std::vector<Rat> random_convex_psi(std::mt19937_64& gen, unsigned N, bool strict);

}  // namespace oracles
