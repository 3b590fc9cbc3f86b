#include "wellscmp/canonical_families.hpp"

#include <cmath>
#include <stdexcept>

namespace wellscmp {

static long two_s(const Rat& S) {
  Rat t = S * 2;
  if (t.get_den() != 1 || t <= 0)
    throw std::invalid_argument("S must be a positive half-integer");
  if (!t.get_num().fits_slong_p())
    throw std::invalid_argument("S out of range");
  return t.get_num().get_si();
}

Rat spin_second_moment(const Rat& S, bool normalized) {
  long p = two_s(S);
  Rat closed = normalized ? make_rat(BigInt(p + 2), BigInt(3 * p))
                          : make_rat(BigInt(p * (p + 2)), BigInt(12));
  // the same value summed over the 2S+1 equally spaced points
  Rat direct(0);
  if (p % 2 == 0) {
    for (long k = 1; k <= p / 2; ++k) direct += Rat(2) * Rat(k) * Rat(k);
  } else {
    for (long k = 1; k <= p; k += 2)
      direct += Rat(2) * make_rat(BigInt(k * k), BigInt(4));
  }
  direct /= p + 1;
  if (!normalized && Rat(direct) != closed)
    throw std::logic_error("spin second moment mismatch");
  if (normalized && Rat(direct / (S * S)) != closed)
    throw std::logic_error("spin second moment mismatch");
  return closed;
}

BigInt spin_odd_sum(const Rat& S, unsigned m) {
  long p = two_s(S);
  unsigned long e = 2 * m + 1;
  BigInt total = 0;
  if (p % 2 == 0) {
    long s = p / 2;
    total = int_pow(BigInt(-s * (s + 1)), e);  // j = 0 term
    for (long j = 1; j <= s; ++j)
      total += 2 * int_pow(BigInt(3 * j * j - s * (s + 1)), e);
  } else {
    for (long k = 1; k <= p; k += 2)
      total += 2 * int_pow(BigInt(3 * k * k - p * (p + 2)), e);
  }
  return total;
}

static FamilyCertificate certify(std::string family, std::string parameter,
                                 std::vector<Value> values) {
  FamilyCertificate cert;
  cert.family = std::move(family);
  cert.parameter = std::move(parameter);
  cert.values = std::move(values);
  cert.all_zero = true;
  cert.all_nonneg = true;
  cert.strictly_negative_tail = cert.values.size() > 1;
  for (unsigned m = 0; m < cert.values.size(); ++m) {
    cert.checked_powers.push_back(m);
    int s = cert.values[m].sign();
    if (s != 0) cert.all_zero = false;
    if (s < 0) {
      cert.all_nonneg = false;
      if (!cert.first_violation_m) cert.first_violation_m = m;
    }
    if (m >= 1 && s >= 0) cert.strictly_negative_tail = false;
  }
  return cert;
}

std::vector<FamilyCertificate> verify_spin_canonical(const std::vector<Rat>& S_list,
                                                     unsigned m_max) {
  std::vector<FamilyCertificate> out;
  for (const Rat& S : S_list) {
    std::vector<Value> values;
    for (unsigned m = 0; m <= m_max; ++m)
      values.push_back(Value(Rat(spin_odd_sum(S, m))));
    out.push_back(certify("spin", "S=" + Value(S).str(), std::move(values)));
  }
  return out;
}

Rat dvector_moment(int D, unsigned k) {
  if (D < 2) throw std::invalid_argument("dvector needs D >= 2");
  if (k % 2 == 1) return Rat(0);
  Rat m(1);
  for (unsigned i = 1; i <= k / 2; ++i)
    m *= make_rat(BigInt(2 * i - 1), BigInt(D + 2 * i - 2));
  return m;
}

Rat dvector_odd_expectation(int D, unsigned m) {
  unsigned n = 2 * m + 1;
  Rat total(0);
  Rat pw(1);  // (-1/D)^(n-k), k descending
  Rat minus_inv_d = make_rat(BigInt(-1), BigInt(D));
  for (unsigned k = n + 1; k-- > 0;) {
    total += Rat(binomial(n, k)) * dvector_moment(D, 2 * k) * pw;
    pw *= minus_inv_d;
  }
  return total;
}

std::vector<FamilyCertificate> verify_dvector_canonical(int D_max, unsigned m_max) {
  if (D_max < 2) throw std::invalid_argument("dvector needs D >= 2");
  std::vector<FamilyCertificate> out;
  for (int D = 2; D <= D_max; ++D) {
    std::vector<Value> values;
    for (unsigned m = 0; m <= m_max; ++m)
      values.push_back(Value(dvector_odd_expectation(D, m)));
    out.push_back(certify("dvector", "D=" + std::to_string(D), std::move(values)));
  }
  return out;
}

static std::vector<double> analog_terms(double p, const Rat& S) {
  long twoS = two_s(S);
  std::vector<double> mags;  // |j| over half the grid
  if (twoS % 2 == 0) {
    for (long k = 0; k <= twoS / 2; ++k) mags.push_back(k);
  } else {
    for (long k = 1; k <= twoS; k += 2) mags.push_back(k / 2.0);
  }
  std::vector<double> vals;
  double avg = 0;
  for (size_t i = 0; i < mags.size(); ++i) {
    double v = std::pow(mags[i], p);
    vals.push_back(v);
    avg += v * (mags[i] == 0 ? 1 : 2);
  }
  avg /= twoS + 1;
  for (auto& v : vals) v = 3 * (v - avg);
  return vals;  // one entry per magnitude; 0 magnitude counts once, others twice
}

double power_analog_sum(double p, const Rat& S, unsigned m) {
  if (!(p > 1)) throw std::invalid_argument("power analog needs p > 1");
  auto vals = analog_terms(p, S);
  bool has_zero = two_s(S) % 2 == 0;
  double sum = 0;
  for (size_t i = 0; i < vals.size(); ++i) {
    double t = std::pow(vals[i], 2.0 * m) * vals[i];
    sum += (has_zero && i == 0) ? t : 2 * t;
  }
  return sum;
}

PowerAnalogReport power_analog_table(double p, const Rat& S, unsigned m_max) {
  if (!(p > 1)) throw std::invalid_argument("power analog needs p > 1");
  auto vals = analog_terms(p, S);
  double vmax = 0;
  for (double v : vals) vmax = std::max(vmax, std::abs(v));

  PowerAnalogReport rep;
  rep.p = p;
  rep.S = S;
  rep.low_exponent_regime = p < 1.5;
  for (unsigned m = 0; m <= m_max; ++m) {
    double sum = power_analog_sum(p, S, m);
    double max_term = std::pow(vmax, 2.0 * m) * vmax;
    PowerAnalogRow row{m, sum, 0, false};
    row.indeterminate = std::abs(sum) < 1e-9 * max_term;
    if (!row.indeterminate) row.sign = sum > 0 ? 1 : sum < 0 ? -1 : 0;
    rep.rows.push_back(row);
  }
  return rep;
}

Rat spin_gate_one_margin(long S) {
  if (S < 1) throw std::invalid_argument("gate margins need integral S >= 1");
  return Rat(2 * S * S + 2) - make_rat(BigInt(5 * S * (S + 1)), BigInt(3));
}

Rat spin_gate_two_margin(long S) {
  if (S < 1) throw std::invalid_argument("gate margins need integral S >= 1");
  return make_rat(BigInt(S * (S + 1)), BigInt(3)) -
         make_rat(BigInt((S + 1) * (S + 1)), BigInt(4));
}

}  // namespace wellscmp
