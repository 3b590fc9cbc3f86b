#include "wellscmp/wells.hpp"

#include <cmath>
#include <stdexcept>

namespace wellscmp {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Dominates: return "dominates";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

static Value wells_entry(const std::vector<Value>& mu_up,
                         const std::vector<Value>& mu_lo, unsigned n,
                         unsigned m) {
  // sum over a,b of C(n,a) C(m,b) (-1)^(m-b) M_U(a+b) M_L(n+m-a-b);
  // odd-order moments vanish, so only a+b with the parity of n+m contribute.
  Value total(0);
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned b = 0; b <= m; ++b) {
      if ((a + b) % 2 != (n + m) % 2) continue;
      Value term = Value(Rat(binomial(n, a) * binomial(m, b))) *
                   mu_up[a + b] * mu_lo[n + m - a - b];
      if ((m - b) % 2 == 1) total -= term;
      else total += term;
    }
  }
  return total;
}

Value wells_integral(const EvenMeasure& upper, const EvenMeasure& lower,
                     unsigned n, unsigned m) {
  if ((n + m) % 2 == 1) return Value(0);
  auto mu_up = moment_table(upper, n + m);
  auto mu_lo = moment_table(lower, n + m);
  return wells_entry(mu_up, mu_lo, n, m);
}

WellsReport wells_dominates(const EvenMeasure& upper, const EvenMeasure& lower,
                            unsigned max_degree, double tol) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  WellsReport rep;
  rep.upper_label = upper.label;
  rep.lower_label = lower.label;
  rep.max_degree = max_degree;
  rep.tol = tol;
  rep.exact = upper.exact && lower.exact;

  auto mu_up = moment_table(upper, 2 * max_degree);
  auto mu_lo = moment_table(lower, 2 * max_degree);
  bool first = true;
  for (unsigned n = 1; 2 * n <= 2 * max_degree; n += 2) {
    for (unsigned m = n; n + m <= 2 * max_degree; m += 2) {
      Value v = wells_entry(mu_up, mu_lo, n, m);
      rep.entries.push_back({n, m, v});
      if (first || v < rep.min_slack) {
        rep.min_slack = v;
        rep.worst_n = n;
        rep.worst_m = m;
        first = false;
      }
    }
  }

  if (rep.min_slack.sign() >= 0) rep.verdict = Verdict::Dominates;
  else if (rep.exact || rep.min_slack.as_double() < -tol) rep.verdict = Verdict::Violated;
  else rep.verdict = Verdict::Inconclusive;
  return rep;
}

// gap from a precomputed moment table: sum over k of C(n,k) M(2k) (-s2)^(n-k)
static Value gap_from_table(const std::vector<Value>& moments, const Value& s2,
                            unsigned n) {
  Value total(0);
  Value pw(1);  // (-s2)^(n-k), k descending from n
  for (unsigned k = n + 1; k-- > 0;) {
    total += Value(Rat(binomial(n, k))) * moments[2 * k] * pw;
    pw = -(pw * s2);
  }
  return total;
}

Value odd_moment_gap(const EvenMeasure& mu, const Value& s2, unsigned n) {
  if (n % 2 == 0) throw std::invalid_argument("gap power must be odd");
  return gap_from_table(moment_table(mu, 2 * n), s2, n);
}

Value t_plus(const EvenMeasure& mu) {
  Value sup = support_sup(mu);
  if (sup.sign() == 0)
    throw std::invalid_argument("point mass at 0 has no comparison thresholds");
  return sup;
}

TMinusReport t_minus(const EvenMeasure& mu, unsigned cutoff, double tol) {
  if (cutoff % 2 == 0) throw std::invalid_argument("cutoff must be odd");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  Value sup = t_plus(mu);

  TMinusReport rep;
  rep.label = mu.label;
  rep.cutoff = cutoff;
  rep.tol = tol;

  auto moments = moment_table(mu, 2 * cutoff);
  Value sup_sq = sup * sup;
  double sup_d = std::sqrt(sup_sq.as_double());

  for (unsigned n = 1; n <= cutoff; n += 2) {
    PowerRoot root{n, 0.0, Value(0), false};
    if (gap_from_table(moments, sup_sq, n).sign() >= 0) {
      root.s = sup_d;
      root.s_sq_low = sup_sq;
      root.at_support_sup = true;
    } else {
      // gap(0) = M(2n) >= 0 and gap is non-increasing in S^2: bisect until
      // the bracket is tighter than tol in S units, report the certified
      // low end (gap >= 0 there).
      Value lo(0), hi = sup_sq;
      while (std::sqrt(hi.as_double()) - std::sqrt(lo.as_double()) > tol) {
        Value mid = (lo + hi) / Value(2);
        if (gap_from_table(moments, mid, n).sign() >= 0) lo = mid;
        else hi = mid;
      }
      root.s = std::sqrt(lo.as_double());
      root.s_sq_low = lo;
    }
    rep.roots.push_back(root);
  }

  auto prefix_min = [&](unsigned upto) {
    double best = rep.roots[0].s;
    unsigned arg = 1;
    for (const auto& r : rep.roots) {
      if (r.n > upto) break;
      if (r.s < best) {
        best = r.s;
        arg = r.n;
      }
    }
    return std::pair(best, arg);
  };
  auto [est, arg] = prefix_min(cutoff);
  rep.estimate = est;
  rep.argmin_n = arg;
  if (cutoff >= 5) {
    double prev2 = prefix_min(cutoff - 4).first;
    double prev1 = prefix_min(cutoff - 2).first;
    rep.stabilized = (prev2 - prev1 < tol) && (prev1 - est < tol);
  }
  return rep;
}

ThreePointThreshold t_minus_three_point(const Rat& lambda) {
  if (lambda <= 0 || lambda > 1)
    throw std::invalid_argument("three_point needs 0 < lambda <= 1");
  Rat half(1, 2);
  Rat sq = lambda <= half ? lambda : half;
  return {sq, std::sqrt(sq.get_d())};
}

CanonicalReport canonical_check(const EvenMeasure& mu, unsigned m_max,
                                double tol) {
  CanonicalReport rep;
  rep.label = mu.label;
  rep.exact = mu.exact;
  rep.tol = tol;
  auto moments = moment_table(mu, 2 * (2 * m_max + 1));
  rep.second_moment = moments[2];
  rep.canonical = true;
  for (unsigned m = 0; m <= m_max; ++m) {
    Value g = gap_from_table(moments, rep.second_moment, 2 * m + 1);
    rep.gaps.push_back({m, g});
    bool bad = rep.exact ? g.sign() < 0 : g.as_double() < -tol;
    if (bad && !rep.first_negative_m) {
      rep.first_negative_m = m;
      rep.canonical = false;
    }
  }
  return rep;
}

}  // namespace wellscmp
