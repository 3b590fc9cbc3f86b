#include "wellscmp/temperature.hpp"

#include <stdexcept>

#include "wellscmp/canonical_families.hpp"
#include "wellscmp/wells.hpp"

namespace wellscmp {

Value mean_field_tc(const EvenMeasure& mu, const Value& coupling_sum) {
  if (coupling_sum.sign() < 0)
    throw std::invalid_argument("coupling sum must be >= 0");
  return moment(mu, 2) * coupling_sum;
}

static void require_spin(const Rat& S) {
  Rat twoS = S * 2;
  if (twoS.get_den() != 1 || twoS <= 0)
    throw std::invalid_argument("S must be a positive half-integer");
}

Rat spin_lower_factor(const Rat& S) {
  require_spin(S);
  if (S == 1) return Rat(1, 2);
  return (S + 1) / (S * 3);
}

Rat spin_griffiths_factor(const Rat& S) {
  require_spin(S);
  if (S.get_den() == 1) return Rat(1, 4);
  Rat k = S - Rat(1, 2);
  Rat r = (k + 1) / (k * 2 + 1);
  return r * r;
}

namespace {

struct FamilyInfo {
  Value second_moment;
  Value t_minus_sq;
  Value t_plus_sq;
  bool canonical = false;
  bool exact = false;
  unsigned cutoff = 0;
  std::optional<Value> griffiths;
  std::optional<Value> quarter;  // the 1/4 baseline in the same units
};

FamilyInfo family_info(const MeasureSpec& spec, unsigned cutoff) {
  FamilyInfo fi;
  switch (spec.type) {
    case MeasureSpec::Type::Bernoulli: {
      Value t2 = spec.T * spec.T;
      fi.second_moment = fi.t_minus_sq = fi.t_plus_sq = t2;
      fi.canonical = true;
      fi.exact = spec.T.exact();
      return fi;
    }
    case MeasureSpec::Type::ThreePoint: {
      fi.second_moment = spec.lambda;
      Value half(Rat(1, 2));
      fi.t_minus_sq = spec.lambda <= half ? spec.lambda : half;
      fi.t_plus_sq = Value(1);
      fi.canonical = spec.lambda <= half;
      fi.exact = spec.lambda.exact();
      return fi;
    }
    case MeasureSpec::Type::Spin: {
      Rat lf = spin_lower_factor(spec.S);
      Rat gf = spin_griffiths_factor(spec.S);
      Rat quarter(1, 4);
      Rat m2 = spin_second_moment(spec.S, spec.normalized);
      Rat sup2 = spec.normalized ? Rat(1) : spec.S * spec.S;
      if (!spec.normalized) {
        Rat s2 = spec.S * spec.S;
        lf *= s2;
        gf *= s2;
        quarter *= s2;
      }
      fi.second_moment = Value(m2);
      fi.t_minus_sq = Value(lf);
      fi.t_plus_sq = Value(sup2);
      fi.canonical = spec.S != 1;
      fi.exact = true;
      fi.griffiths = Value(gf);
      fi.quarter = Value(quarter);
      return fi;
    }
    case MeasureSpec::Type::DVector: {
      fi.second_moment = fi.t_minus_sq = Value(Rat(1, spec.D));
      fi.t_plus_sq = Value(1);
      fi.canonical = true;
      fi.exact = true;
      return fi;
    }
    case MeasureSpec::Type::Atoms: {
      EvenMeasure mu = make_measure(spec);
      fi.second_moment = moment(mu, 2);
      Value sup = support_sup(mu);
      fi.t_plus_sq = sup * sup;
      TMinusReport tr = t_minus(mu, cutoff);
      fi.t_minus_sq = Value(tr.estimate * tr.estimate);
      fi.canonical = canonical_check(mu, 25).canonical;
      fi.exact = false;
      fi.cutoff = cutoff;
      return fi;
    }
    case MeasureSpec::Type::Scaled: {
      FamilyInfo base = family_info(*spec.base, cutoff);
      Value s2 = spec.s * spec.s;
      fi = base;
      fi.second_moment = base.second_moment * s2;
      fi.t_minus_sq = base.t_minus_sq * s2;
      fi.t_plus_sq = base.t_plus_sq * s2;
      if (base.griffiths) fi.griffiths = *base.griffiths * s2;
      if (base.quarter) fi.quarter = *base.quarter * s2;
      fi.exact = base.exact && spec.s.exact();
      return fi;
    }
  }
  throw std::logic_error("unhandled measure type");
}

}  // namespace

TemperatureBounds bound_report(const MeasureSpec& spec, unsigned cutoff,
                               std::optional<Value> coupling_sum) {
  FamilyInfo fi = family_info(spec, cutoff);
  TemperatureBounds b;
  b.measure = spec.describe();
  b.second_moment = fi.second_moment;
  b.t_minus_sq = fi.t_minus_sq;
  b.t_plus_sq = fi.t_plus_sq;
  b.lower_factor = fi.t_minus_sq;
  b.canonical = fi.canonical;
  b.t_minus_exact = fi.exact;
  b.cutoff = fi.cutoff;
  if (coupling_sum) b.mean_field_tc = fi.second_moment * *coupling_sum;
  if (fi.griffiths) {
    b.griffiths_factor = fi.griffiths;
    b.improvement_ratio = b.lower_factor / *fi.griffiths;
    if (fi.quarter) b.improvement_vs_quarter = b.lower_factor / *fi.quarter;
  }
  return b;
}

}  // namespace wellscmp
