#include "doctest.h"
#include "wellscmp/temperature.hpp"

#include <stdexcept>

using namespace wellscmp;

namespace {

TemperatureBounds report(const std::string& text, unsigned cutoff = 101) {
  return bound_report(MeasureSpec::parse(text), cutoff);
}

}  // namespace

TEST_CASE("mean-field coefficient") {
  CHECK(mean_field_tc(make_measure(MeasureSpec::parse("spin:1")), Value(6)).rat() ==
        Rat(4));
  CHECK(mean_field_tc(make_measure(MeasureSpec::parse("bernoulli:1")), Value(4)).rat() ==
        Rat(4));
  CHECK_THROWS_AS(mean_field_tc(make_measure(MeasureSpec::parse("spin:1")), Value(-1)),
                  std::invalid_argument);
}

TEST_CASE("closed-form spin factors") {
  CHECK(spin_lower_factor(Rat(1, 2)) == Rat(1));
  CHECK(spin_lower_factor(Rat(1)) == Rat(1, 2));
  CHECK(spin_lower_factor(Rat(3, 2)) == Rat(5, 9));
  CHECK(spin_lower_factor(Rat(2)) == Rat(1, 2));
  CHECK(spin_lower_factor(Rat(5, 2)) == Rat(7, 15));

  CHECK(spin_griffiths_factor(Rat(1, 2)) == Rat(1));
  CHECK(spin_griffiths_factor(Rat(1)) == Rat(1, 4));
  CHECK(spin_griffiths_factor(Rat(3, 2)) == Rat(4, 9));
  CHECK(spin_griffiths_factor(Rat(5, 2)) == Rat(9, 25));
  CHECK(spin_griffiths_factor(Rat(7)) == Rat(1, 4));

  CHECK_THROWS_AS(spin_lower_factor(Rat(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(spin_griffiths_factor(Rat(0)), std::invalid_argument);
}

TEST_CASE("bound reports for the closed-form families") {
  auto s32 = report("spin:3/2");
  CHECK(s32.second_moment.rat() == Rat(5, 9));
  CHECK(s32.lower_factor.rat() == Rat(5, 9));
  CHECK(s32.t_plus_sq.rat() == Rat(1));
  CHECK(s32.canonical);
  CHECK(s32.t_minus_exact);
  REQUIRE(s32.griffiths_factor.has_value());
  CHECK(s32.griffiths_factor->rat() == Rat(4, 9));
  CHECK(s32.improvement_ratio->rat() == Rat(5, 4));
  CHECK(s32.improvement_vs_quarter->rat() == Rat(20, 9));

  auto s1 = report("spin:1");
  CHECK(s1.lower_factor.rat() == Rat(1, 2));
  CHECK(s1.second_moment.rat() == Rat(2, 3));
  CHECK_FALSE(s1.canonical);
  CHECK(s1.improvement_ratio->rat() == Rat(2));

  auto tp = report("three_point:0.7");
  CHECK(tp.lower_factor.rat() == Rat(1, 2));
  CHECK(tp.second_moment.rat() == Rat(7, 10));
  CHECK(tp.t_plus_sq.rat() == Rat(1));
  CHECK_FALSE(tp.canonical);
  CHECK_FALSE(tp.griffiths_factor.has_value());
  CHECK(report("three_point:0.4").canonical);

  auto b = report("bernoulli:3/4");
  CHECK(b.lower_factor.rat() == Rat(9, 16));
  CHECK(b.t_plus_sq.rat() == Rat(9, 16));
  CHECK(b.canonical);

  auto dv = report("dvector:4");
  CHECK(dv.lower_factor.rat() == Rat(1, 4));
  CHECK(dv.second_moment.rat() == Rat(1, 4));
  CHECK(dv.t_plus_sq.rat() == Rat(1));
  CHECK(dv.canonical);
  CHECK_FALSE(dv.griffiths_factor.has_value());
}

TEST_CASE("unnormalized and scaled spins keep the same ratios") {
  auto u = report("spin:2:unnormalized");
  CHECK(u.second_moment.rat() == Rat(2));
  CHECK(u.lower_factor.rat() == Rat(2));
  CHECK(u.t_plus_sq.rat() == Rat(4));
  CHECK(u.griffiths_factor->rat() == Rat(1));
  CHECK(u.improvement_ratio->rat() == Rat(2));
  CHECK(u.improvement_vs_quarter->rat() == Rat(2));

  auto sc = report("scaled:2:spin:3/2");
  CHECK(sc.second_moment.rat() == Rat(20, 9));
  CHECK(sc.lower_factor.rat() == Rat(20, 9));
  CHECK(sc.t_plus_sq.rat() == Rat(4));
  CHECK(sc.griffiths_factor->rat() == Rat(16, 9));
  CHECK(sc.improvement_ratio->rat() == Rat(5, 4));
  CHECK(sc.improvement_vs_quarter->rat() == Rat(20, 9));
}

TEST_CASE("improvement invariants across the spin ladder") {
  for (int twoS = 1; twoS <= 40; ++twoS) {
    Rat S(twoS, 2);
    S.canonicalize();
    auto r = report("spin:" + Value(S).str());
    REQUIRE(r.improvement_vs_quarter.has_value());
    if (S != 1) CHECK(r.improvement_vs_quarter->rat() > Rat(4, 3));
    if (S.get_den() == 1) {
      // integral spins: the classic factor is the plain quarter
      CHECK(r.improvement_ratio->rat() == r.improvement_vs_quarter->rat());
    } else if (S > 1) {
      CHECK(r.improvement_ratio->rat() >= Rat(5, 4));
    }
  }
  CHECK(report("spin:3/2").improvement_ratio->rat() == Rat(5, 4));
  CHECK(report("spin:1/2").improvement_ratio->rat() == Rat(1));
  CHECK(report("spin:1").improvement_vs_quarter->rat() == Rat(2));
}

TEST_CASE("numeric route records its cutoff and stays inside the sandwich") {
  auto a = report("atoms:0,0.5;1,0.5", 41);
  CHECK_FALSE(a.t_minus_exact);
  CHECK(a.cutoff == 41);
  CHECK(a.canonical);
  CHECK(a.t_minus_sq.as_double() == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(a.t_plus_sq.rat() == Rat(1));

  for (const char* text : {"spin:3/2", "spin:1", "three_point:0.9", "dvector:5",
                           "atoms:0.2,0.5;0.9,0.5", "scaled:3/2:spin:2"}) {
    auto r = report(text);
    CHECK(r.t_minus_sq.as_double() <= r.second_moment.as_double() + 1e-9);
    CHECK(r.second_moment.as_double() <= r.t_plus_sq.as_double() + 1e-9);
    CHECK((r.canonical ==
           (r.t_minus_sq.as_double() >= r.second_moment.as_double() - 1e-9)));
  }
}

TEST_CASE("mean-field column multiplies the second moment") {
  auto with = bound_report(MeasureSpec::parse("spin:3/2"), 101, Value(4));
  REQUIRE(with.mean_field_tc.has_value());
  CHECK(with.mean_field_tc->rat() == Rat(20, 9));
  // canonical families: the lower bound meets the mean-field value exactly
  CHECK(with.mean_field_tc->rat() == with.lower_factor.rat() * 4);

  auto s1 = bound_report(MeasureSpec::parse("spin:1"), 101, Value(6));
  CHECK(s1.mean_field_tc->rat() == Rat(4));
  CHECK(s1.mean_field_tc->rat() > s1.lower_factor.rat() * 6);

  CHECK_FALSE(report("spin:2").mean_field_tc.has_value());
}
