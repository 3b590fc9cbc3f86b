#include "doctest.h"
#include "oracles.hpp"
#include "wellscmp/wells.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

using namespace wellscmp;

namespace {

EvenMeasure mk(const std::string& text) { return make_measure(MeasureSpec::parse(text)); }

EvenMeasure random_atomic(std::mt19937_64& gen, int max_atoms = 4) {
  std::uniform_int_distribution<int> n_atoms(1, max_atoms);
  std::uniform_int_distribution<int> num(0, 12);
  int k = n_atoms(gen);
  std::set<Rat> ts;
  ts.insert(make_rat(num(gen) + 1, 13));
  while (static_cast<int>(ts.size()) < k) ts.insert(make_rat(num(gen), 12));
  std::vector<Rat> ws(ts.size());
  Rat total(0);
  for (auto& w : ws) {
    w = make_rat(num(gen) + 1, 13);
    total += w;
  }
  std::vector<Atom> atoms;
  size_t i = 0;
  for (const Rat& t : ts) atoms.push_back({Value(t), Value(ws[i++] / total)});
  return EvenMeasure::atomic(std::move(atoms), "random");
}

}  // namespace

TEST_CASE("wells integral: parity zeros, symmetry, both-even positivity") {
  std::vector<EvenMeasure> pool = {mk("bernoulli:1"), mk("three_point:0.7"),
                                   mk("spin:3/2"), mk("spin:1"), mk("dvector:3")};
  for (const auto& mu : pool)
    for (const auto& nu : pool)
      for (unsigned n = 0; n + 0 <= 16; ++n)
        for (unsigned m = 0; n + m <= 16; ++m) {
          Value v = wells_integral(mu, nu, n, m);
          if ((n + m) % 2 == 1) {
            CHECK(v.is_zero());
            continue;
          }
          CHECK(v == wells_integral(mu, nu, m, n));
          if (n % 2 == 0 && m % 2 == 0) CHECK(v.sign() >= 0);
        }
}

TEST_CASE("wells integral: swapping the measures flips odd-odd entries") {
  auto mu = mk("spin:3/2");
  auto nu = mk("three_point:0.4");
  for (unsigned n = 1; n <= 7; n += 2)
    for (unsigned m = n; m <= 7; m += 2)
      CHECK(wells_integral(mu, nu, n, m) == -wells_integral(nu, mu, n, m));
}

TEST_CASE("wells integral equals the brute-force double sum exactly") {
  std::mt19937_64 gen(2026);
  std::vector<EvenMeasure> pool = {mk("bernoulli:1"), mk("bernoulli:1/2"),
                                   mk("three_point:0.7"), mk("spin:2"), mk("spin:5/2")};
  for (int trial = 0; trial < 6; ++trial) pool.push_back(random_atomic(gen));
  for (const auto& mu : pool)
    for (const auto& nu : pool)
      for (unsigned n = 0; n <= 6; ++n)
        for (unsigned m = 0; n + m <= 12; ++m)
          CHECK(wells_integral(mu, nu, n, m) == oracles::bf_wells(mu, nu, n, m));
}

TEST_CASE("two-point pair has the textbook values") {
  auto b1 = mk("bernoulli:1");
  auto bh = mk("bernoulli:1/2");
  CHECK(wells_integral(b1, bh, 1, 1).rat() == Rat(3, 4));
  CHECK(wells_integral(b1, bh, 1, 3).rat() == Rat(15, 16));
  CHECK(wells_integral(bh, b1, 1, 1).rat() == Rat(-3, 4));
  CHECK(wells_integral(bh, b1, 1, 3).rat() == Rat(-15, 16));
  CHECK(wells_integral(bh, b1, 1, 5).rat() == Rat(-123, 64));
  CHECK(wells_integral(bh, b1, 1, 7).rat() == Rat(-1095, 256));
  CHECK(wells_integral(bh, b1, 3, 3).rat() == Rat(-27, 64));
  CHECK(wells_integral(bh, b1, 3, 5).rat() == Rat(-135, 256));
}

TEST_CASE("domination verdicts at the exact thresholds") {
  // b_S below a measure iff S <= T_-; three_point(1/4) has T_- = 1/2 exactly
  auto tp = mk("three_point:1/4");
  CHECK(wells_dominates(tp, mk("bernoulli:1/2")).verdict == Verdict::Dominates);
  CHECK(wells_dominates(tp, mk("bernoulli:0.51")).verdict == Verdict::Violated);
  CHECK(wells_dominates(tp, mk("bernoulli:0.49")).verdict == Verdict::Dominates);

  // a measure below b_S iff S >= T_+
  CHECK(wells_dominates(mk("bernoulli:1"), tp).verdict == Verdict::Dominates);
  CHECK(wells_dominates(mk("bernoulli:0.99"), tp).verdict == Verdict::Violated);

  auto report = wells_dominates(tp, mk("bernoulli:1/2"));
  CHECK(report.exact);
  CHECK(report.min_slack.is_zero());
  for (const auto& e : report.entries) {
    CHECK(e.n % 2 == 1);
    CHECK(e.m >= e.n);
    CHECK((e.n + e.m) % 2 == 0);
  }
}

TEST_CASE("upper two-point measure at the support supremum dominates") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    auto mu = random_atomic(gen);
    auto top = EvenMeasure::atomic({{support_sup(mu), Value(1)}}, "top");
    CHECK(wells_dominates(top, mu, 10).verdict == Verdict::Dominates);
  }
}

TEST_CASE("violated reports point at a genuinely negative entry") {
  auto rep = wells_dominates(mk("bernoulli:1/2"), mk("bernoulli:1"));
  CHECK(rep.verdict == Verdict::Violated);
  CHECK(rep.min_slack.sign() < 0);
  CHECK(wells_integral(mk("bernoulli:1/2"), mk("bernoulli:1"), rep.worst_n, rep.worst_m) ==
        rep.min_slack);
}

TEST_CASE("odd moment gaps of the three-point family") {
  auto tp = mk("three_point:2/3");
  for (unsigned n = 1; n <= 9; n += 2)
    CHECK(odd_moment_gap(tp, Value::parse("1/2"), n).rat() ==
          Rat(1, 3) * rat_pow(Rat(1, 2), n));
  // at s^2 = lambda the n = 1 gap vanishes
  CHECK(odd_moment_gap(mk("three_point:0.3"), Value::parse("0.3"), 1).is_zero());
}

TEST_CASE("t_plus is the support supremum and rejects the origin mass") {
  CHECK(t_plus(mk("three_point:0.4")).rat() == Rat(1));
  CHECK(t_plus(mk("bernoulli:0.7")).rat() == Rat(7, 10));
  CHECK(t_plus(mk("dvector:6")).rat() == Rat(1));
  CHECK_THROWS_AS(t_plus(make_measure(MeasureSpec::parse("atoms:0,1"))),
                  std::invalid_argument);
}

TEST_CASE("three-point threshold roots match the closed form") {
  for (double lambda : {0.3, 0.5, 0.7, 0.9}) {
    auto tp = mk("three_point:" + std::to_string(lambda));
    auto rep = t_minus(tp, 21, 1e-10);
    REQUIRE(rep.roots.size() == 11);
    for (const auto& root : rep.roots)
      CHECK(root.s == doctest::Approx(oracles::three_point_root(lambda, root.n))
                          .epsilon(1e-8));
    double expect = lambda <= 0.5 ? oracles::three_point_root(lambda, 1)
                                  : oracles::three_point_root(lambda, 21);
    CHECK(rep.estimate == doctest::Approx(expect).epsilon(1e-8));
    CHECK(rep.argmin_n == (lambda <= 0.5 ? 1u : 21u));
  }
}

TEST_CASE("t_minus certified side: every bracket end keeps its gap nonnegative") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto mu = random_atomic(gen);
    auto rep = t_minus(mu, 15, 1e-9);
    for (const auto& root : rep.roots) {
      CHECK(odd_moment_gap(mu, root.s_sq_low, root.n).sign() >= 0);
      CHECK(root.s_sq_low.as_double() <= root.s * root.s + 1e-12);
    }
  }
}

TEST_CASE("t_minus estimate is monotone in the cutoff and below sqrt(m2)") {
  for (const char* text : {"three_point:0.8", "spin:2", "three_point:0.55"}) {
    auto mu = mk(text);
    double e11 = t_minus(mu, 11).estimate;
    double e51 = t_minus(mu, 51).estimate;
    double e101 = t_minus(mu, 101).estimate;
    CHECK(e11 >= e51 - 1e-12);
    CHECK(e51 >= e101 - 1e-12);
    CHECK(e101 <= std::sqrt(moment(mu, 2).as_double()) + 1e-9);
  }
}

TEST_CASE("three-point threshold contract") {
  CHECK(t_minus_three_point(Rat(3, 10)).t_minus_sq == Rat(3, 10));
  CHECK(t_minus_three_point(Rat(1, 2)).t_minus_sq == Rat(1, 2));
  CHECK(t_minus_three_point(Rat(7, 10)).t_minus_sq == Rat(1, 2));
  CHECK(t_minus_three_point(Rat(1)).t_minus_sq == Rat(1, 2));
  CHECK(t_minus_three_point(Rat(9, 10)).t_minus ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(t_minus_three_point(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(t_minus_three_point(Rat(11, 10)), std::invalid_argument);
}

TEST_CASE("canonical equality cases") {
  auto rep = canonical_check(mk("spin:3/2"), 25);
  CHECK(rep.canonical);
  CHECK(rep.second_moment.rat() == Rat(5, 9));
  for (const auto& g : rep.gaps) CHECK(g.gap.is_zero());

  auto rep1 = canonical_check(mk("spin:1"), 10);
  CHECK_FALSE(rep1.canonical);
  CHECK(rep1.second_moment.rat() == Rat(2, 3));
  REQUIRE(rep1.first_negative_m.has_value());
  CHECK(*rep1.first_negative_m == 1);
  CHECK(rep1.gaps[1].gap.rat() == Rat(-2, 27));

  CHECK(canonical_check(mk("dvector:3"), 20).canonical);
  CHECK(canonical_check(mk("dvector:2"), 20).canonical);
  CHECK(canonical_check(mk("three_point:0.4"), 20).canonical);
  CHECK_FALSE(canonical_check(mk("three_point:0.7"), 20).canonical);
  CHECK(canonical_check(mk("bernoulli:0.8"), 20).canonical);
}

TEST_CASE("threshold sandwich on random atomic measures") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto mu = random_atomic(gen);
    auto rep = t_minus(mu, 31, 1e-9);
    double m2 = moment(mu, 2).as_double();
    double tp = t_plus(mu).as_double();
    CHECK(rep.estimate <= std::sqrt(m2) + 1e-8);
    CHECK(std::sqrt(m2) <= tp + 1e-12);
  }
}
