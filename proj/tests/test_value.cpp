#include "doctest.h"
#include "wellscmp/value.hpp"

#include <stdexcept>

using namespace wellscmp;

TEST_CASE("parse keeps every textual form exact") {
  CHECK(Value::parse("3/4").rat() == Rat(3, 4));
  CHECK(Value::parse("-7").rat() == Rat(-7));
  CHECK(Value::parse("0.05").rat() == Rat(1, 20));
  CHECK(Value::parse("1e-3").rat() == Rat(1, 1000));
  CHECK(Value::parse("2.5e2").rat() == Rat(250));
  CHECK(Value::parse("-0.125").rat() == Rat(-1, 8));
  CHECK(Value::parse("1.5/0.5").rat() == Rat(3));
  CHECK(Value::parse("3/4").exact());
  CHECK_THROWS_AS(Value::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Value::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Value::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic stays exact until a float enters") {
  Value a = Value::parse("1/3");
  Value b = Value::parse("1/6");
  Value sum = a + b;
  CHECK(sum.exact());
  CHECK(sum.rat() == Rat(1, 2));
  CHECK((a * b).rat() == Rat(1, 18));
  CHECK((a - b).rat() == Rat(1, 6));
  CHECK((a / b).rat() == Rat(2));

  Value f(0.5);
  CHECK_FALSE(f.exact());
  CHECK_FALSE((a + f).exact());
  CHECK((a + f).as_double() == doctest::Approx(1.0 / 3.0 + 0.5).epsilon(1e-15));
  CHECK_FALSE((f * a).exact());
}

TEST_CASE("sign, abs, pow, comparisons") {
  Value q = Value::parse("-3/7");
  CHECK(q.sign() == -1);
  CHECK(q.abs().rat() == Rat(3, 7));
  CHECK(Value(0).is_zero());
  CHECK(q.pow(2).rat() == Rat(9, 49));
  CHECK(q.pow(3).rat() == Rat(-27, 343));
  CHECK(q.pow(0).rat() == Rat(1));
  CHECK(Value::parse("2/3") < Value::parse("3/4"));
  CHECK(Value::parse("1/2") == Value(0.5));
  CHECK(Value(2) > Value::parse("3/2"));
  CHECK_THROWS_AS(Value(1) / Value(0), std::domain_error);
}

TEST_CASE("string forms round-trip") {
  CHECK(Value::parse("3/4").str() == "3/4");
  CHECK(Value(5).str() == "5");
  CHECK(Value::parse("-1/2").str() == "-1/2");
  Value f(0.1);
  CHECK(Value::parse(f.str()).as_double() == 0.1);
  CHECK(Value(1.0).to_float().str() == format_double(1.0));
}

TEST_CASE("integer helpers") {
  CHECK(int_pow(BigInt(3), 5) == 243);
  CHECK(int_pow(BigInt(-2), 3) == -8);
  CHECK(int_pow(BigInt(7), 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(make_rat(BigInt(4), BigInt(-6)) == Rat(-2, 3));
  CHECK_THROWS_AS(make_rat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("value arithmetic matches double arithmetic on a random walk") {
  Value ve = Value::parse("1/7");
  double vd = 1.0 / 7.0;
  for (int i = 1; i <= 12; ++i) {
    Value step = Value::parse(std::to_string(i) + "/3");
    ve = ve * step - Value(i) / Value(5);
    vd = vd * (i / 3.0) - i / 5.0;
  }
  CHECK(ve.exact());
  CHECK(ve.as_double() == doctest::Approx(vd).epsilon(1e-12));
}
