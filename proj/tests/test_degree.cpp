#include "bfss/degree.hpp"

#include "doctest.h"

using bfss::Degree;

TEST_CASE("parse accepts minimal and padded forms") {
  CHECK(Degree::parse("0").ticks() == 0);
  CHECK(Degree::parse("1").ticks() == 10000);
  CHECK(Degree::parse("-1").ticks() == -10000);
  CHECK(Degree::parse("0.5").ticks() == 5000);
  CHECK(Degree::parse("-0.3").ticks() == -3000);
  CHECK(Degree::parse("0.0001").ticks() == 1);
  CHECK(Degree::parse("-0.01").ticks() == -100);
  CHECK(Degree::parse("0.1234").ticks() == 1234);
  CHECK(Degree::parse("1.0000").ticks() == 10000);
  CHECK(Degree::parse("+0.5").ticks() == 5000);
  CHECK(Degree::parse("-0").ticks() == 0);
  CHECK(Degree::parse("00.25").ticks() == 2500);
}

TEST_CASE("parse rejects malformed literals") {
  for (const char* bad : {"", "-", "+", ".", "1.", ".5", "0.", "0.12345", "abc", "0..1", "1e-4",
                          "0.5 ", " 0.5", "0,5", "--1"})
    CHECK_THROWS_AS(Degree::parse(bad), bfss::ParseError);
}

TEST_CASE("parse rejects values outside [-1,1]") {
  for (const char* bad : {"2", "-2", "1.0001", "-1.0001", "10", "999999999999"})
    CHECK_THROWS_AS(Degree::parse(bad), bfss::OutOfRange);
  CHECK_THROWS_AS(Degree::from_ticks(10001), bfss::OutOfRange);
  CHECK_THROWS_AS(Degree::from_ticks(-10001), bfss::OutOfRange);
}

TEST_CASE("canonical serialization is minimal") {
  CHECK(Degree::parse("0.5000").str() == "0.5");
  CHECK(Degree::parse("1.0000").str() == "1");
  CHECK(Degree::parse("-0").str() == "0");
  CHECK(Degree::parse("-0.1100").str() == "-0.11");
  CHECK(Degree::parse("0.1234").str() == "0.1234");
  CHECK(Degree::from_ticks(-1).str() == "-0.0001");
}

TEST_CASE("parse/str is a bijection on the whole range") {
  for (std::int32_t t = -Degree::scale; t <= Degree::scale; ++t) {
    const Degree d = Degree::from_ticks(t);
    const Degree back = Degree::parse(d.str());
    REQUIRE(back.ticks() == t);
    REQUIRE(back.str() == d.str());
  }
}

TEST_CASE("min, max and the affine maps are exact and closed") {
  const Degree a = Degree::parse("0.3");
  const Degree b = Degree::parse("0.7");
  CHECK(bfss::min(a, b) == a);
  CHECK(bfss::max(a, b) == b);
  CHECK(bfss::one_minus(a) == b);
  CHECK(bfss::minus_one_minus(Degree::parse("-0.6")) == Degree::parse("-0.4"));

  // closure of 1-x on [0,1] and -1-x on [-1,0]
  for (std::int32_t t = 0; t <= Degree::scale; ++t) {
    CHECK_NOTHROW(bfss::one_minus(Degree::from_ticks(t)));
    CHECK_NOTHROW(bfss::minus_one_minus(Degree::from_ticks(-t)));
  }
}

TEST_CASE("ordering follows numeric value") {
  CHECK(Degree::parse("-1") < Degree::parse("-0.5"));
  CHECK(Degree::parse("-0.5") < Degree::parse("0"));
  CHECK(Degree::parse("0") < Degree::parse("0.0001"));
  CHECK(Degree::parse("0.9999") < Degree::parse("1"));
  CHECK(Degree::parse("0.5") == Degree::parse("0.50"));
}
