#include "bfss/grade.hpp"

#include <vector>

#include "doctest.h"

using bfss::BipolarGrade;
using bfss::Degree;
using bfss::grade;

namespace {

// All grades with both components on a fixed tick step; the 0.1 step gives
// the 11x11 grid the worked examples live on.
std::vector<BipolarGrade> grade_grid(std::int32_t step) {
  std::vector<BipolarGrade> out;
  for (std::int32_t p = 0; p <= Degree::scale; p += step)
    for (std::int32_t n = 0; n >= -Degree::scale; n -= step)
      out.emplace_back(Degree::from_ticks(p), Degree::from_ticks(n));
  return out;
}

}  // namespace

TEST_CASE("construction rejects out-of-range components") {
  CHECK_THROWS_AS(grade("-0.1", "0"), bfss::OutOfRange);
  CHECK_THROWS_AS(grade("1.0001", "0"), bfss::OutOfRange);
  CHECK_THROWS_AS(grade("0.5", "0.1"), bfss::OutOfRange);
  CHECK_NOTHROW(grade("0", "0"));
  CHECK_NOTHROW(grade("1", "-1"));
}

TEST_CASE("complement matches the worked bike example") {
  CHECK(bfss::grade_complement(grade("0.1", "-0.5")) == grade("0.9", "-0.5"));
  CHECK(bfss::grade_complement(grade("0.3", "-0.6")) == grade("0.7", "-0.4"));
  CHECK(bfss::grade_complement(grade("0", "0")) == grade("1", "-1"));
}

TEST_CASE("union matches the worked car example") {
  CHECK(bfss::grade_union(grade("0.1", "-0.5"), grade("0.2", "-0.5")) == grade("0.2", "-0.5"));
  CHECK(bfss::grade_union(grade("0.4", "-0.2"), grade("0.2", "-0.3")) == grade("0.4", "-0.3"));
  const auto g = grade("0.7", "-0.2");
  CHECK(bfss::grade_union(g, bfss::null_grade()) == g);
}

TEST_CASE("intersection matches the worked bike example") {
  CHECK(bfss::grade_intersection(grade("0.3", "-0.6"), grade("0.2", "-0.6")) ==
        grade("0.2", "-0.6"));
  CHECK(bfss::grade_intersection(grade("0.4", "-0.2"), grade("0.2", "-0.3")) ==
        grade("0.2", "-0.2"));
  const auto g = grade("0.3", "-0.9");
  CHECK(bfss::grade_intersection(g, bfss::absolute_grade()) == g);
}

TEST_CASE("order examples") {
  CHECK(bfss::grade_leq(grade("0.1", "-0.5"), grade("0.2", "-0.5")));
  CHECK_FALSE(bfss::grade_leq(grade("0.3", "-0.6"), grade("0.2", "-0.6")));
  const auto g = grade("0.4", "-0.7");
  CHECK(bfss::grade_leq(g, g));
}

TEST_CASE("order agrees with the lattice operations on the 0.1 grid") {
  const auto grid = grade_grid(1000);
  for (const auto& a : grid)
    for (const auto& b : grid) {
      const bool leq = bfss::grade_leq(a, b);
      REQUIRE(leq == (bfss::grade_intersection(a, b) == a));
      REQUIRE(leq == (bfss::grade_union(a, b) == b));
    }
}

TEST_CASE("complement is an involution and de morgan holds on the 0.1 grid") {
  const auto grid = grade_grid(1000);
  for (const auto& a : grid) {
    REQUIRE(bfss::grade_complement(bfss::grade_complement(a)) == a);
    for (const auto& b : grid) {
      REQUIRE(bfss::grade_complement(bfss::grade_union(a, b)) ==
              bfss::grade_intersection(bfss::grade_complement(a), bfss::grade_complement(b)));
      REQUIRE(bfss::grade_union(a, b) == bfss::grade_union(b, a));
      REQUIRE(bfss::grade_intersection(a, b) == bfss::grade_intersection(b, a));
      REQUIRE(bfss::grade_union(a, bfss::grade_intersection(a, b)) == a);
      REQUIRE(bfss::grade_intersection(a, bfss::grade_union(a, b)) == a);
    }
  }
}

TEST_CASE("associativity and distributivity on a coarse grid") {
  const auto grid = grade_grid(2500);  // 5x5 components, 25 grades
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid) {
        using bfss::grade_intersection;
        using bfss::grade_union;
        REQUIRE(grade_union(a, grade_union(b, c)) == grade_union(grade_union(a, b), c));
        REQUIRE(grade_intersection(a, grade_intersection(b, c)) ==
                grade_intersection(grade_intersection(a, b), c));
        REQUIRE(grade_intersection(a, grade_union(b, c)) ==
                grade_union(grade_intersection(a, b), grade_intersection(a, c)));
        REQUIRE(grade_union(a, grade_intersection(b, c)) ==
                grade_intersection(grade_union(a, b), grade_union(a, c)));
      }
}

TEST_CASE("the null grade is the unique union identity on the grid") {
  const auto grid = grade_grid(1000);
  std::vector<BipolarGrade> identities;
  for (const auto& z : grid) {
    bool identity = true;
    for (const auto& g : grid)
      if (!(bfss::grade_union(g, z) == g && bfss::grade_intersection(g, z) == z)) {
        identity = false;
        break;
      }
    if (identity) identities.push_back(z);
  }
  REQUIRE(identities.size() == 1);
  CHECK(identities.front() == bfss::null_grade());
}

TEST_CASE("the absolute grade is the unique intersection identity on the grid") {
  const auto grid = grade_grid(1000);
  std::vector<BipolarGrade> identities;
  for (const auto& z : grid) {
    bool identity = true;
    for (const auto& g : grid)
      if (!(bfss::grade_intersection(g, z) == g && bfss::grade_union(g, z) == z)) {
        identity = false;
        break;
      }
    if (identity) identities.push_back(z);
  }
  REQUIRE(identities.size() == 1);
  CHECK(identities.front() == bfss::absolute_grade());
}
