#ifndef BFSS_GRADE_HPP
#define BFSS_GRADE_HPP

#include <string_view>

#include "bfss/degree.hpp"

namespace bfss {

// A positive satisfaction degree in [0,1] paired with a negative
// (counter-property) degree in [-1,0]. Construction rejects out-of-range
// components instead of clamping.
class BipolarGrade {
public:
  BipolarGrade(Degree pos, Degree neg) : pos_(pos), neg_(neg) {
    if (pos.ticks() < 0 || pos.ticks() > Degree::scale)
      throw OutOfRange("positive degree " + pos.str() + " outside [0,1]");
    if (neg.ticks() > 0 || neg.ticks() < -Degree::scale)
      throw OutOfRange("negative degree " + neg.str() + " outside [-1,0]");
  }

  Degree pos() const { return pos_; }
  Degree neg() const { return neg_; }

  std::string str() const { return "(" + pos_.str() + "," + neg_.str() + ")"; }

  bool operator==(const BipolarGrade&) const = default;

private:
  Degree pos_;
  Degree neg_;
};

inline BipolarGrade grade(std::string_view pos, std::string_view neg) {
  return {Degree::parse(pos), Degree::parse(neg)};
}

// Least grade (0,0); identity of grade_union.
inline BipolarGrade null_grade() { return {Degree::zero(), Degree::zero()}; }

// Greatest grade (1,-1); identity of grade_intersection.
inline BipolarGrade absolute_grade() { return {Degree::one(), Degree::minus_one()}; }

// (1 - pos, -1 - neg); an involution on valid grades.
inline BipolarGrade grade_complement(const BipolarGrade& g) {
  return {one_minus(g.pos()), minus_one_minus(g.neg())};
}

// Supremum: max on the positive part, min on the negative part.
inline BipolarGrade grade_union(const BipolarGrade& a, const BipolarGrade& b) {
  return {max(a.pos(), b.pos()), min(a.neg(), b.neg())};
}

// Infimum: min on the positive part, max on the negative part.
inline BipolarGrade grade_intersection(const BipolarGrade& a, const BipolarGrade& b) {
  return {min(a.pos(), b.pos()), max(a.neg(), b.neg())};
}

// The partial order under which grade_intersection/grade_union are meet and
// join: larger positive part and more negative negative part rank higher.
inline bool grade_leq(const BipolarGrade& a, const BipolarGrade& b) {
  return a.pos() <= b.pos() && a.neg() >= b.neg();
}

}  // namespace bfss

#endif  // BFSS_GRADE_HPP
