#ifndef BFSS_FUZZY_SET_HPP
#define BFSS_FUZZY_SET_HPP

#include <string>
#include <utility>
#include <vector>

#include "bfss/grade.hpp"
#include "bfss/universe.hpp"

namespace bfss {

// Total map from a universe's objects to bipolar grades. Grades are stored
// in universe order, which makes totality structural: exactly one grade per
// object, no extras.
class BipolarFuzzySet {
public:
  BipolarFuzzySet(UniversePtr universe, std::vector<BipolarGrade> grades)
      : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) throw ValidationError("fuzzy set: missing universe");
    if (grades_.size() != universe_->size())
      throw ValidationError("fuzzy set: expected " + std::to_string(universe_->size()) +
                            " grades, got " + std::to_string(grades_.size()));
  }

  static BipolarFuzzySet constant(UniversePtr universe, const BipolarGrade& g) {
    std::vector<BipolarGrade> grades(universe->size(), g);
    return {std::move(universe), std::move(grades)};
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return grades_.size(); }
  const BipolarGrade& at(std::size_t i) const { return grades_[i]; }
  const std::vector<BipolarGrade>& grades() const { return grades_; }

  bool operator==(const BipolarFuzzySet& other) const {
    return *universe_ == *other.universe_ && grades_ == other.grades_;
  }

private:
  UniversePtr universe_;
  std::vector<BipolarGrade> grades_;
};

namespace detail {

inline void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch("operands are defined over different universes");
}

}  // namespace detail

// Lifts a grade-level binary operation over two sets sharing a universe.
template <typename Op>
BipolarFuzzySet pointwise(Op&& op, const BipolarFuzzySet& a, const BipolarFuzzySet& b) {
  detail::require_same_universe(*a.universe(), *b.universe());
  std::vector<BipolarGrade> grades;
  grades.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) grades.push_back(op(a.at(i), b.at(i)));
  return {a.universe(), std::move(grades)};
}

// Constant (0,0): identity of pointwise union, absorbing for intersection.
inline BipolarFuzzySet null_fuzzy_set(UniversePtr u) {
  return BipolarFuzzySet::constant(std::move(u), null_grade());
}

// Constant (1,-1): identity of pointwise intersection, absorbing for union.
inline BipolarFuzzySet absolute_fuzzy_set(UniversePtr u) {
  return BipolarFuzzySet::constant(std::move(u), absolute_grade());
}

}  // namespace bfss

#endif  // BFSS_FUZZY_SET_HPP
