#ifndef BFSS_ALGEBRA_HPP
#define BFSS_ALGEBRA_HPP

#include <span>
#include <string>
#include <vector>

#include "bfss/soft_set.hpp"

namespace bfss {

namespace detail {

inline std::vector<std::string> shared_params(const BipolarFuzzySoftSet& f,
                                              const BipolarFuzzySoftSet& g) {
  std::vector<std::string> out;
  for (const auto& p : f.params())
    if (g.contains(p)) out.push_back(p);
  return out;
}

inline std::vector<std::string> united_params(const BipolarFuzzySoftSet& f,
                                              const BipolarFuzzySoftSet& g) {
  std::vector<std::string> out(f.params().names());
  for (const auto& p : g.params())
    if (!f.contains(p)) out.push_back(p);
  return out;
}

// Shared parameters combined with op, unshared ones copied through.
template <typename Op>
BipolarFuzzySoftSet extended_combine(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g,
                                     Op op) {
  require_same_universe(*f.universe(), *g.universe());
  auto params = united_params(f, g);
  std::vector<BipolarFuzzySet> values;
  values.reserve(params.size());
  for (const auto& p : params) {
    const auto* fv = f.find(p);
    const auto* gv = g.find(p);
    if (fv && gv)
      values.push_back(pointwise(op, *fv, *gv));
    else
      values.push_back(fv ? *fv : *gv);
  }
  return {f.universe(), ParameterSet(std::move(params)), std::move(values)};
}

// Every shared parameter combined with op; throws when nothing is shared.
template <typename Op>
BipolarFuzzySoftSet restricted_combine(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g,
                                       Op op, const char* what) {
  require_same_universe(*f.universe(), *g.universe());
  auto params = shared_params(f, g);
  if (params.empty())
    throw EmptyParameterIntersection(std::string(what) + ": parameter sets do not meet");
  std::vector<BipolarFuzzySet> values;
  values.reserve(params.size());
  for (const auto& p : params) values.push_back(pointwise(op, *f.find(p), *g.find(p)));
  return {f.universe(), ParameterSet(std::move(params)), std::move(values)};
}

// Cartesian-product parameter set "(a,b)" combined pointwise with op, in
// lexicographic order of the input orders.
template <typename Op>
BipolarFuzzySoftSet product_combine(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g,
                                    Op op) {
  require_same_universe(*f.universe(), *g.universe());
  std::vector<std::string> params;
  std::vector<BipolarFuzzySet> values;
  params.reserve(f.size() * g.size());
  values.reserve(f.size() * g.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      params.push_back(ProductParameter{f.param(i), g.param(j)}.str());
      values.push_back(pointwise(op, f.value(i), g.value(j)));
    }
  return {f.universe(), ParameterSet(std::move(params)), std::move(values)};
}

inline void require_nonempty_family(std::span<const BipolarFuzzySoftSet> family,
                                    const char* what) {
  if (family.empty()) throw EmptyFamily(std::string(what) + ": empty family");
  for (std::size_t i = 1; i < family.size(); ++i)
    require_same_universe(*family[0].universe(), *family[i].universe());
}

}  // namespace detail

// Degree-wise containment: every parameter of f appears in g and every grade
// of f is below the corresponding grade of g.
inline bool soft_subset(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g) {
  detail::require_same_universe(*f.universe(), *g.universe());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto* gv = g.find(f.param(i));
    if (!gv) return false;
    for (std::size_t x = 0; x < f.value(i).size(); ++x)
      if (!grade_leq(f.value(i).at(x), gv->at(x))) return false;
  }
  return true;
}

// Support-only containment: parameter inclusion regardless of grades.
inline bool soft_support_subset(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g) {
  detail::require_same_universe(*f.universe(), *g.universe());
  for (const auto& p : f.params())
    if (!g.contains(p)) return false;
  return true;
}

// Mutual degree-wise containment: same parameter sets (order aside) and
// identical grades.
inline bool soft_equal(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g) {
  return soft_subset(f, g) && soft_subset(g, f);
}

inline BipolarFuzzySoftSet soft_complement(const BipolarFuzzySoftSet& f) {
  std::vector<BipolarFuzzySet> values;
  values.reserve(f.size());
  for (const auto& v : f.values()) {
    std::vector<BipolarGrade> grades;
    grades.reserve(v.size());
    for (const auto& g : v.grades()) grades.push_back(grade_complement(g));
    values.emplace_back(v.universe(), std::move(grades));
  }
  return {f.universe(), f.params(), std::move(values)};
}

// Parameter set A ∩ B, values combined by grade intersection.
inline BipolarFuzzySoftSet soft_restricted_intersection(const BipolarFuzzySoftSet& f,
                                                        const BipolarFuzzySoftSet& g) {
  return detail::restricted_combine(f, g, grade_intersection, "restricted intersection");
}

// Parameter set A ∪ B; unshared parameters copied, shared ones united.
inline BipolarFuzzySoftSet soft_extended_union(const BipolarFuzzySoftSet& f,
                                               const BipolarFuzzySoftSet& g) {
  return detail::extended_combine(f, g, grade_union);
}

// Parameter set A ∪ B; unshared parameters copied, shared ones intersected.
inline BipolarFuzzySoftSet soft_extended_intersection(const BipolarFuzzySoftSet& f,
                                                      const BipolarFuzzySoftSet& g) {
  return detail::extended_combine(f, g, grade_intersection);
}

// Parameter set A ∩ B, values combined by grade union.
inline BipolarFuzzySoftSet soft_restricted_union(const BipolarFuzzySoftSet& f,
                                                 const BipolarFuzzySoftSet& g) {
  return detail::restricted_combine(f, g, grade_union, "restricted union");
}

// Product parameters (a,b) valued by grade intersection of F(a) and G(b).
inline BipolarFuzzySoftSet soft_and(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g) {
  return detail::product_combine(f, g, grade_intersection);
}

// Product parameters (a,b) valued by grade union of F(a) and G(b).
inline BipolarFuzzySoftSet soft_or(const BipolarFuzzySoftSet& f, const BipolarFuzzySoftSet& g) {
  return detail::product_combine(f, g, grade_union);
}

// Parameter set ∩A_i, values folded by grade intersection over all members.
inline BipolarFuzzySoftSet family_restricted_intersection(
    std::span<const BipolarFuzzySoftSet> family) {
  detail::require_nonempty_family(family, "family intersection");
  std::vector<std::string> params;
  for (const auto& p : family[0].params()) {
    bool everywhere = true;
    for (std::size_t i = 1; everywhere && i < family.size(); ++i)
      everywhere = family[i].contains(p);
    if (everywhere) params.push_back(p);
  }
  if (params.empty())
    throw EmptyParameterIntersection("family intersection: parameter sets do not meet");
  std::vector<BipolarFuzzySet> values;
  values.reserve(params.size());
  for (const auto& p : params) {
    BipolarFuzzySet acc = *family[0].find(p);
    for (std::size_t i = 1; i < family.size(); ++i)
      acc = pointwise(grade_intersection, acc, *family[i].find(p));
    values.push_back(std::move(acc));
  }
  return {family[0].universe(), ParameterSet(std::move(params)), std::move(values)};
}

// Parameter set ∪A_i in encounter order; the value at e is the grade union
// over every member whose parameter set contains e.
inline BipolarFuzzySoftSet family_union(std::span<const BipolarFuzzySoftSet> family) {
  detail::require_nonempty_family(family, "family union");
  std::vector<std::string> params;
  for (const auto& member : family)
    for (const auto& p : member.params()) {
      bool seen = false;
      for (const auto& q : params)
        if (q == p) {
          seen = true;
          break;
        }
      if (!seen) params.push_back(p);
    }
  std::vector<BipolarFuzzySet> values;
  values.reserve(params.size());
  for (const auto& p : params) {
    BipolarFuzzySet merged = null_fuzzy_set(family[0].universe());
    bool first = true;
    for (const auto& member : family) {
      const auto* v = member.find(p);
      if (!v) continue;
      merged = first ? *v : pointwise(grade_union, merged, *v);
      first = false;
    }
    values.push_back(std::move(merged));
  }
  return {family[0].universe(), ParameterSet(std::move(params)), std::move(values)};
}

namespace detail {

template <typename Op>
BipolarFuzzySoftSet family_product(std::span<const BipolarFuzzySoftSet> family, Op op,
                                   const char* what) {
  require_nonempty_family(family, what);
  std::size_t total = 1;
  for (const auto& member : family) total *= member.size();

  std::vector<std::string> params;
  std::vector<BipolarFuzzySet> values;
  params.reserve(total);
  values.reserve(total);

  // Odometer over the index tuples, leftmost member slowest, so the binary
  // case coincides with the pairwise product operations.
  std::vector<std::size_t> idx(family.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<std::string> parts;
    parts.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) parts.push_back(family[i].param(idx[i]));
    params.push_back(tuple_parameter(parts));

    BipolarFuzzySet acc = family[0].value(idx[0]);
    for (std::size_t i = 1; i < family.size(); ++i)
      acc = pointwise(op, acc, family[i].value(idx[i]));
    values.push_back(std::move(acc));

    for (std::size_t i = family.size(); i-- > 0;) {
      if (++idx[i] < family[i].size()) break;
      idx[i] = 0;
    }
  }
  return {family[0].universe(), ParameterSet(std::move(params)), std::move(values)};
}

}  // namespace detail

// Tuple parameters (a1,...,ak) valued by the grade intersection of the
// members' assignments.
inline BipolarFuzzySoftSet family_and(std::span<const BipolarFuzzySoftSet> family) {
  return detail::family_product(family, grade_intersection, "family and");
}

// Dual of family_and with grade union.
inline BipolarFuzzySoftSet family_or(std::span<const BipolarFuzzySoftSet> family) {
  return detail::family_product(family, grade_union, "family or");
}

}  // namespace bfss

#endif  // BFSS_ALGEBRA_HPP
