#ifndef BFSS_SOFT_SET_HPP
#define BFSS_SOFT_SET_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfss/fuzzy_set.hpp"

namespace bfss {

// Ordered set of unique parameter identifiers. The order is fixed at
// construction and defines column order in tabular output.
class ParameterSet {
public:
  ParameterSet() = default;

  explicit ParameterSet(std::vector<std::string> params) : params_(std::move(params)) {
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (params_[i].empty()) throw ValidationError("parameters: id must be non-empty");
      for (std::size_t j = 0; j < i; ++j)
        if (params_[j] == params_[i])
          throw ValidationError("parameters: duplicate parameter '" + params_[i] + "'");
    }
  }

  ParameterSet(std::initializer_list<std::string> params)
      : ParameterSet(std::vector<std::string>(params)) {}

  std::size_t size() const { return params_.size(); }
  bool empty() const { return params_.empty(); }
  const std::string& operator[](std::size_t i) const { return params_[i]; }
  const std::vector<std::string>& names() const { return params_; }

  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

  bool contains(std::string_view p) const { return index_of(p).has_value(); }

  std::optional<std::size_t> index_of(std::string_view p) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (params_[i] == p) return i;
    return std::nullopt;
  }

  bool operator==(const ParameterSet&) const = default;

private:
  std::vector<std::string> params_;
};

// Product-indexed parameter with the canonical text form "(left,right)".
struct ProductParameter {
  std::string left;
  std::string right;

  std::string str() const { return "(" + left + "," + right + ")"; }

  bool operator==(const ProductParameter&) const = default;
};

// Canonical "(a1,...,ak)" name for a k-tuple parameter; coincides with
// ProductParameter::str for pairs.
inline std::string tuple_parameter(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

// A universe together with an ordered assignment of one bipolar fuzzy set
// per parameter. Every assigned set is over the same universe.
class BipolarFuzzySoftSet {
public:
  BipolarFuzzySoftSet(UniversePtr universe, ParameterSet params,
                      std::vector<BipolarFuzzySet> values)
      : universe_(std::move(universe)), params_(std::move(params)), values_(std::move(values)) {
    if (!universe_) throw ValidationError("soft set: missing universe");
    if (params_.size() != values_.size())
      throw ValidationError("soft set: " + std::to_string(params_.size()) + " parameters vs " +
                            std::to_string(values_.size()) + " assignments");
    for (const auto& v : values_)
      if (!(*v.universe() == *universe_))
        throw UniverseMismatch("soft set: assignment universe differs from the soft set universe");
  }

  const UniversePtr& universe() const { return universe_; }
  const ParameterSet& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  bool empty() const { return params_.empty(); }

  const std::string& param(std::size_t i) const { return params_[i]; }
  const BipolarFuzzySet& value(std::size_t i) const { return values_[i]; }
  const std::vector<BipolarFuzzySet>& values() const { return values_; }

  const BipolarFuzzySet* find(std::string_view param) const {
    auto i = params_.index_of(param);
    return i ? &values_[*i] : nullptr;
  }

  const BipolarFuzzySet& value(std::string_view param) const {
    const auto* v = find(param);
    if (!v) throw UnknownParameter("unknown parameter '" + std::string(param) + "'");
    return *v;
  }

  bool contains(std::string_view param) const { return params_.contains(param); }

  // Structural equality: same universe, same parameters in the same order,
  // identical grades. Order-insensitive equality is soft_equal in algebra.hpp.
  bool operator==(const BipolarFuzzySoftSet& other) const {
    return *universe_ == *other.universe_ && params_ == other.params_ && values_ == other.values_;
  }

private:
  UniversePtr universe_;
  ParameterSet params_;
  std::vector<BipolarFuzzySet> values_;
};

inline BipolarFuzzySoftSet null_soft_set(UniversePtr u, ParameterSet params) {
  std::vector<BipolarFuzzySet> values(params.size(), null_fuzzy_set(u));
  return {std::move(u), std::move(params), std::move(values)};
}

inline BipolarFuzzySoftSet absolute_soft_set(UniversePtr u, ParameterSet params) {
  std::vector<BipolarFuzzySet> values(params.size(), absolute_fuzzy_set(u));
  return {std::move(u), std::move(params), std::move(values)};
}

}  // namespace bfss

#endif  // BFSS_SOFT_SET_HPP
