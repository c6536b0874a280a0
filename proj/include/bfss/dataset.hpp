#ifndef BFSS_DATASET_HPP
#define BFSS_DATASET_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bfss/soft_set.hpp"

namespace bfss {

// A dataset file is one JSON document:
//
//   {
//     "universe":   ["c1", "c2", ...],
//     "parameters": ["e1", "e2", ...],
//     "values": {
//       "e1": { "c1": {"pos": "0.4", "neg": "-0.5"}, ... },
//       ...
//     }
//   }
//
// Every parameter carries a complete row over the universe; ids must match
// the declared lists exactly. Degrees are decimal strings with up to four
// fractional digits; plain JSON numbers on the 1e-4 grid are also accepted
// on input. Serialization always emits minimal decimal strings.

namespace detail {

inline Degree degree_from_json(const nlohmann::json& v, const std::string& path) {
  try {
    if (v.is_string()) return Degree::parse(v.get_ref<const std::string&>());
    if (v.is_number_integer()) {
      const auto whole = v.get<long long>();
      if (whole < -1 || whole > 1) throw OutOfRange("degree outside [-1,1]");
      return Degree::from_ticks(static_cast<std::int32_t>(whole * Degree::scale));
    }
    if (v.is_number_float()) {
      const double x = v.get<double>();
      const double scaled = x * Degree::scale;
      const double rounded = std::round(scaled);
      if (std::fabs(scaled - rounded) > 1e-6)
        throw ValidationError(path + ": value is not representable with 4 fractional digits");
      if (rounded < -Degree::scale || rounded > Degree::scale)
        throw OutOfRange("degree outside [-1,1]");
      return Degree::from_ticks(static_cast<std::int32_t>(rounded));
    }
    throw ValidationError(path + ": expected a decimal string or number");
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const OutOfRange& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline nlohmann::ordered_json dataset_json(const BipolarFuzzySoftSet& s) {
  nlohmann::ordered_json doc;
  doc["universe"] = s.universe()->objects();
  doc["parameters"] = s.params().names();
  nlohmann::ordered_json values(nlohmann::json::value_t::object);
  for (std::size_t e = 0; e < s.size(); ++e) {
    nlohmann::ordered_json row(nlohmann::json::value_t::object);
    for (std::size_t x = 0; x < s.universe()->size(); ++x) {
      const auto& g = s.value(e).at(x);
      row[s.universe()->object(x)] = {{"pos", g.pos().str()}, {"neg", g.neg().str()}};
    }
    values[s.param(e)] = std::move(row);
  }
  doc["values"] = std::move(values);
  return doc;
}

}  // namespace detail

inline BipolarFuzzySoftSet parse_dataset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("dataset: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("dataset: root must be an object");
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (key != "universe" && key != "parameters" && key != "values")
      throw ValidationError("dataset: unknown key '" + key + "'");
  }
  for (const char* key : {"universe", "parameters", "values"})
    if (!doc.contains(key)) throw ValidationError(std::string("dataset: missing '") + key + "'");

  const auto string_list = [](const nlohmann::json& node, const std::string& path) {
    if (!node.is_array()) throw ValidationError(path + ": expected an array of ids");
    std::vector<std::string> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_string())
        throw ValidationError(path + "[" + std::to_string(i) + "]: expected a string");
      out.push_back(node[i].get<std::string>());
    }
    return out;
  };

  auto universe = make_universe(string_list(doc["universe"], "universe"));
  ParameterSet params(string_list(doc["parameters"], "parameters"));

  const auto& values = doc["values"];
  if (!values.is_object()) throw ValidationError("values: expected an object");
  for (const auto& [key, unused] : values.items()) {
    (void)unused;
    if (!params.contains(key)) throw ValidationError("values." + key + ": unknown parameter");
  }

  std::vector<BipolarFuzzySet> assignments;
  assignments.reserve(params.size());
  for (const auto& p : params) {
    if (!values.contains(p)) throw ValidationError("values: missing parameter '" + p + "'");
    const auto& row = values[p];
    const std::string row_path = "values." + p;
    if (!row.is_object()) throw ValidationError(row_path + ": expected an object");
    for (const auto& [key, unused] : row.items()) {
      (void)unused;
      if (!universe->index_of(key)) throw ValidationError(row_path + "." + key + ": unknown object");
    }
    std::vector<BipolarGrade> grades;
    grades.reserve(universe->size());
    for (const auto& obj : universe->objects()) {
      if (!row.contains(obj)) throw ValidationError(row_path + ": missing object '" + obj + "'");
      const auto& cell = row[obj];
      const std::string cell_path = row_path + "." + obj;
      if (!cell.is_object()) throw ValidationError(cell_path + ": expected {\"pos\", \"neg\"}");
      for (const auto& [key, unused] : cell.items()) {
        (void)unused;
        if (key != "pos" && key != "neg")
          throw ValidationError(cell_path + ": unknown key '" + key + "'");
      }
      for (const char* side : {"pos", "neg"})
        if (!cell.contains(side))
          throw ValidationError(cell_path + ": missing '" + std::string(side) + "'");
      const Degree pos = detail::degree_from_json(cell["pos"], cell_path + ".pos");
      const Degree neg = detail::degree_from_json(cell["neg"], cell_path + ".neg");
      try {
        grades.emplace_back(pos, neg);
      } catch (const OutOfRange& e) {
        throw ValidationError(cell_path + ": " + e.what());
      }
    }
    assignments.emplace_back(universe, std::move(grades));
  }
  return {std::move(universe), std::move(params), std::move(assignments)};
}

// Canonical form: 2-space indent, keys in declaration order, rows in
// universe order, degrees as minimal decimal strings, trailing newline.
// serialize(parse(serialize(s))) == serialize(s).
inline std::string serialize_dataset(const BipolarFuzzySoftSet& s) {
  return detail::dataset_json(s).dump(2) + "\n";
}

}  // namespace bfss

#endif  // BFSS_DATASET_HPP
