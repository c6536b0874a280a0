#ifndef BFSS_DECISION_HPP
#define BFSS_DECISION_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bfss/soft_set.hpp"

namespace bfss {

enum class Polarity { positive, negative };

// One side of the tabular representation of a soft set: positive tables hold
// the satisfaction degrees, negative tables the counter-property degrees.
struct ValueTable {
  Polarity polarity = Polarity::positive;
  std::vector<std::string> objects;              // rows, universe order
  std::vector<std::string> params;               // columns, parameter order
  std::vector<std::vector<Degree>> cells;        // [object][param]

  bool operator==(const ValueTable&) const = default;
};

// counts[i][j] = number of parameters on which object i dominates-or-ties
// object j. The diagonal always equals the number of parameters.
struct ComparisonTable {
  std::vector<std::string> objects;
  std::vector<std::vector<long>> counts;

  bool operator==(const ComparisonTable&) const = default;
};

// Row sums, column sums and their difference per object. Scores always sum
// to zero across the universe.
struct ScoreTable {
  std::vector<std::string> objects;
  std::vector<long> row_sums;
  std::vector<long> col_sums;
  std::vector<long> scores;

  bool operator==(const ScoreTable&) const = default;
};

struct DecisionReport {
  ValueTable positive_values;
  ValueTable negative_values;
  ComparisonTable positive_comparison;
  ComparisonTable negative_comparison;
  ScoreTable membership;
  ScoreTable nonmembership;
  std::vector<long> final_scores;        // universe order
  std::vector<std::string> ranking;      // descending final score, ties by universe order
  std::vector<std::string> winners;      // argmax set, universe order

  bool operator==(const DecisionReport&) const = default;
};

// The chosen parameters' assignments, in chosen order.
inline BipolarFuzzySoftSet restrict_to(const BipolarFuzzySoftSet& f, const ParameterSet& chosen) {
  if (chosen.empty()) throw EmptyChoice("choice of parameters is empty");
  std::vector<BipolarFuzzySet> values;
  values.reserve(chosen.size());
  for (const auto& p : chosen) values.push_back(f.value(p));  // throws UnknownParameter
  return {f.universe(), chosen, std::move(values)};
}

inline std::pair<ValueTable, ValueTable> value_tables(const BipolarFuzzySoftSet& f) {
  ValueTable pos{Polarity::positive, f.universe()->objects(), f.params().names(), {}};
  ValueTable neg{Polarity::negative, f.universe()->objects(), f.params().names(), {}};
  const std::size_t n = f.universe()->size();
  pos.cells.resize(n);
  neg.cells.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    pos.cells[x].reserve(f.size());
    neg.cells[x].reserve(f.size());
    for (std::size_t e = 0; e < f.size(); ++e) {
      pos.cells[x].push_back(f.value(e).at(x).pos());
      neg.cells[x].push_back(f.value(e).at(x).neg());
    }
  }
  return {std::move(pos), std::move(neg)};
}

// Dominance direction depends on polarity: for positive tables a larger
// value dominates (>=); for negative tables a greater magnitude of the
// counter-property dominates (<=).
inline ComparisonTable comparison_table(const ValueTable& t) {
  const std::size_t n = t.objects.size();
  const std::size_t m = t.params.size();
  ComparisonTable out{t.objects, std::vector<std::vector<long>>(n, std::vector<long>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long c = 0;
      for (std::size_t e = 0; e < m; ++e) {
        const bool dominates = t.polarity == Polarity::positive
                                   ? t.cells[i][e] >= t.cells[j][e]
                                   : t.cells[i][e] <= t.cells[j][e];
        if (dominates) ++c;
      }
      out.counts[i][j] = c;
    }
  return out;
}

inline ScoreTable score_table(const ComparisonTable& c) {
  const std::size_t n = c.objects.size();
  ScoreTable out{c.objects, std::vector<long>(n, 0), std::vector<long>(n, 0),
                 std::vector<long>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.row_sums[i] += c.counts[i][j];
      out.col_sums[j] += c.counts[i][j];
    }
  for (std::size_t i = 0; i < n; ++i) out.scores[i] = out.row_sums[i] - out.col_sums[i];
  return out;
}

// The full pipeline: restrict, tabulate both polarities, compare, score,
// subtract, rank. Pure; identical inputs give identical reports.
inline DecisionReport decide(const BipolarFuzzySoftSet& f, const ParameterSet& chosen) {
  const auto restricted = restrict_to(f, chosen);
  auto [pos, neg] = value_tables(restricted);

  DecisionReport report;
  report.positive_values = std::move(pos);
  report.negative_values = std::move(neg);
  report.positive_comparison = comparison_table(report.positive_values);
  report.negative_comparison = comparison_table(report.negative_values);
  report.membership = score_table(report.positive_comparison);
  report.nonmembership = score_table(report.negative_comparison);

  const std::size_t n = report.membership.objects.size();
  report.final_scores.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    report.final_scores[i] = report.membership.scores[i] - report.nonmembership.scores[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.final_scores[a] > report.final_scores[b];
  });
  report.ranking.reserve(n);
  for (auto i : order) report.ranking.push_back(report.membership.objects[i]);

  if (n > 0) {
    const long best = *std::max_element(report.final_scores.begin(), report.final_scores.end());
    for (std::size_t i = 0; i < n; ++i)
      if (report.final_scores[i] == best) report.winners.push_back(report.membership.objects[i]);
  }
  return report;
}

}  // namespace bfss

#endif  // BFSS_DECISION_HPP
