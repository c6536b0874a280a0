#ifndef BFSS_RENDER_HPP
#define BFSS_RENDER_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "bfss/decision.hpp"

namespace bfss {

enum class ReportFormat { table, csv, json };

namespace detail {

// Plain-text table: columns padded to content width, two spaces between
// columns, last column unpadded. Locale-independent by construction.
inline std::string text_table(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c].size() > widths[c]) widths[c] = row[c].size();

  std::string out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out.append(widths[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

inline std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string csv_table(const std::string& title, const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
  std::string out = "table," + csv_escape(title) + "\n";
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(row[c]);
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

inline std::vector<std::vector<std::string>> value_rows(const ValueTable& t) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(t.objects.size());
  for (std::size_t i = 0; i < t.objects.size(); ++i) {
    std::vector<std::string> row{t.objects[i]};
    for (const auto& d : t.cells[i]) row.push_back(d.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<std::string>> comparison_rows(const ComparisonTable& t) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(t.objects.size());
  for (std::size_t i = 0; i < t.objects.size(); ++i) {
    std::vector<std::string> row{t.objects[i]};
    for (long c : t.counts[i]) row.push_back(std::to_string(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<std::string>> score_rows(const ScoreTable& t) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(t.objects.size());
  for (std::size_t i = 0; i < t.objects.size(); ++i)
    rows.push_back({t.objects[i], std::to_string(t.row_sums[i]), std::to_string(t.col_sums[i]),
                    std::to_string(t.scores[i])});
  return rows;
}

inline std::vector<std::vector<std::string>> final_rows(const DecisionReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(r.final_scores.size());
  for (std::size_t i = 0; i < r.final_scores.size(); ++i)
    rows.push_back({r.membership.objects[i], std::to_string(r.membership.scores[i]),
                    std::to_string(r.nonmembership.scores[i]),
                    std::to_string(r.final_scores[i])});
  return rows;
}

inline std::vector<std::string> labelled_header(const std::vector<std::string>& labels) {
  std::vector<std::string> header{"."};
  header.insert(header.end(), labels.begin(), labels.end());
  return header;
}

inline std::string winner_line(const DecisionReport& r) {
  if (r.winners.empty()) return "Winner: none";
  long best = 0;
  for (std::size_t i = 0; i < r.membership.objects.size(); ++i)
    if (r.membership.objects[i] == r.winners.front()) best = r.final_scores[i];
  std::string line = r.winners.size() == 1 ? "Winner: " : "Winners: ";
  for (std::size_t i = 0; i < r.winners.size(); ++i) {
    if (i) line += ", ";
    line += r.winners[i];
  }
  line += " (final score " + std::to_string(best) + ")";
  return line;
}

}  // namespace detail

inline std::string render_report_table(const DecisionReport& r) {
  using namespace detail;
  std::string out;
  out += "== Positive information ==\n";
  out += text_table(labelled_header(r.positive_values.params), value_rows(r.positive_values));
  out += "\n== Positive comparison ==\n";
  out += text_table(labelled_header(r.positive_comparison.objects),
                    comparison_rows(r.positive_comparison));
  out += "\n== Membership scores ==\n";
  out += text_table({".", "row_sum", "col_sum", "score"}, score_rows(r.membership));
  out += "\n== Negative information ==\n";
  out += text_table(labelled_header(r.negative_values.params), value_rows(r.negative_values));
  out += "\n== Negative comparison ==\n";
  out += text_table(labelled_header(r.negative_comparison.objects),
                    comparison_rows(r.negative_comparison));
  out += "\n== Non-membership scores ==\n";
  out += text_table({".", "row_sum", "col_sum", "score"}, score_rows(r.nonmembership));
  out += "\n== Final scores ==\n";
  out += text_table({".", "membership", "non_membership", "final"}, final_rows(r));
  out += "\n" + winner_line(r) + "\n";
  return out;
}

inline std::string render_report_csv(const DecisionReport& r) {
  using namespace detail;
  std::string out;
  out += csv_table("positive_information", labelled_header(r.positive_values.params),
                   value_rows(r.positive_values));
  out += "\n" + csv_table("positive_comparison", labelled_header(r.positive_comparison.objects),
                          comparison_rows(r.positive_comparison));
  out += "\n" + csv_table("membership_scores", {".", "row_sum", "col_sum", "score"},
                          score_rows(r.membership));
  out += "\n" + csv_table("negative_information", labelled_header(r.negative_values.params),
                          value_rows(r.negative_values));
  out += "\n" + csv_table("negative_comparison", labelled_header(r.negative_comparison.objects),
                          comparison_rows(r.negative_comparison));
  out += "\n" + csv_table("nonmembership_scores", {".", "row_sum", "col_sum", "score"},
                          score_rows(r.nonmembership));
  out += "\n" + csv_table("final_scores", {".", "membership", "non_membership", "final"},
                          final_rows(r));
  std::vector<std::vector<std::string>> winner_rows;
  for (const auto& w : r.winners) {
    long score = 0;
    for (std::size_t i = 0; i < r.membership.objects.size(); ++i)
      if (r.membership.objects[i] == w) score = r.final_scores[i];
    winner_rows.push_back({w, std::to_string(score)});
  }
  out += "\n" + csv_table("winners", {".", "final"}, winner_rows);
  return out;
}

inline std::string render_report_json(const DecisionReport& r) {
  nlohmann::ordered_json doc;
  doc["objects"] = r.positive_values.objects;
  doc["parameters"] = r.positive_values.params;

  const auto value_matrix = [](const ValueTable& t) {
    nlohmann::ordered_json rows = nlohmann::json::array();
    for (const auto& row : t.cells) {
      nlohmann::ordered_json cells = nlohmann::json::array();
      for (const auto& d : row) cells.push_back(d.str());
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  const auto score_block = [](const ScoreTable& t) {
    nlohmann::ordered_json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.objects.size(); ++i)
      rows.push_back({{"object", t.objects[i]},
                      {"row_sum", t.row_sums[i]},
                      {"col_sum", t.col_sums[i]},
                      {"score", t.scores[i]}});
    return rows;
  };

  doc["positive_information"] = value_matrix(r.positive_values);
  doc["positive_comparison"] = r.positive_comparison.counts;
  doc["membership_scores"] = score_block(r.membership);
  doc["negative_information"] = value_matrix(r.negative_values);
  doc["negative_comparison"] = r.negative_comparison.counts;
  doc["nonmembership_scores"] = score_block(r.nonmembership);

  nlohmann::ordered_json finals = nlohmann::json::array();
  for (std::size_t i = 0; i < r.final_scores.size(); ++i)
    finals.push_back({{"object", r.membership.objects[i]},
                      {"membership", r.membership.scores[i]},
                      {"non_membership", r.nonmembership.scores[i]},
                      {"final", r.final_scores[i]}});
  doc["final_scores"] = std::move(finals);
  doc["ranking"] = r.ranking;
  doc["winners"] = r.winners;
  return doc.dump(2) + "\n";
}

inline std::string render_report(const DecisionReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: return render_report_csv(r);
    case ReportFormat::json: return render_report_json(r);
    case ReportFormat::table: break;
  }
  return render_report_table(r);
}

}  // namespace bfss

#endif  // BFSS_RENDER_HPP
