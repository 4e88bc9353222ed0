#pragma once

#include "leibalg/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace leibalg {

/// One checked statement: applicability with reason, verdict, dimension data
/// and (for refutations) a witness that can be re-checked independently.
struct TheoremReport {
  std::string id;
  bool applicable = true;
  std::string reason;
  std::string verdict = "skipped";  // verified | refuted | skipped
  std::vector<std::pair<std::string, int>> dims;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
};

inline nlohmann::ordered_json matrix_json(const DenseMatrix<Rational>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  j["verdict"] = r.verdict;
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.dims) dims[k] = v;
  j["dims"] = std::move(dims);
  j["witnesses"] = r.witnesses;
  return j;
}

inline nlohmann::ordered_json reports_json(std::vector<TheoremReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const TheoremReport& a, const TheoremReport& b) { return a.id < b.id; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr;
}

inline bool any_refuted(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == "refuted") return true;
  return false;
}

}  // namespace leibalg
