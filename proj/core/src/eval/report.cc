// Copyright 2026 The Corn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corn/eval/report.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace corn::eval {
namespace {

std::string Cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string Pad(const std::string& s, size_t width, bool left) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

std::string ReportToJson(const MetricReport& report) {
  nlohmann::ordered_json doc;
  doc["task"] = report.task;
  if (report.accuracy) doc["accuracy"] = *report.accuracy;
  if (report.collapsed_accuracy) doc["collapsed_accuracy"] = *report.collapsed_accuracy;
  doc["macro_precision"] = report.macro_precision;
  doc["macro_recall"] = report.macro_recall;
  doc["macro_f1"] = report.macro_f1;
  doc["total"] = report.total;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ClassMetrics& m : report.per_class) {
    classes.push_back({{"label", m.label},
                       {"precision", m.precision},
                       {"recall", m.recall},
                       {"f1", m.f1},
                       {"support", m.support},
                       {"predicted", m.predicted}});
  }
  doc["per_class"] = std::move(classes);
  return doc.dump(2);
}

std::string ReportToTable(const MetricReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"label", "precision", "recall", "f1", "support", "predicted"});
  for (const ClassMetrics& m : report.per_class) {
    rows.push_back({m.label, Cell(m.precision), Cell(m.recall), Cell(m.f1),
                    std::to_string(m.support), std::to_string(m.predicted)});
  }
  rows.push_back({"macro", Cell(report.macro_precision), Cell(report.macro_recall),
                  Cell(report.macro_f1), std::to_string(report.total), ""});
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  out << "task: " << report.task << "\n";
  if (report.accuracy) {
    out << (report.collapsed_accuracy ? "accuracy (B/I/O): " : "accuracy: ")
        << Cell(*report.accuracy) << "\n";
  }
  if (report.collapsed_accuracy) {
    out << "accuracy (T/O): " << Cell(*report.collapsed_accuracy) << "\n";
  }
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += Pad(row[c], widths[c], c == 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace corn::eval
