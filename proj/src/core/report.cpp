// Copyright 2026 The covscreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/report.hpp"

#include <algorithm>

#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/io.hpp"

namespace covscreen::report {

std::vector<MetricsRow> MetricsRows(const std::string& system,
                                    const eval::PositiveMetrics& m) {
  auto row = [&](const char* averaging, const eval::Prf& p) {
    return MetricsRow{system, averaging, p.precision, p.recall, p.f};
  };
  return {row("vaccine", m.vaccine), row("therapeutics", m.therapeutics),
          row("micro", m.micro), row("macro", m.macro)};
}

namespace {

std::string Num(double v) { return io::FormatFixed(v, 2); }

std::string MarkdownCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void MarkdownMetrics(std::string& out, const std::vector<MetricsRow>& rows) {
  out += "## Positive-class metrics\n\n";
  out += "| System | Averaging | Precision | Recall | F-measure |\n";
  out += "|---|---|---:|---:|---:|\n";
  for (const auto& r : rows) {
    out += "| " + MarkdownCell(r.system) + " | " + MarkdownCell(r.averaging) + " | " +
           Num(r.precision) + " | " + Num(r.recall) + " | " + Num(r.f) + " |\n";
  }
}

void MarkdownCategories(std::string& out, const eval::CategoryTable& t) {
  out += "\n## Category analysis\n\n";
  out += "Categories: 1 = positive with lexicon, 2 = negative with lexicon, "
         "3 = positive without lexicon, 4 = negative without lexicon.\n\n";
  out += "| Category | Total | Percent |";
  std::string rule = "|---:|---:|---:|";
  for (const auto& s : t.systems) {
    out += " " + MarkdownCell(s) + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (int c = 1; c <= 4; ++c) {
    out += "| " + std::to_string(c) + " | " + std::to_string(t.totals[c - 1]) + " | " +
           Num(t.Percent(c)) + " |";
    for (const auto& s : t.systems) {
      out += " " + std::to_string(t.correct.at(s)[c - 1]) + " |";
    }
    out += "\n";
  }
}

}  // namespace

std::string RenderCategoryCsv(const eval::CategoryTable& table) {
  std::string out = "category,total,percent";
  for (const auto& s : table.systems) out += "," + csv::Escape(s);
  out += "\n";
  for (int c = 1; c <= 4; ++c) {
    out += std::to_string(c) + "," + std::to_string(table.totals[c - 1]) + "," +
           Num(table.Percent(c));
    for (const auto& s : table.systems) {
      out += "," + std::to_string(table.correct.at(s)[c - 1]);
    }
    out += "\n";
  }
  return out;
}

std::string Render(const Report& report, Format format) {
  std::string out;
  if (format == Format::kMarkdown) {
    out += "# Screening evaluation report\n\n";
    if (report.kappa) out += "Cohen's kappa: " + Num(*report.kappa) + "\n\n";
    MarkdownMetrics(out, report.metrics);
    if (report.categories) MarkdownCategories(out, *report.categories);
    return out;
  }
  out += "system,averaging,precision,recall,f_measure\n";
  for (const auto& r : report.metrics) {
    out += csv::Escape(r.system) + "," + csv::Escape(r.averaging) + "," +
           Num(r.precision) + "," + Num(r.recall) + "," + Num(r.f) + "\n";
  }
  if (report.kappa) out += "\nstatistic,value\ncohen_kappa," + Num(*report.kappa) + "\n";
  if (report.categories) out += "\n" + RenderCategoryCsv(*report.categories);
  return out;
}

eval::CategoryTable ParseCategoryCsv(std::string_view text, std::string_view source) {
  const auto records = csv::Parse(text, source);
  if (records.empty()) throw ParseError(std::string(source) + ": empty category file");
  const auto& header = records.front().fields;
  if (header.size() < 3 || header[0] != "category" || header[1] != "total" ||
      header[2] != "percent") {
    throw ParseError(std::string(source) +
                     ":1: expected header category,total,percent[,system...]");
  }
  eval::CategoryTable t;
  t.systems.assign(header.begin() + 3, header.end());
  for (const auto& s : t.systems) t.correct[s] = {};
  if (t.correct.size() != t.systems.size()) {
    throw ParseError(std::string(source) + ":1: duplicate system column");
  }
  if (records.size() != 5) {
    throw ParseError(std::string(source) + ": expected exactly four category rows");
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = std::string(source) + ":" + std::to_string(rec.line);
    if (rec.fields.size() != header.size()) {
      throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields");
    }
    const auto cat = io::ParseUint(rec.fields[0], where);
    if (cat != r) throw ParseError(where + ": categories must be listed 1 to 4");
    t.totals[r - 1] = io::ParseUint(rec.fields[1], where);
    for (std::size_t s = 0; s < t.systems.size(); ++s) {
      t.correct[t.systems[s]][r - 1] = io::ParseUint(rec.fields[3 + s], where);
    }
  }
  return t;
}

std::vector<MetricsRow> ParseMetricsTsv(std::string_view text, std::string_view source) {
  const auto lines = io::NonBlankLines(text);
  if (lines.empty()) throw ParseError(std::string(source) + ": empty metrics file");
  const auto header = io::SplitTabs(lines.front().text);
  const std::vector<std::string_view> expected = {"system", "averaging", "precision",
                                                  "recall", "f_measure"};
  if (header.size() != expected.size() ||
      !std::equal(header.begin(), header.end(), expected.begin(),
                  [](std::string_view a, std::string_view b) { return io::Trim(a) == b; })) {
    throw ParseError(std::string(source) + ":" + std::to_string(lines.front().number) +
                     ": expected header system, averaging, precision, recall, f_measure");
  }
  std::vector<MetricsRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = std::string(source) + ":" + std::to_string(lines[i].number);
    const auto cols = io::SplitTabs(lines[i].text);
    if (cols.size() != 5) throw ParseError(where + ": expected 5 tab-separated columns");
    MetricsRow r{std::string(io::Trim(cols[0])), std::string(io::Trim(cols[1])),
                 io::ParseDouble(cols[2], where), io::ParseDouble(cols[3], where),
                 io::ParseDouble(cols[4], where)};
    for (double v : {r.precision, r.recall, r.f}) {
      if (v < 0.0 || v > 1.0) throw ValidationError(where + ": metric outside [0, 1]");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace covscreen::report
