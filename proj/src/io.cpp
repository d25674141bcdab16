// Copyright 2026 The riskfield Authors
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

#include "riskfield/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "riskfield/error.hpp"

namespace riskfield {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct CsvRow {
  std::size_t line;
  std::vector<std::string> cells;
};

// Comma-separated rows; blank lines and '#' comments are skipped. Double
// quotes may wrap a cell.
std::vector<CsvRow> SplitCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    CsvRow row{line_no, {}};
    std::string cell;
    bool quoted = false;
    for (char ch : trimmed) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        row.cells.emplace_back(Trim(cell));
        cell.clear();
      } else {
        cell += ch;
      }
    }
    if (quoted) throw ParseError("unterminated quoted cell", line_no);
    row.cells.emplace_back(Trim(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

double ParseNumber(std::string_view cell, std::size_t row, std::size_t column) {
  cell = Trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    throw ParseError("expected a number, got '" + std::string(cell) + "'", row, column);
  }
  return value;
}

char FirstSignificant(std::string_view text) {
  const auto t = Trim(text);
  return t.empty() ? '\0' : t.front();
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<double> NumberArray(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing numeric array '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ParseError(std::string("non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

RiskTable parse_table_csv(std::string_view text) {
  const auto rows = SplitCsv(text);
  if (rows.empty()) throw ParseError("empty risk table");
  const auto& header = rows.front();
  if (header.cells.size() < 2) throw ParseError("header needs a label and at least one stage", header.line);
  RiskTable table;
  for (std::size_t k = 1; k < header.cells.size(); ++k) {
    table.nodes.push_back(ParseNumber(header.cells[k], header.line, k + 1));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != header.cells.size()) {
      throw ParseError("expected " + std::to_string(header.cells.size()) + " cells, found " +
                           std::to_string(row.cells.size()),
                       row.line);
    }
    table.concentrations.push_back(ParseNumber(row.cells[0], row.line, 1));
    std::vector<double> values;
    for (std::size_t k = 1; k < row.cells.size(); ++k) {
      values.push_back(ParseNumber(row.cells[k], row.line, k + 1));
    }
    table.values.push_back(std::move(values));
  }
  if (table.values.empty()) throw ParseError("risk table has no data rows");
  table.validate();
  return table;
}

RiskTable parse_table_json(std::string_view text) {
  const json j = ParseJson(text);
  if (!j.is_object()) throw ParseError("risk table JSON must be an object");
  RiskTable table;
  table.concentrations = NumberArray(j, "concentrations");
  table.nodes = NumberArray(j, "nodes");
  if (!j.contains("values") || !j["values"].is_array()) throw ParseError("missing 'values' matrix");
  std::size_t r = 0;
  for (const auto& row : j["values"]) {
    ++r;
    if (!row.is_array()) throw ParseError("'values' rows must be arrays", r);
    std::vector<double> values;
    std::size_t col = 0;
    for (const auto& v : row) {
      ++col;
      if (!v.is_number()) throw ParseError("non-numeric value", r, col);
      values.push_back(v.get<double>());
    }
    table.values.push_back(std::move(values));
  }
  table.validate();
  return table;
}

RiskTable parse_table(std::string_view text) {
  const char first = FirstSignificant(text);
  if (first == '\0') throw ParseError("empty input");
  return first == '{' ? parse_table_json(text) : parse_table_csv(text);
}

namespace {

// Shortest text that parses back to the same double.
std::string Shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string table_to_csv(const RiskTable& table) {
  std::string out = "concentration";
  for (double t : table.nodes) out += ',' + Shortest(t);
  out += '\n';
  for (std::size_t i = 0; i < table.concentrations.size(); ++i) {
    out += Shortest(table.concentrations[i]);
    for (double v : table.values[i]) out += ',' + Shortest(v);
    out += '\n';
  }
  return out;
}

json field_to_json(const RiskField& field) {
  if (!field.is_affine_in_c()) throw DomainError("only fields affine in c serialize to JSON");
  const auto a = field.slope().coefficients();
  const auto b = field.intercept().coefficients();
  const auto& d = field.domain();
  return json{{"a", std::vector<double>(a.begin(), a.end())},
              {"b", std::vector<double>(b.begin(), b.end())},
              {"domain", {{"t", {d.t_min, d.t_max}}, {"c", {d.c_min, d.c_max}}}}};
}

RiskField field_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("field JSON must be an object");
  const auto a = NumberArray(j, "a");
  const auto b = NumberArray(j, "b");
  Rectangle domain = kDefaultDomain;
  if (j.contains("domain")) {
    const json& d = j["domain"];
    const auto t = NumberArray(d, "t");
    const auto c = NumberArray(d, "c");
    if (t.size() != 2 || c.size() != 2) throw ParseError("domain ranges need two entries each");
    domain = {t[0], t[1], c[0], c[1]};
  }
  return RiskField(Polynomial(a), Polynomial(b), domain);
}

bool looks_like_field_json(std::string_view text) {
  if (FirstSignificant(text) != '{') return false;
  try {
    const json j = json::parse(text);
    return j.is_object() && j.contains("a") && j.contains("b");
  } catch (const json::parse_error&) {
    return false;
  }
}

exposure::ExposureProfile to_exposure_profile(const SurveyProfile& p) {
  exposure::ExposureProfile e;
  e.concentration_mg_per_kg = p.concentration_mg_per_kg;
  e.intake_kg_per_day = p.intake_g_per_month / 1000.0 / exposure::kDaysPerMonth;
  e.body_weight_kg = p.body_weight_kg;
  e.exposure_days_per_week = p.days_per_week;
  e.exposure_years = p.exposure_years > 0.0 ? p.exposure_years : p.age_max - p.age_min;
  e.averaging_years = p.averaging_years > 0.0 ? p.averaging_years : p.age_max - p.age_min;
  e.substitution_fraction = p.substitution_fraction;
  e.reference_dose = p.rfd;
  e.life_expectancy_years = p.life_expectancy_years;
  return e;
}

namespace {

constexpr const char* kRequiredColumns[] = {
    "group",         "age_min", "age_max",
    "body_weight_kg", "intake_g_per_month", "portions_per_month",
    "concentration_mg_per_kg", "rfd", "substitution_fraction"};
constexpr const char* kOptionalColumns[] = {"days_per_week", "exposure_years", "averaging_years",
                                            "life_expectancy_years"};

double* Field(SurveyProfile& p, std::string_view name) {
  if (name == "age_min") return &p.age_min;
  if (name == "age_max") return &p.age_max;
  if (name == "body_weight_kg") return &p.body_weight_kg;
  if (name == "intake_g_per_month") return &p.intake_g_per_month;
  if (name == "portions_per_month") return &p.portions_per_month;
  if (name == "concentration_mg_per_kg") return &p.concentration_mg_per_kg;
  if (name == "rfd") return &p.rfd;
  if (name == "substitution_fraction") return &p.substitution_fraction;
  if (name == "days_per_week") return &p.days_per_week;
  if (name == "exposure_years") return &p.exposure_years;
  if (name == "averaging_years") return &p.averaging_years;
  if (name == "life_expectancy_years") return &p.life_expectancy_years;
  return nullptr;
}

// Every problem in every row, each naming the row and field.
void ValidateProfiles(const std::vector<SurveyProfile>& profiles,
                      const std::vector<std::size_t>& rows) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const SurveyProfile& p = profiles[i];
    const std::string where = "row " + std::to_string(rows[i]) + ": ";
    auto require = [&](bool ok, const char* msg) {
      if (!ok) problems.push_back(where + msg);
    };
    require(!p.group.empty(), "group must be non-empty");
    require(p.age_min >= 0.0, "age_min must be >= 0");
    require(p.age_max > p.age_min, "age_max must exceed age_min");
    require(p.body_weight_kg > 0.0, "body_weight_kg must be > 0");
    require(p.intake_g_per_month >= 0.0, "intake_g_per_month must be >= 0");
    require(p.portions_per_month > 0.0, "portions_per_month must be > 0");
    require(p.concentration_mg_per_kg > 0.0, "concentration_mg_per_kg must be > 0");
    require(p.rfd > 0.0, "rfd must be > 0");
    require(p.substitution_fraction >= 0.0 && p.substitution_fraction <= 1.0,
            "substitution_fraction must lie in [0, 1]");
    require(p.days_per_week >= 0.0 && p.days_per_week <= 7.0, "days_per_week must lie in [0, 7]");
    require(p.exposure_years >= 0.0, "exposure_years must be >= 0");
    require(p.averaging_years >= 0.0, "averaging_years must be >= 0");
    require(p.life_expectancy_years > 0.0, "life_expectancy_years must be > 0");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

}  // namespace

std::vector<SurveyProfile> parse_profiles_csv(std::string_view text) {
  const auto rows = SplitCsv(text);
  if (rows.empty()) throw ParseError("empty profile table");
  const auto& header = rows.front();
  std::vector<std::string> columns;
  for (const auto& cell : header.cells) columns.push_back(cell);
  for (const char* required : kRequiredColumns) {
    if (std::find(columns.begin(), columns.end(), required) == columns.end()) {
      throw ParseError(std::string("missing column '") + required + "'", header.line);
    }
  }
  SurveyProfile probe;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const bool known = columns[k] == "group" || Field(probe, columns[k]) != nullptr;
    if (!known) throw ParseError("unknown column '" + columns[k] + "'", header.line, k + 1);
  }
  std::vector<SurveyProfile> out;
  std::vector<std::size_t> lines;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != columns.size()) {
      throw ParseError("expected " + std::to_string(columns.size()) + " cells, found " +
                           std::to_string(row.cells.size()),
                       row.line);
    }
    SurveyProfile p;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k] == "group") {
        p.group = row.cells[k];
      } else if (!row.cells[k].empty()) {
        *Field(p, columns[k]) = ParseNumber(row.cells[k], row.line, k + 1);
      }
    }
    out.push_back(std::move(p));
    lines.push_back(row.line);
  }
  if (out.empty()) throw ParseError("profile table has no data rows");
  ValidateProfiles(out, lines);
  return out;
}

std::vector<SurveyProfile> parse_profiles_json(std::string_view text) {
  json j = ParseJson(text);
  if (j.is_object() && j.contains("profiles")) j = j["profiles"];
  if (!j.is_array()) throw ParseError("profile JSON must be an array of objects");
  std::vector<SurveyProfile> out;
  std::vector<std::size_t> rows;
  std::size_t r = 0;
  for (const auto& item : j) {
    ++r;
    if (!item.is_object()) throw ParseError("profile entries must be objects", r);
    for (const char* required : kRequiredColumns) {
      if (!item.contains(required)) {
        throw ParseError(std::string("missing field '") + required + "'", r);
      }
    }
    SurveyProfile p;
    for (const auto& [key, value] : item.items()) {
      if (key == "group") {
        if (!value.is_string()) throw ParseError("'group' must be a string", r);
        p.group = value.get<std::string>();
        continue;
      }
      double* slot = Field(p, key);
      if (!slot) throw ParseError("unknown field '" + key + "'", r);
      if (!value.is_number()) throw ParseError("field '" + key + "' must be numeric", r);
      *slot = value.get<double>();
    }
    out.push_back(std::move(p));
    rows.push_back(r);
  }
  if (out.empty()) throw ParseError("profile JSON has no entries");
  ValidateProfiles(out, rows);
  return out;
}

std::vector<SurveyProfile> parse_profiles(std::string_view text) {
  const char first = FirstSignificant(text);
  if (first == '\0') throw ParseError("empty input");
  return (first == '[' || first == '{') ? parse_profiles_json(text) : parse_profiles_csv(text);
}

std::vector<SurveyProfile> builtin_profiles() {
  struct Group {
    const char* name;
    double age_min, age_max, body_weight, intake, portions, exposure_years, averaging_years;
  };
  // Babies and boys share the survey's children row; exposure-factor years
  // are the fitted inputs.
  constexpr Group kGroups[] = {
      {"Babies", 1, 6, 34.94, 188.17, 1.3, 14, 5},
      {"Boys", 6, 12, 34.94, 188.17, 1.3, 6, 6},
      {"Men", 12, 60, 73.44, 262.60, 2.6, 48, 48},
      {"Senior", 60, 90, 68.85, 193.38, 2.1, 78, 30},
  };
  std::vector<SurveyProfile> out;
  for (double c : kBuiltinConcentrations) {
    for (const Group& g : kGroups) {
      SurveyProfile p;
      p.group = g.name;
      p.age_min = g.age_min;
      p.age_max = g.age_max;
      p.body_weight_kg = g.body_weight;
      p.intake_g_per_month = g.intake;
      p.portions_per_month = g.portions;
      p.concentration_mg_per_kg = c;
      p.rfd = exposure::kRfdSensitive;
      p.substitution_fraction = exposure::kSharkSubstitutionFraction;
      p.days_per_week = 7.0;
      p.exposure_years = g.exposure_years;
      p.averaging_years = g.averaging_years;
      out.push_back(p);
    }
  }
  return out;
}

std::string profiles_to_csv(const std::vector<SurveyProfile>& profiles) {
  std::ostringstream out;
  out.precision(10);
  out << "group,age_min,age_max,body_weight_kg,intake_g_per_month,portions_per_month,"
         "concentration_mg_per_kg,rfd,substitution_fraction,days_per_week,exposure_years,"
         "averaging_years,life_expectancy_years\n";
  for (const auto& p : profiles) {
    out << p.group << ',' << p.age_min << ',' << p.age_max << ',' << p.body_weight_kg << ','
        << p.intake_g_per_month << ',' << p.portions_per_month << ',' << p.concentration_mg_per_kg
        << ',' << p.rfd << ',' << p.substitution_fraction << ',' << p.days_per_week << ','
        << p.exposure_years << ',' << p.averaging_years << ',' << p.life_expectancy_years << '\n';
  }
  return out.str();
}

ExposureAssessment assess(const SurveyProfile& p) {
  const exposure::ExposureProfile e = to_exposure_profile(p);
  ExposureAssessment a;
  a.group = p.group;
  a.concentration_mg_per_kg = p.concentration_mg_per_kg;
  a.intake_kg_per_day = e.intake_kg_per_day * e.substitution_fraction;
  a.exposure_factor =
      exposure::exposure_factor(e.exposure_days_per_week, e.exposure_years, e.averaging_years);
  a.exposure_mg_per_kg_day = exposure::exposure(e);
  a.verdict = exposure::risk_coefficient(a.exposure_mg_per_kg_day, e.reference_dose);

  const double portion_kg = p.intake_g_per_month / 1000.0 / p.portions_per_month;
  const double portions_per_day = p.portions_per_month / exposure::kDaysPerMonth;
  const double lifetime_days = e.life_expectancy_years * exposure::kDaysPerYear;
  const double dose = exposure::total_dose(p.concentration_mg_per_kg, portion_kg, lifetime_days,
                                           portions_per_day);
  a.average_daily_dose =
      exposure::average_daily_dose(dose, p.body_weight_kg, e.life_expectancy_years);
  a.limit_kg_per_day = exposure::consumption_limit_kg_per_day(e.reference_dose, p.body_weight_kg,
                                                              p.concentration_mg_per_kg);
  a.limit_meals_per_month =
      portion_kg > 0.0 ? exposure::consumption_limit_meals_per_month(a.limit_kg_per_day, portion_kg)
                       : std::numeric_limits<double>::infinity();
  return a;
}

}  // namespace riskfield
