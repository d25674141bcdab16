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


// riskfield command-line front end. Talks to the library only through the
// C interface in riskfield/riskfield.h.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riskfield/riskfield.h"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kOutDirEnv = "RISKFIELD_OUT_DIR";

// Library failure carried to main with its status.
struct LibraryError : std::runtime_error {
  LibraryError(rf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  rf_status status;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(rf_status status) {
  if (status != RF_OK) {
    throw LibraryError(status, std::string(rf_status_name(status)) + ": " + rf_last_error());
  }
}

struct StringDeleter {
  void operator()(char* s) const { rf_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct FieldDeleter {
  void operator()(rf_field* f) const { rf_field_free(f); }
};
using Field = std::unique_ptr<rf_field, FieldDeleter>;

struct TableDeleter {
  void operator()(rf_table* t) const { rf_table_free(t); }
};
using Table = std::unique_ptr<rf_table, TableDeleter>;

// Calls `fn(char**)` and takes ownership of the produced string.
template <typename Fn>
std::string Take(Fn&& fn) {
  char* raw = nullptr;
  Check(fn(&raw));
  OwnedString owned(raw);
  return raw ? std::string(raw) : std::string();
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::vector<double> ParseList(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": '" + item + "' is not a number");
    }
  }
  return out;
}

struct RunConfig {
  std::optional<std::string> input;
  bool paper_dataset = false;
  std::optional<rf_domain> domain;
  std::vector<double> levels{0.5, 1.0, 2.0, 5.0, 10.0};
  double threshold = 1.0;
  int grid = 256;
  std::uint64_t seed = 42;
  std::uint64_t samples = 1'000'000;
  std::string out_dir;
  std::vector<std::pair<double, double>> flow_starts;
  int start_lattice = 4;
  double step = 1e-3;
  std::size_t max_steps = 1'000'000;
  std::optional<std::pair<double, double>> age_search;
  std::optional<std::string> profiles;
};

// Raw flag values; an option applies only if it was given.
struct Flags {
  std::string config;
  std::string input;
  bool paper_dataset = false;
  std::string domain;
  std::string levels;
  double threshold = 1.0;
  int grid = 256;
  std::uint64_t seed = 42;
  std::uint64_t samples = 1'000'000;
  std::string out;
  std::vector<std::string> starts;
  int start_lattice = 4;
  double step = 1e-3;
  std::size_t max_steps = 1'000'000;
  std::string age_search;
  std::string profiles;
};

rf_domain DomainFrom(const std::vector<double>& v) {
  if (v.size() != 4) throw UsageError("--domain expects tmin,tmax,cmin,cmax");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<double, double> PairFrom(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw UsageError(std::string("--") + what + " expects two numbers");
  return {v[0], v[1]};
}

void ApplyConfigFile(const std::string& path, RunConfig& cfg) {
  json j;
  try {
    j = json::parse(ReadText(path));
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config " + path + ": top level must be an object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "input") cfg.input = v.get<std::string>();
      else if (key == "paper_dataset") cfg.paper_dataset = v.get<bool>();
      else if (key == "domain") cfg.domain = DomainFrom(v.get<std::vector<double>>());
      else if (key == "levels") cfg.levels = v.get<std::vector<double>>();
      else if (key == "threshold") cfg.threshold = v.get<double>();
      else if (key == "grid") cfg.grid = v.get<int>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "samples") cfg.samples = v.get<std::uint64_t>();
      else if (key == "out") cfg.out_dir = v.get<std::string>();
      else if (key == "flow_starts") cfg.flow_starts = v.get<std::vector<std::pair<double, double>>>();
      else if (key == "start_lattice") cfg.start_lattice = v.get<int>();
      else if (key == "step") cfg.step = v.get<double>();
      else if (key == "max_steps") cfg.max_steps = v.get<std::size_t>();
      else if (key == "age_search") cfg.age_search = PairFrom(v.get<std::vector<double>>(), "age-search");
      else if (key == "profiles") cfg.profiles = v.get<std::string>();
      else throw UsageError("config " + path + ": unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
}

RunConfig Resolve(const CLI::App& cmd, const Flags& f) {
  RunConfig cfg;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) cfg.out_dir = env;
  if (cfg.out_dir.empty()) cfg.out_dir = "riskfield-out";
  if (!f.config.empty()) ApplyConfigFile(f.config, cfg);

  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--input")) cfg.input = f.input;
  if (given("--paper-dataset")) cfg.paper_dataset = f.paper_dataset;
  if (given("--domain")) cfg.domain = DomainFrom(ParseList(f.domain, "domain"));
  if (given("--levels")) cfg.levels = ParseList(f.levels, "levels");
  if (given("--threshold")) cfg.threshold = f.threshold;
  if (given("--grid")) cfg.grid = f.grid;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--samples")) cfg.samples = f.samples;
  if (given("--out")) cfg.out_dir = f.out;
  if (given("--start")) {
    cfg.flow_starts.clear();
    for (const auto& s : f.starts) cfg.flow_starts.push_back(PairFrom(ParseList(s, "start"), "start"));
  }
  if (given("--start-lattice")) cfg.start_lattice = f.start_lattice;
  if (given("--step")) cfg.step = f.step;
  if (given("--max-steps")) cfg.max_steps = f.max_steps;
  if (given("--age-search")) cfg.age_search = PairFrom(ParseList(f.age_search, "age-search"), "age-search");
  if (given("--profiles")) cfg.profiles = f.profiles;

  if (cfg.grid < 16) throw UsageError("--grid must be at least 16");
  if (cfg.start_lattice < 1) throw UsageError("--start-lattice must be at least 1");
  return cfg;
}

void RequireSource(const RunConfig& cfg) {
  if (cfg.input.has_value() == cfg.paper_dataset) {
    throw UsageError("give exactly one of --input PATH or --paper-dataset");
  }
}

// The data source behind every field-level command.
struct Source {
  Field field;
  Table table;  // null when the input was a field JSON or the built-in field
};

Source LoadSource(const RunConfig& cfg, bool fit_from_table) {
  RequireSource(cfg);
  Source src;
  rf_field* f = nullptr;
  rf_table* t = nullptr;
  if (cfg.paper_dataset) {
    Check(rf_table_builtin(&t));
    src.table.reset(t);
    if (fit_from_table) {
      Check(rf_table_build_field(t, nullptr, &f));
    } else {
      Check(rf_field_builtin(&f));
    }
  } else {
    const std::string text = ReadText(*cfg.input);
    const bool is_field = text.find("\"a\"") != std::string::npos &&
                          text.find("\"b\"") != std::string::npos &&
                          text.find_first_not_of(" \t\r\n") != std::string::npos &&
                          text[text.find_first_not_of(" \t\r\n")] == '{';
    if (is_field) {
      Check(rf_field_from_json(text.c_str(), &f));
    } else {
      Check(rf_table_parse(text.c_str(), &t));
      src.table.reset(t);
      Check(rf_table_build_field(t, nullptr, &f));
    }
  }
  src.field.reset(f);
  if (cfg.domain) {
    rf_field* g = nullptr;
    Check(rf_field_with_domain(src.field.get(), &*cfg.domain, &g));
    src.field.reset(g);
  }
  return src;
}

json ParseJson(const std::string& text) { return json::parse(text); }

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

fs::path OutPath(const RunConfig& cfg, const char* name) { return fs::path(cfg.out_dir) / name; }

rf_domain DomainOf(const Source& src) {
  rf_domain d;
  Check(rf_field_domain(src.field.get(), &d));
  return d;
}

std::pair<double, double> AgeSearch(const RunConfig& cfg) {
  if (cfg.age_search) return *cfg.age_search;
  if (cfg.domain) return {cfg.domain->t_min, cfg.domain->t_max};
  return {1.0, 6.0};
}

std::vector<double> FlowStarts(const RunConfig& cfg, const rf_domain& d) {
  std::vector<double> out;
  if (!cfg.flow_starts.empty()) {
    for (const auto& [t, c] : cfg.flow_starts) {
      out.push_back(t);
      out.push_back(c);
    }
    return out;
  }
  const int n = cfg.start_lattice;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back(d.t_min + (d.t_max - d.t_min) * (i + 0.5) / n);
      out.push_back(d.c_min + (d.c_max - d.c_min) * (j + 0.5) / n);
    }
  }
  return out;
}

// ---- commands; each returns the JSON it wrote as the primary result ----

json RunFit(const RunConfig& cfg) {
  Source src = LoadSource(cfg, /*fit_from_table=*/true);
  if (!src.table) throw UsageError("fit needs a risk table (CSV or JSON), not a field");
  const std::string report = Take([&](char** out) {
    return rf_table_fit_report(src.table.get(), cfg.domain ? &*cfg.domain : nullptr,
                               cfg.paper_dataset ? 1 : 0, out);
  });
  json fit = ParseJson(report);
  json field = fit["field"];
  if (cfg.paper_dataset) {
    // The built-in dataset also carries its published field, which is the
    // canonical field for downstream commands.
    Field canonical;
    rf_field* f = nullptr;
    Check(rf_field_builtin(&f));
    canonical.reset(f);
    field = ParseJson(Take([&](char** out) { return rf_field_to_json(canonical.get(), out); }));
    fit["canonical_field"] = field;
  }
  WriteText(OutPath(cfg, "fit.json"), Dump(fit));
  WriteText(OutPath(cfg, "field.json"), Dump(field));
  return fit;
}

json AnalysisOf(const RunConfig& cfg, const Source& src) {
  rf_analysis_options o;
  Check(rf_analysis_options_default(src.field.get(), &o));
  o.threshold = cfg.threshold;
  o.levels = cfg.levels.data();
  o.level_count = cfg.levels.size();
  o.grid = cfg.grid;
  o.seed = cfg.seed;
  o.monte_carlo_samples = cfg.samples;
  return ParseJson(Take([&](char** out) { return rf_analysis_report(src.field.get(), &o, out); }));
}

void WriteAnalysisPlots(const RunConfig& cfg, const Source& src) {
  const rf_domain d = DomainOf(src);
  WriteText(OutPath(cfg, "contours.svg"), Take([&](char** out) {
              return rf_contour_svg(src.field.get(), &d, cfg.levels.data(), cfg.levels.size(),
                                    cfg.threshold, cfg.grid, out);
            }));
  WriteText(OutPath(cfg, "region.svg"), Take([&](char** out) {
              return rf_contour_svg(src.field.get(), &d, &cfg.threshold, 1, cfg.threshold,
                                    cfg.grid, out);
            }));
}

json Summary(const json& analysis) {
  return {{"mean_risk", analysis["mean_risk"]},
          {"region_area", analysis["region_area"]},
          {"probability", analysis["probability"]},
          {"threshold", analysis["threshold"]},
          {"critical_points", analysis.value("critical_points", "unknown")},
          {"monte_carlo", analysis["monte_carlo"]}};
}

json RunAnalyze(const RunConfig& cfg) {
  Source src = LoadSource(cfg, false);
  json analysis = AnalysisOf(cfg, src);
  WriteText(OutPath(cfg, "analysis.json"), Dump(analysis));
  WriteAnalysisPlots(cfg, src);
  return Summary(analysis);
}

json GeometryOf(const RunConfig& cfg, const Source& src) {
  const auto [lo, hi] = AgeSearch(cfg);
  return ParseJson(
      Take([&](char** out) { return rf_geometry_report(src.field.get(), lo, hi, out); }));
}

json RunGeometry(const RunConfig& cfg) {
  Source src = LoadSource(cfg, false);
  json geometry = GeometryOf(cfg, src);
  const auto [lo, hi] = AgeSearch(cfg);
  WriteText(OutPath(cfg, "geometry.json"), Dump(geometry));
  WriteText(OutPath(cfg, "curvature.svg"),
            Take([&](char** out) { return rf_curvature_svg(src.field.get(), lo, hi, out); }));
  return geometry;
}

json FlowOf(const RunConfig& cfg, const Source& src, std::string* csv) {
  const std::vector<double> starts = FlowStarts(cfg, DomainOf(src));
  char* json_raw = nullptr;
  char* csv_raw = nullptr;
  Check(rf_flow_batch(src.field.get(), starts.data(), starts.size() / 2, cfg.step, cfg.max_steps,
                      &json_raw, &csv_raw));
  OwnedString j(json_raw), c(csv_raw);
  *csv = csv_raw;
  return ParseJson(json_raw);
}

json RunFlow(const RunConfig& cfg) {
  Source src = LoadSource(cfg, false);
  std::string csv;
  json summary = FlowOf(cfg, src, &csv);
  const rf_domain d = DomainOf(src);
  const std::vector<double> starts = FlowStarts(cfg, d);
  WriteText(OutPath(cfg, "flow.json"), Dump(summary));
  WriteText(OutPath(cfg, "flows.csv"), csv);
  WriteText(OutPath(cfg, "flow.svg"), Take([&](char** out) {
              return rf_flow_svg(src.field.get(), &d, starts.data(), starts.size() / 2, cfg.step,
                                 cfg.max_steps, 15, out);
            }));
  return summary;
}

json ExposureOf(const RunConfig& cfg, std::string* csv) {
  std::optional<std::string> text;
  if (cfg.profiles) {
    text = ReadText(*cfg.profiles);
  } else if (cfg.input && !cfg.paper_dataset) {
    text = ReadText(*cfg.input);
  } else if (!cfg.paper_dataset) {
    throw UsageError("exposure needs --profiles PATH, --input PATH or --paper-dataset");
  }
  char* json_raw = nullptr;
  char* csv_raw = nullptr;
  Check(rf_assess_profiles(text ? text->c_str() : nullptr, &json_raw, &csv_raw));
  OwnedString j(json_raw), c(csv_raw);
  *csv = csv_raw;
  return ParseJson(json_raw);
}

json RunExposure(const RunConfig& cfg) {
  std::string csv;
  json report = ExposureOf(cfg, &csv);
  WriteText(OutPath(cfg, "exposure.json"), Dump(report));
  WriteText(OutPath(cfg, "exposure.csv"), csv);
  return report;
}

json RunReport(const RunConfig& cfg) {
  json bundle;
  Source src = LoadSource(cfg, false);
  bundle["field"] =
      ParseJson(Take([&](char** out) { return rf_field_to_json(src.field.get(), out); }));
  if (src.table) bundle["fit"] = RunFit(cfg);
  bundle["analysis"] = AnalysisOf(cfg, src);
  WriteText(OutPath(cfg, "analysis.json"), Dump(bundle["analysis"]));
  WriteAnalysisPlots(cfg, src);
  bundle["geometry"] = RunGeometry(cfg);
  bundle["flow"] = RunFlow(cfg);
  if (cfg.paper_dataset || cfg.profiles) bundle["exposure"] = RunExposure(cfg);
  bundle["settings"] = {{"seed", cfg.seed},
                        {"samples", cfg.samples},
                        {"grid", cfg.grid},
                        {"threshold", cfg.threshold},
                        {"levels", cfg.levels},
                        {"step", cfg.step},
                        {"max_steps", cfg.max_steps}};
  WriteText(OutPath(cfg, "report.json"), Dump(bundle));
  return Summary(bundle["analysis"]);
}

void AddCommonOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its keys")
      ->check(CLI::ExistingFile);
  cmd->add_option("--input", f.input, "risk table (CSV/JSON) or field JSON");
  cmd->add_flag("--paper-dataset", f.paper_dataset, "use the built-in dataset");
  cmd->add_option("--domain", f.domain, "tmin,tmax,cmin,cmax");
  cmd->add_option("--levels", f.levels, "contour levels L1,L2,...");
  cmd->add_option("--threshold", f.threshold, "risk threshold for the critical region");
  cmd->add_option("--grid", f.grid, "marching-squares cells per axis (>= 16)");
  cmd->add_option("--seed", f.seed, "Monte Carlo seed");
  cmd->add_option("--samples", f.samples, "Monte Carlo sample count");
  cmd->add_option("--out", f.out, std::string("output directory (default $") + kOutDirEnv + ")");
  cmd->add_option("--start", f.starts, "flow start t,c (repeatable)");
  cmd->add_option("--start-lattice", f.start_lattice, "n x n flow starts when no --start given");
  cmd->add_option("--step", f.step, "RK4 step in dynamic time");
  cmd->add_option("--max-steps", f.max_steps, "RK4 step budget");
  cmd->add_option("--age-search", f.age_search, "critical-age search interval lo,hi");
  cmd->add_option("--profiles", f.profiles, "exposure profile CSV/JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riskfield: risk-field fitting, analysis, geometry, flow and exposure"};
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char* name;
    const char* help;
    json (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"fit", "interpolate and regress a risk table into a field", RunFit},
      {"analyze", "mean risk, critical region, certificate and level curves", RunAnalyze},
      {"geometry", "Gaussian curvature, Hadamard check and critical ages", RunGeometry},
      {"flow", "gradient-flow trajectories and portrait", RunFlow},
      {"exposure", "risk coefficients for exposure profiles", RunExposure},
      {"report", "run every command and bundle the results", RunReport},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    AddCommonOptions(sub, flags);
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    try {
      const RunConfig cfg = Resolve(*sub, flags);
      std::cout << command->run(cfg).dump(2) << '\n';
      return 0;
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    } catch (const LibraryError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}
