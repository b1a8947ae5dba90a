/*
 * Copyright 2026 The calib Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "calib/basic_measures.h"
#include "calib/distance.h"
#include "calib/errors.h"
#include "calib/fixtures.h"
#include "calib/io.h"
#include "calib/online.h"
#include "calib/weighted.h"
#include "json_writer.h"
#include "measures.h"

#ifndef CALIB_VERSION
#define CALIB_VERSION "unknown"
#endif

namespace calib::tools {
namespace {

constexpr int kSchema = 1;

// Knobs shared by the subcommands; unset means "not given on the command
// line" so that the config file can fill it in.
struct CommonFlags {
  std::string config_path;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> oracle_cap;
  std::optional<double> tolerance;
  std::optional<std::string> kernel;
  std::optional<std::uint64_t> seed;
  std::string output;
};

void AddCommonFlags(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config_path,
                  "JSON file with grid, oracle_cap, tolerance, kernel, seed");
  app->add_option("--grid", flags.grid, "grid resolution g (default 1000)");
  app->add_option("--oracle-cap", flags.oracle_cap,
                  "largest oracle enumeration (default 12, at most 13)");
  app->add_option("--tolerance", flags.tolerance,
                  "slack for relation checks (default 1e-9)");
  app->add_option("--kernel", flags.kernel,
                  "kernel for the bare 'kernel' measure (default laplace)");
  app->add_option("--seed", flags.seed, "seed; falls back to $CALIB_SEED");
  app->add_option("-o,--output", flags.output, "write here instead of stdout");
}

std::optional<std::uint64_t> ParseSeed(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

// flags > config file > defaults; the seed additionally falls back to
// $CALIB_SEED before its default of 0.
MeasureConfig ResolveConfig(const CommonFlags& flags, std::ostream& err) {
  MeasureConfig config;
  std::optional<std::uint64_t> config_seed;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw ParseError("cannot open config '" + flags.config_path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ParseError("malformed config: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      try {
        if (key == "grid") {
          config.grid = value.get<std::size_t>();
        } else if (key == "oracle_cap") {
          config.oracle_cap = value.get<std::size_t>();
        } else if (key == "tolerance") {
          config.tolerance = value.get<double>();
        } else if (key == "kernel") {
          config.kernel = value.get<std::string>();
        } else if (key == "seed") {
          config_seed = value.get<std::uint64_t>();
        } else if (key == "quadratic_resolution") {
          config.quadratic_resolution = value.get<double>();
        } else {
          throw ParseError("unknown config key '" + key + "'");
        }
      } catch (const Json::exception&) {
        throw ParseError("config key '" + key + "' has the wrong type");
      }
    }
    config.base_dir = std::filesystem::path(flags.config_path).parent_path();
    if (config.base_dir.empty()) config.base_dir = ".";
  }
  if (flags.grid) config.grid = *flags.grid;
  if (flags.oracle_cap) config.oracle_cap = *flags.oracle_cap;
  if (flags.tolerance) config.tolerance = *flags.tolerance;
  if (flags.kernel) config.kernel = *flags.kernel;
  if (flags.seed) {
    config.seed = *flags.seed;
  } else if (config_seed) {
    config.seed = *config_seed;
  } else if (const char* env = std::getenv("CALIB_SEED")) {
    const auto parsed = ParseSeed(env);
    if (!parsed) throw InvalidArgumentError("CALIB_SEED is not an integer");
    config.seed = *parsed;
  }
  // Task files named on the command line resolve against the working
  // directory.
  if (flags.config_path.empty()) config.base_dir = ".";

  if (config.grid < 2) throw InvalidArgumentError("grid must be >= 2");
  if (config.oracle_cap > kOracleHardCap) {
    throw InvalidArgumentError("oracle cap may not exceed " +
                               std::to_string(kOracleHardCap));
  }
  if (config.oracle_cap == kOracleHardCap) {
    err << "warning: oracle cap " << kOracleHardCap
        << " allows enumerations of about 27.6 million partitions\n";
  }
  if (!(config.tolerance >= 0.0)) {
    throw InvalidArgumentError("tolerance must be >= 0");
  }
  return config;
}

Json ConfigMeta(const MeasureConfig& config) {
  return {{"grid", config.grid},
          {"oracle_cap", config.oracle_cap},
          {"tolerance", config.tolerance},
          {"kernel", config.kernel},
          {"seed", config.seed},
          {"quadratic_resolution", config.quadratic_resolution}};
}

std::string Fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct LoadedInput {
  std::optional<EmpiricalJoint> joint;
  std::optional<FiniteInstance> instance;
  std::string format;
  std::string digest;
};

std::string DetectFormat(const std::string& path, const std::string& format) {
  if (format != "auto") {
    if (format != "csv" && format != "jsonl" && format != "instance") {
      throw InvalidArgumentError("format must be csv, jsonl or instance");
    }
    return format;
  }
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return "csv";
  if (ext == ".jsonl") return "jsonl";
  if (ext == ".json") return "instance";
  throw InvalidArgumentError("cannot infer the format of '" + path +
                             "'; pass --format");
}

LoadedInput LoadInput(const std::string& path, const std::string& format) {
  LoadedInput loaded;
  loaded.format = DetectFormat(path, format);
  const std::string bytes = ReadAll(path);
  loaded.digest = Fnv1a64(bytes);
  std::istringstream in(bytes);
  if (loaded.format == "csv") {
    loaded.joint = ReadSamplesCsv(in);
  } else if (loaded.format == "jsonl") {
    loaded.joint = ReadSamplesJsonl(in);
  } else {
    loaded.instance = ReadInstanceJson(in);
    loaded.joint = Project(*loaded.instance);
  }
  return loaded;
}

void Emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw InvalidArgumentError("cannot write '" + output + "'");
  file << text;
}

void EmitJson(const Json& doc, const std::string& output, std::ostream& out) {
  std::ostringstream text;
  WriteJson(text, doc);
  Emit(text.str(), output, out);
}

double RequireFinite(const std::string& id, double value) {
  if (!std::isfinite(value)) {
    throw InvalidArgumentError("measure '" + id + "' is not finite");
  }
  return value;
}

// --- report ---------------------------------------------------------------

struct ReportFlags {
  CommonFlags common;
  std::string input;
  std::string format = "auto";
  std::string measures = "ece,ece2,tv,smce,emd,cdl";
  bool verify = false;
};

int Report(const ReportFlags& flags, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> ids = SplitList(flags.measures);
  if (ids.empty()) throw InvalidArgumentError("no measures requested");
  for (const auto& id : ids) CheckMeasureId(id);
  const MeasureConfig config = ResolveConfig(flags.common, err);
  const LoadedInput input = LoadInput(flags.input, flags.format);
  const MeasureInput measure_input{
      *input.joint, input.instance ? &*input.instance : nullptr};

  std::vector<std::string> warnings;
  Json measures = Json::object();
  for (const auto& id : ids) {
    measures[id] = RequireFinite(
        id, ComputeMeasure(id, measure_input, config, &warnings));
  }
  Json meta = {{"version", CALIB_VERSION},
               {"input", flags.input},
               {"input_format", input.format},
               {"input_digest", input.digest},
               {"num_atoms", input.joint->atoms().size()},
               {"num_values", input.joint->num_values()}};
  meta.update(ConfigMeta(config));
  Json doc = {{"schema", kSchema}, {"command", "report"},
              {"measures", measures}, {"meta", meta}};
  if (!warnings.empty()) doc["warnings"] = warnings;
  int code = kExitOk;
  if (flags.verify) {
    doc["relations"] = VerifyRelations(*input.joint, config.tolerance);
    if (!doc["relations"]["all_hold"].get<bool>()) code = kExitFailedCheck;
  }
  EmitJson(doc, flags.common.output, out);
  return code;
}

// --- oracle ---------------------------------------------------------------

struct OracleFlags {
  CommonFlags common;
  std::string input;
};

int Oracle(const OracleFlags& flags, std::ostream& out, std::ostream& err) {
  const MeasureConfig config = ResolveConfig(flags.common, err);
  const LoadedInput input = LoadInput(flags.input, "instance");
  const EmpiricalJoint& joint = *input.joint;
  const OracleOptions oracle{config.oracle_cap};

  const double dce = DceOracle(*input.instance, oracle);
  const double dce_upper = DceUpperOracle(joint, oracle);
  const IntceOptResult intce = IntceOpt(joint, config.grid);
  const double smce = SmoothCe(joint);
  const double ece = Ece(joint);
  const double tol = config.tolerance;
  const double grid_slack = 2.0 / static_cast<double>(config.grid);

  Json checks = {
      {"smce_half_le_dce", smce / 2.0 <= dce + tol},
      {"dce_le_dce_upper", dce <= dce_upper + tol},
      {"dce_upper_le_4_sqrt_dce", dce_upper <= 4.0 * std::sqrt(dce) + tol},
      {"dce_upper_le_intce", dce_upper <= intce.value + grid_slack + tol},
      {"dce_upper_le_ece", dce_upper <= ece + tol},
  };
  bool all = true;
  for (const auto& item : checks) all = all && item.get<bool>();
  checks["all_hold"] = all;

  Json meta = {{"version", CALIB_VERSION},
               {"input", flags.input},
               {"input_digest", input.digest},
               {"num_points", input.instance->size()},
               {"num_values", joint.num_values()},
               {"intce_grid_slack", grid_slack}};
  meta.update(ConfigMeta(config));
  Json doc = {{"schema", kSchema},
              {"command", "oracle"},
              {"dce", dce},
              {"dce_upper", dce_upper},
              {"intce", intce.value},
              {"smce", smce},
              {"ece", ece},
              {"sandwich_checks", checks},
              {"meta", meta}};
  if (intce.unseparated) {
    doc["warnings"] = {"intce: grid cannot separate every pair of predictions"};
  }
  EmitJson(doc, flags.common.output, out);
  return all ? kExitOk : kExitFailedCheck;
}

// --- online ---------------------------------------------------------------

struct OnlineFlags {
  CommonFlags common;
  std::string forecaster = "running_mean";
  std::string adversary = "threshold";
  std::size_t rounds = 1000;
  std::string measures = "ece,smce,cdl";
  std::size_t curve_points = 20;
  std::string transcript;
};

void CheckSequenceMeasures(const std::vector<std::string>& ids) {
  const Transcript probe = Transcript::Create({{0.5, 1}});
  for (const auto& id : ids) SequenceMeasure(probe, id);
}

int Online(const OnlineFlags& flags, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> ids = SplitList(flags.measures);
  if (ids.empty()) throw InvalidArgumentError("no measures requested");
  CheckSequenceMeasures(ids);
  const MeasureConfig config = ResolveConfig(flags.common, err);
  const auto forecaster = MakeForecaster(flags.forecaster);
  const auto adversary = MakeAdversary(flags.adversary, forecaster);
  const Transcript transcript =
      Run(*forecaster, *adversary, flags.rounds, config.seed);

  Json measures = Json::object();
  for (const auto& id : ids) {
    measures[id] = RequireFinite(id, SequenceMeasure(transcript, id));
  }
  Json curves = Json::object();
  if (flags.curve_points > 0) {
    curves["t"] = Json::array();
    for (const auto& id : ids) {
      Json values = Json::array();
      const auto curve = PrefixCurve(transcript, id, flags.curve_points);
      for (const auto& point : curve) {
        if (curves["t"].size() < curve.size()) curves["t"].push_back(point.first);
        values.push_back(point.second);
      }
      curves[id] = values;
    }
  }
  if (!flags.transcript.empty()) {
    std::ostringstream csv;
    WriteTranscriptCsv(csv, transcript);
    Emit(csv.str(), flags.transcript, out);
  }
  double mean_p = 0.0;
  double mean_y = 0.0;
  for (const Round& round : transcript.rounds()) {
    mean_p += round.p;
    mean_y += round.y;
  }
  const auto t = static_cast<double>(transcript.size());
  Json doc = {{"schema", kSchema},
              {"command", "online"},
              {"forecaster", forecaster->Name()},
              {"adversary", adversary->Name()},
              {"rounds", transcript.size()},
              {"seed", config.seed},
              {"mean_prediction", mean_p / t},
              {"mean_label", mean_y / t},
              {"measures", measures},
              {"curves", curves},
              {"meta", {{"version", CALIB_VERSION},
                        {"scaling", "rounds times the measure of the uniform "
                                    "joint over rounds"},
                        {"curve_points", flags.curve_points}}}};
  if (!flags.transcript.empty()) doc["transcript"] = flags.transcript;
  EmitJson(doc, flags.common.output, out);
  return kExitOk;
}

// --- fixture --------------------------------------------------------------

struct FixtureFlags {
  CommonFlags common;
  std::string name;
  std::optional<double> eps;
  std::size_t n = 1000;
  std::string variant = "p1";
  std::string emit;
  bool check = false;
};

Fixture BuildFixture(const FixtureFlags& flags, double eps) {
  if (flags.name == "two_point") return TwoPoint(eps);
  if (flags.name == "cdl_example_1") return CdlExample1(eps);
  if (flags.name == "cdl_example_2") return CdlExample2(eps, flags.n);
  if (flags.name == "quadratic_gap") {
    QuadraticGapFixtures gap = QuadraticGap(eps);
    if (flags.variant == "p1") return gap.p1;
    if (flags.variant == "p2") return gap.p2;
    if (flags.variant == "coarse") return gap.coarse;
    throw InvalidArgumentError("variant must be p1, p2 or coarse");
  }
  throw InvalidArgumentError("unknown fixture '" + flags.name +
                             "'; try two_point, quadratic_gap, cdl_example_1 "
                             "or cdl_example_2");
}

double DefaultEps(const std::string& name) {
  return name == "cdl_example_1" || name == "cdl_example_2" ? 0.05 : 0.1;
}

int FixtureCommand(const FixtureFlags& flags, std::ostream& out,
                   std::ostream& err) {
  const MeasureConfig config = ResolveConfig(flags.common, err);
  const double eps = flags.eps.value_or(DefaultEps(flags.name));
  const Fixture fixture = BuildFixture(flags, eps);

  Json expected = Json::array();
  for (const Expectation& e : fixture.expected) {
    expected.push_back({{"measure", e.measure},
                        {"value", e.value},
                        {"tolerance", e.tolerance},
                        {"comparison", ComparisonName(e.comparison)},
                        {"source", ProvenanceName(e.source)}});
  }
  Json params = {{"eps", eps}};
  if (flags.name == "cdl_example_2") params["n"] = flags.n;
  if (flags.name == "quadratic_gap") params["variant"] = flags.variant;
  Json doc = {{"schema", kSchema},
              {"command", "fixture"},
              {"name", fixture.name},
              {"params", params},
              {"expected", expected}};

  int code = kExitOk;
  if (flags.check) {
    const EmpiricalJoint joint = Project(fixture.instance);
    const MeasureInput input{joint, &fixture.instance};
    Json checks = Json::array();
    for (const Expectation& e : fixture.expected) {
      const double actual = ComputeMeasure(e.measure, input, config);
      const bool holds = e.Holds(actual);
      if (!holds) code = kExitFailedCheck;
      checks.push_back({{"measure", e.measure},
                        {"actual", actual},
                        {"expected", e.value},
                        {"comparison", ComparisonName(e.comparison)},
                        {"holds", holds}});
    }
    doc["checks"] = checks;
  }

  if (flags.emit.empty()) {
    Json points = Json::array();
    for (const InstancePoint& p : fixture.instance.points()) {
      points.push_back({{"id", p.id},
                        {"mass", p.mass},
                        {"pred", p.pred},
                        {"cond_mean", p.cond_mean}});
    }
    doc["instance"] = points;
  } else {
    std::ostringstream text;
    if (std::filesystem::path(flags.emit).extension() == ".csv") {
      WriteSamplesCsv(text, Project(fixture.instance));
    } else {
      WriteInstanceJson(text, fixture.instance);
    }
    Emit(text.str(), flags.emit, out);
    doc["emitted"] = flags.emit;
  }
  EmitJson(doc, flags.common.output, out);
  return code;
}

// --- plotdata -------------------------------------------------------------

struct PlotFlags {
  CommonFlags common;
  std::string reliability;
  std::string format = "auto";
  std::string transcript;
  std::string measures = "ece";
  std::size_t curve_points = 0;
};

int PlotData(const PlotFlags& flags, std::ostream& out, std::ostream&) {
  std::ostringstream csv;
  csv.precision(17);
  if (!flags.reliability.empty() == !flags.transcript.empty()) {
    throw InvalidArgumentError("pass exactly one of --reliability, --transcript");
  }
  if (!flags.reliability.empty()) {
    const LoadedInput input = LoadInput(flags.reliability, flags.format);
    csv << "prediction,mean_label,mass\n";
    for (const LevelSet& level : input.joint->level_sets()) {
      csv << level.v << ',' << level.Mean() << ',' << level.mass << '\n';
    }
  } else {
    const std::vector<std::string> ids = SplitList(flags.measures);
    if (ids.empty()) throw InvalidArgumentError("no measures requested");
    CheckSequenceMeasures(ids);
    std::istringstream in(ReadAll(flags.transcript));
    const Transcript transcript = ReadTranscriptCsv(in);
    const std::size_t points =
        flags.curve_points == 0 ? transcript.size() : flags.curve_points;
    std::vector<std::vector<std::pair<std::size_t, double>>> curves;
    for (const auto& id : ids) {
      curves.push_back(PrefixCurve(transcript, id, points));
    }
    csv << 't';
    for (const auto& id : ids) csv << ',' << id;
    csv << '\n';
    for (std::size_t row = 0; row < curves.front().size(); ++row) {
      csv << curves.front()[row].first;
      for (const auto& curve : curves) csv << ',' << curve[row].second;
      csv << '\n';
    }
  }
  Emit(csv.str(), flags.common.output, out);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Calibration measures: reports, oracles, online episodes, "
               "fixtures and plot data.",
               "calib"};
  app.set_version_flag("--version", CALIB_VERSION);
  app.require_subcommand(1);

  ReportFlags report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "compute measures for one input");
  AddCommonFlags(report_cmd, report.common);
  report_cmd->add_option("input", report.input, "CSV, JSONL or instance JSON")
      ->required();
  report_cmd->add_option("--format", report.format, "auto|csv|jsonl|instance");
  report_cmd->add_option("-m,--measures", report.measures,
                         "comma-separated measure ids");
  report_cmd->add_flag("--verify-relations", report.verify,
                       "check ece^2 <= ece2^2 <= cdl <= 2 ece");

  OracleFlags oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustive distance oracles for an instance JSON");
  AddCommonFlags(oracle_cmd, oracle.common);
  oracle_cmd->add_option("input", oracle.input, "instance JSON")->required();

  OnlineFlags online;
  CLI::App* online_cmd =
      app.add_subcommand("online", "play a forecaster against an adversary");
  AddCommonFlags(online_cmd, online.common);
  online_cmd->add_option("--forecaster", online.forecaster,
                         "constant:<c> | running_mean[:<a>,<b>] | "
                         "grid_random:<m>");
  online_cmd->add_option("--adversary", online.adversary,
                         "ones | zeros | bernoulli:<q> | threshold");
  online_cmd->add_option("-T,--rounds", online.rounds, "number of rounds")
      ->check(CLI::PositiveNumber);
  online_cmd->add_option("-m,--measures", online.measures,
                         "ece, ece2, smce, cdl, binned:<b>");
  online_cmd->add_option("--curve-points", online.curve_points,
                         "prefix lengths per curve (0 disables)");
  online_cmd->add_option("--transcript", online.transcript,
                         "also write the rounds as CSV");

  FixtureFlags fixture;
  CLI::App* fixture_cmd =
      app.add_subcommand("fixture", "emit a worked example with known values");
  AddCommonFlags(fixture_cmd, fixture.common);
  fixture_cmd->add_option("--name", fixture.name,
                          "two_point | quadratic_gap | cdl_example_1 | "
                          "cdl_example_2")
      ->required();
  fixture_cmd->add_option("--eps", fixture.eps, "fixture parameter");
  fixture_cmd->add_option("--n", fixture.n, "points for cdl_example_2");
  fixture_cmd->add_option("--variant", fixture.variant,
                          "quadratic_gap instance: p1 | p2 | coarse");
  fixture_cmd->add_option("--emit", fixture.emit,
                          "write the instance (.json) or weighted samples "
                          "(.csv)");
  fixture_cmd->add_flag("--check", fixture.check,
                        "recompute every expected value");

  PlotFlags plot;
  CLI::App* plot_cmd = app.add_subcommand(
      "plotdata", "CSV for reliability diagrams and prefix curves");
  AddCommonFlags(plot_cmd, plot.common);
  plot_cmd->add_option("--reliability", plot.reliability,
                       "input whose level sets to tabulate");
  plot_cmd->add_option("--format", plot.format, "auto|csv|jsonl|instance");
  plot_cmd->add_option("--transcript", plot.transcript, "transcript CSV");
  plot_cmd->add_option("-m,--measures", plot.measures,
                       "sequence measures for --transcript");
  plot_cmd->add_option("--curve-points", plot.curve_points,
                       "prefix lengths (default: every round)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (report_cmd->parsed()) return Report(report, out, err);
    if (oracle_cmd->parsed()) return Oracle(oracle, out, err);
    if (online_cmd->parsed()) return Online(online, out, err);
    if (fixture_cmd->parsed()) return FixtureCommand(fixture, out, err);
    if (plot_cmd->parsed()) return PlotData(plot, out, err);
  } catch (const UnknownMeasureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnknownMeasure;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleCap;
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace calib::tools
