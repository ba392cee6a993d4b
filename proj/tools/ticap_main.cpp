// ticap: thermal information capacity scans for qubit memories.
//
// Subcommands mirror the library scan modes: heatmap, scatter, jc-times,
// single. Exit codes: 0 success, 2 invalid arguments, 3 I/O failure,
// 4 numerical invariant violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ticap/scan.hpp"
#include "ticap/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_temp_token(const std::string& token) {
  if (token == "zero") {
    return 0.0;
  }
  if (token == "inf" || token == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) {
      throw CliError("trailing characters in temperature: " + token);
    }
    if (std::isnan(value) || value < 0.0) {
      throw CliError("temperatures must be >= 0, got: " + token);
    }
    return value;
  } catch (const std::invalid_argument&) {
    throw CliError("cannot parse temperature: " + token);
  } catch (const std::out_of_range&) {
    throw CliError("temperature out of range: " + token);
  }
}

ticap::QubitState parse_source(const std::string& text) {
  std::istringstream in(text);
  double r = 0.0, re = 0.0, im = 0.0;
  char c1 = 0, c2 = 0;
  if (!(in >> r >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
    throw CliError("source must be 'r,re(alpha),im(alpha)', got: " + text);
  }
  std::string rest;
  if (in >> rest) {
    throw CliError("trailing characters in source: " + text);
  }
  try {
    return ticap::QubitState(r, ticap::Complex(re, im));
  } catch (const std::exception& e) {
    throw CliError(std::string("invalid source state: ") + e.what());
  }
}

std::string temp_to_token(double t) {
  if (std::isinf(t)) {
    return "inf";
  }
  return ticap::format_cell(t);
}

void apply_config_file(const std::string& path, ticap::ScanSpec& spec,
                       std::vector<std::string>& temp_tokens,
                       std::string& source_text, std::string& format_text) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open config file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CliError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw CliError("config root must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "temp") {
      temp_tokens.clear();
      for (const auto& item : value) {
        temp_tokens.push_back(item.is_string()
                                  ? item.get<std::string>()
                                  : ticap::format_cell(item.get<double>()));
      }
    } else if (key == "resolution") {
      spec.bloch_resolution = value.get<int>();
    } else if (key == "seed") {
      spec.seed = value.get<unsigned long long>();
    } else if (key == "source") {
      source_text = value.get<std::string>();
    } else if (key == "efficiencies") {
      spec.efficiencies = value.get<std::vector<double>>();
    } else if (key == "out") {
      spec.output_path = value.get<std::string>();
    } else if (key == "format") {
      format_text = value.get<std::string>();
    } else if (key == "threads") {
      spec.threads = value.get<int>();
    } else {
      throw CliError("unknown config key: " + key);
    }
  }
}

nlohmann::ordered_json effective_config(const ticap::ScanSpec& spec,
                                        const std::string& mode_name) {
  nlohmann::ordered_json doc;
  doc["mode"] = mode_name;
  std::vector<std::string> temps;
  for (double t : spec.temperatures) {
    temps.push_back(temp_to_token(t));
  }
  doc["temp"] = temps;
  doc["resolution"] = spec.bloch_resolution;
  doc["seed"] = spec.seed;
  if (spec.source) {
    doc["source"] = ticap::format_cell(spec.source->r()) + "," +
                    ticap::format_cell(spec.source->alpha().real()) + "," +
                    ticap::format_cell(spec.source->alpha().imag());
  } else {
    doc["source"] = nullptr;
  }
  doc["efficiencies"] = spec.efficiencies;
  doc["out"] = spec.output_path;
  doc["format"] = spec.format == ticap::OutputFormat::csv ? "csv" : "json";
  doc["threads"] = spec.threads;
  return doc;
}

struct ModeArgs {
  CLI::App* cmd = nullptr;
  std::string name;
  ticap::ScanMode mode;
  std::vector<std::string> temp_tokens;
  int resolution = 0;
  unsigned long long seed = 0;
  std::string source_text;
  std::vector<double> efficiencies;
  std::string out_path;
  std::string format_text;
  std::string config_path;
  int threads = -1;
  bool show_config = false;
};

int run_mode(const ModeArgs& args) {
  ticap::ScanSpec spec = ticap::ScanSpec::defaults(args.mode);

  std::vector<std::string> temp_tokens;
  std::string source_text;
  std::string format_text;

  if (!args.config_path.empty()) {
    apply_config_file(args.config_path, spec, temp_tokens, source_text,
                      format_text);
  }
  if (args.cmd->count("--temp") > 0) {
    temp_tokens = args.temp_tokens;
  }
  if (args.cmd->count("--resolution") > 0) {
    spec.bloch_resolution = args.resolution;
  }
  if (args.cmd->count("--seed") > 0) {
    spec.seed = args.seed;
  }
  if (args.cmd->count("--source") > 0) {
    source_text = args.source_text;
  }
  if (args.cmd->count("--efficiencies") > 0) {
    spec.efficiencies = args.efficiencies;
  }
  if (args.cmd->count("--out") > 0) {
    spec.output_path = args.out_path;
  }
  if (args.cmd->count("--format") > 0) {
    format_text = args.format_text;
  }
  if (args.cmd->count("--threads") > 0) {
    spec.threads = args.threads;
  }

  if (!temp_tokens.empty()) {
    spec.temperatures.clear();
    for (const auto& token : temp_tokens) {
      spec.temperatures.push_back(parse_temp_token(token));
    }
  }
  if (!source_text.empty()) {
    spec.source = parse_source(source_text);
  }
  if (!format_text.empty()) {
    if (format_text == "csv") {
      spec.format = ticap::OutputFormat::csv;
    } else if (format_text == "json") {
      spec.format = ticap::OutputFormat::json;
    } else {
      throw CliError("format must be csv or json, got: " + format_text);
    }
  }

  // Argument-level validation, so misuse reports exit code 2 rather than 4.
  if (spec.temperatures.empty()) {
    throw CliError("temperature list is empty");
  }
  if (spec.bloch_resolution < 2) {
    throw CliError("resolution must be >= 2");
  }
  if (args.mode == ticap::ScanMode::single && !spec.source) {
    throw CliError("single mode requires --source");
  }
  if (args.mode == ticap::ScanMode::jc_times) {
    if (!spec.source) {
      throw CliError("jc-times requires a source state");
    }
    for (double t : spec.temperatures) {
      if (std::isinf(t)) {
        throw CliError("jc-times requires finite temperatures");
      }
    }
    if (spec.efficiencies.empty()) {
      throw CliError("jc-times requires a nonempty efficiency list");
    }
    for (std::size_t i = 0; i < spec.efficiencies.size(); ++i) {
      const double e = spec.efficiencies[i];
      if (!(e > 0.0 && e <= 1.0)) {
        throw CliError("efficiencies must lie in (0, 1]");
      }
      if (i > 0 && e < spec.efficiencies[i - 1]) {
        throw CliError("efficiencies must be ascending");
      }
    }
  }

  if (args.show_config) {
    std::cout << effective_config(spec, args.name).dump(1) << "\n";
    return kExitOk;
  }

  ticap::run_scan(spec);
  return kExitOk;
}

void add_mode(CLI::App& app, std::vector<ModeArgs>& modes,
              const std::string& name, ticap::ScanMode mode,
              const std::string& description) {
  modes.emplace_back();
  ModeArgs& args = modes.back();
  args.name = name;
  args.mode = mode;
  CLI::App* cmd = app.add_subcommand(name, description);
  args.cmd = cmd;
  cmd->add_option("--temp", args.temp_tokens,
                  "Temperatures kB T / delta_E (tokens: zero, inf)")
      ->delimiter(',');
  cmd->add_option("--resolution", args.resolution,
                  "Grid points per axis (heatmap) or samples (scatter)");
  cmd->add_option("--seed", args.seed, "Seed for sampled states");
  cmd->add_option("--source", args.source_text,
                  "Source state as r,re(alpha),im(alpha)");
  cmd->add_option("--efficiencies", args.efficiencies,
                  "Capacity fractions for jc-times, ascending in (0,1]")
      ->delimiter(',');
  cmd->add_option("--out", args.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", args.format_text, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", args.config_path,
                  "JSON config file; command-line flags take precedence");
  cmd->add_option("--threads", args.threads, "Worker threads (0 = hardware)");
  cmd->add_flag("--show-config", args.show_config,
                "Print the effective configuration and exit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal information capacity of qubit memories"};
  app.require_subcommand(1);

  std::vector<ModeArgs> modes;
  modes.reserve(4);
  add_mode(app, modes, "heatmap", ticap::ScanMode::heatmap,
           "Capacity over the X-Z Bloch half-disk per temperature");
  add_mode(app, modes, "scatter", ticap::ScanMode::scatter,
           "Capacity vs resource monotones on sampled states");
  add_mode(app, modes, "jc-times", ticap::ScanMode::jc_times,
           "Jaynes-Cummings time to reach capacity fractions");
  add_mode(app, modes, "single", ticap::ScanMode::single,
           "Full capacity report for one state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& args : modes) {
      if (args.cmd->parsed()) {
        return run_mode(args);
      }
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
