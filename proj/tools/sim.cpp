#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "icnsim/metrics.hpp"
#include "icnsim/scenario.hpp"
#include "icnsim/simulator.hpp"

namespace fs = std::filesystem;
using namespace icnsim;

namespace {

constexpr int kConfigError = 2;
constexpr int kIoError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

/// A file path wins over a builtin of the same name.
std::pair<std::string, std::string> load_target(const std::string& target) {
  if (fs::is_regular_file(target)) return {target, read_file(target)};
  if (auto b = find_builtin(target)) return {"builtin:" + b->name, b->text};
  throw IoError("no such file or builtin: " + target);
}

void report_parse_errors(const std::string& origin, const ScenarioError& e) {
  for (const auto& issue : e.issues()) {
    std::cerr << origin;
    if (issue.line > 0) std::cerr << ':' << issue.line;
    std::cerr << ": " << issue.message << '\n';
  }
}

/// "out.csv" + tag -> "out.<tag>.csv"
fs::path tagged(const fs::path& base, const std::string& tag, const std::string& suffix) {
  fs::path p = base;
  const std::string ext = p.extension().string();
  p.replace_extension();
  std::string file = p.filename().string();
  if (!tag.empty()) file += "." + tag;
  file += suffix.empty() ? ext : suffix;
  return p.parent_path() / file;
}

std::string run_tag(const Scenario& s) {
  const auto slash = s.name.rfind('/');
  std::string tag = slash == std::string::npos ? std::string() : s.name.substr(slash + 1);
  for (char& c : tag) {
    if (c == '/' || c == ' ') c = '_';
  }
  return tag;
}

struct RunOutput {
  SummaryRow row;
  std::string trace;
  std::string requests_csv;
  std::string error;
};

RunOutput execute(const Scenario& s, bool want_trace) {
  RunOutput out;
  try {
    RunResult result = run(s, RunOptions{want_trace, 0});
    out.row = summarize(result);
    const auto deadlocked = detect_deadlock(result);
    std::ostringstream req;
    write_requests_csv(req, result, deadlocked);
    out.requests_csv = req.str();
    if (want_trace) out.trace = result.trace_text();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

int cmd_run(const std::string& target, std::optional<std::uint64_t> seed,
            std::optional<std::string> trace_path, std::optional<std::string> out_path,
            std::optional<double> scale, unsigned jobs) {
  const auto [origin, text] = load_target(target);
  Scenario base;
  try {
    base = parse_scenario(text);
  } catch (const ScenarioError& e) {
    report_parse_errors(origin, e);
    return kConfigError;
  }
  if (const char* env = std::getenv("SIM_SEED"); env && *env) {
    try {
      base.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "SIM_SEED is not an integer: " << env << '\n';
      return kConfigError;
    }
  }
  if (seed) base.seed = *seed;
  if (scale) base = scaled(base, *scale);
  if (base.resource_heavy && base.scale == 1.0) {
    std::cerr << "warning: " << base.name
              << " is resource heavy at full scale; consider --scale 0.25\n";
  }
  if (!trace_path) trace_path = base.trace_path;
  if (!out_path) out_path = base.metrics_path;

  const auto runs = expand_sweep(base);
  const bool sweep = runs.size() > 1;
  std::vector<RunOutput> outputs(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      outputs[i] = execute(runs[i], trace_path.has_value());
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(runs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = 0;
  std::vector<SummaryRow> rows;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto& o = outputs[i];
    if (!o.error.empty()) {
      std::cerr << runs[i].name << ": " << o.error << '\n';
      status = kConfigError;
      continue;
    }
    const std::string tag = sweep ? run_tag(runs[i]) : std::string();
    if (trace_path) write_file(tagged(*trace_path, tag, ""), o.trace);
    if (out_path) write_file(tagged(*out_path, tag, ".requests.csv"), o.requests_csv);
    std::cout << one_line_summary(o.row) << '\n';
    rows.push_back(o.row);
  }
  if (out_path) {
    std::ostringstream csv;
    write_summary_csv(csv, rows);
    write_file(*out_path, csv.str());
  } else if (sweep) {
    write_summary_csv(std::cout, rows);
  }
  return status;
}

int cmd_validate(const std::string& target) {
  const auto [origin, text] = load_target(target);
  try {
    const Scenario s = parse_scenario(text);
    build_network(s);
    std::cout << "ok: " << s.name << " (" << expand_sweep(s).size() << " run"
              << (expand_sweep(s).size() == 1 ? "" : "s") << ")\n";
    return 0;
  } catch (const ScenarioError& e) {
    report_parse_errors(origin, e);
  } catch (const ConfigError& e) {
    std::cerr << origin << ": " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic NDN / ADN forwarding-plane simulator"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a scenario file or builtin");
  std::string target;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> trace_path;
  std::optional<std::string> out_path;
  std::optional<double> scale;
  unsigned jobs = 1;
  run_cmd->add_option("target", target, "Scenario file or builtin name")->required();
  run_cmd->add_option("--seed", seed, "Override the scenario seed (beats SIM_SEED)");
  run_cmd->add_option("--trace", trace_path, "Write the event trace here");
  run_cmd->add_option("--out", out_path, "Write the summary CSV here");
  run_cmd->add_option("--scale", scale, "Shrink nodes, catalog and rates by this factor")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--jobs", jobs, "Parallel runs for sweeps")->check(CLI::Range(1u, 256u));

  auto* list_cmd = app.add_subcommand("list-builtins", "List embedded scenarios");

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a scenario");
  std::string validate_target;
  validate_cmd->add_option("file", validate_target, "Scenario file or builtin name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(target, seed, trace_path, out_path, scale, jobs);
    if (*validate_cmd) return cmd_validate(validate_target);
    if (*list_cmd) {
      for (const auto& b : builtin_scenarios()) {
        std::cout << b.name << "\t" << b.description << '\n';
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return 0;
}
