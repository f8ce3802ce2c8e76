#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "nlbox/certify.hpp"
#include "nlbox/decompose.hpp"
#include "nlbox/error.hpp"
#include "nlbox/io.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/resource.hpp"
#include "nlbox/simulate.hpp"
#include "nlbox/suite.hpp"

namespace nlbox::cli {

namespace {

struct RunConfig {
  std::string box_path;
  std::string resource;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 42;
  double tol = kLpTol;
  std::string angles;
  std::vector<double> angle_list;
  std::size_t angle_grid_k = 0;
  std::string out_path;
  std::string format;
  std::size_t instances = 1000;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool corrupt_table = false;
};

// Raised for user-facing argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_angles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError("bad angle '" + item + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// Output is assembled in memory and written only once the command succeeded.
void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << payload;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not supported by this subcommand");
}

int cmd_analyze(RunConfig& cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text", "json", "csv"});
  const auto box = io::parse_box_json(read_file(cfg.box_path));
  const MeasureReport report = measure(box.box, {}, kStructuralTol);
  std::string payload;
  if (cfg.format == "json")
    payload = io::report_to_json(report);
  else if (cfg.format == "csv")
    payload = io::report_to_csv(report);
  else
    payload = (box.label.empty() ? "" : "label       " + box.label + "\n") +
              io::report_to_text(report);
  emit(cfg, payload, out);
  return kOk;
}

int cmd_decompose(RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text", "json", "csv"});
  const auto box = io::parse_box_json(read_file(cfg.box_path));
  try {
    const Decomposition d = min_comm_cost(box.box, cfg.tol);
    std::string payload;
    if (cfg.format == "json")
      payload = io::decomposition_to_json(d);
    else if (cfg.format == "csv")
      payload = io::decomposition_to_csv(d);
    else
      payload = io::decomposition_to_text(d);
    emit(cfg, payload, out);
    return kOk;
  } catch (const InfeasibleError& e) {
    if (cfg.format == "json")
      out << R"({"infeasible": true})" << "\n";
    else
      out << "infeasible\n";
    err << "decompose: " << e.what() << "\n";
    return kInfeasible;
  }
}

int cmd_certify(RunConfig& cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text", "json"});
  const auto box = io::parse_box_json(read_file(cfg.box_path));
  const Certificate c = complementarity_report(box.box, cfg.tol);
  emit(cfg, cfg.format == "json" ? io::certificate_to_json(c) : render_text(c), out);
  return kOk;
}

std::vector<double> resolve_angles(const RunConfig& cfg, bool sweep) {
  std::vector<double> angles = cfg.angle_list;
  if (!cfg.angles.empty()) {
    const auto more = parse_angles(cfg.angles);
    angles.insert(angles.end(), more.begin(), more.end());
  }
  if (cfg.angle_grid_k > 0) {
    const auto grid = angle_grid(cfg.angle_grid_k);
    angles.insert(angles.end(), grid.begin(), grid.end());
  }
  if (angles.empty()) {
    if (sweep)
      angles = angle_grid(7);
    else
      throw UsageError("simulate needs --angle, --angles or --angle-grid");
  }
  return angles;
}

int cmd_simulate(RunConfig& cfg, bool sweep, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "csv";
  require_format(cfg, {"csv", "json", "text"});
  if (cfg.trials == 0) throw UsageError("--trials must be at least 1");
  const auto angles = resolve_angles(cfg, sweep);
  const ResourceSpec spec = ResourceSpec::parse(cfg.resource);
  const auto rows = sweep_angles(spec, angles, cfg.trials, cfg.seed, cfg.workers);

  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.estimate - r.target));
  std::ostringstream summary;
  summary << "max |estimate - target| = " << std::setprecision(6) << worst << "\n";

  std::string payload;
  if (cfg.format == "json") {
    payload = io::sweep_to_json(rows, cfg.trials, cfg.seed);
  } else if (cfg.format == "text") {
    std::ostringstream t;
    t << "resource " << spec.to_string() << "\n";
    for (const auto& r : rows)
      t << "angle " << std::setprecision(8) << r.angle << "  estimate " << r.estimate
        << "  target " << r.target << "  stderr " << r.stderr_ << "\n";
    payload = t.str() + summary.str();
  } else {
    payload = io::sweep_to_csv(rows, cfg.trials, cfg.seed);
  }
  emit(cfg, payload, out);
  if (cfg.format != "text") (cfg.out_path.empty() ? err : out) << summary.str();
  return kOk;
}

int cmd_verify(RunConfig& cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text", "json"});
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.instances = cfg.instances;
  sc.tol = cfg.tol;
  if (cfg.corrupt_table) sc.table = corrupted_table1();
  const SuiteReport report = run_property_suite(sc);
  emit(cfg, cfg.format == "json" ? io::suite_to_json(report) : io::suite_to_text(report), out);
  return report.passed() ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Signal / indeterminacy toolkit for two-input two-output correlation boxes",
               "nlbox"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", cfg.tol, "Inequality / LP tolerance")
        ->check(CLI::PositiveNumber);
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--box", cfg.box_path, "Box JSON file ({\"P\": [x][y][a][b]})")->required();
  };
  auto add_sim = [&](CLI::App* sub) {
    sub->add_option("--resource", cfg.resource,
                    "Resource, e.g. \"scope=000;S1+:0.75,S1-:0.25\"")
        ->required();
    sub->add_option("--trials", cfg.trials, "Protocol rounds per angle");
    sub->add_option("--seed", cfg.seed, "64-bit master seed");
    sub->add_option("--angle", cfg.angle_list, "Relative angle in radians (repeatable)");
    sub->add_option("--angles", cfg.angles, "Comma-separated angles in radians");
    sub->add_option("--angle-grid", cfg.angle_grid_k, "K evenly spaced angles over [0, pi]");
    sub->add_option("--workers", cfg.workers, "Worker threads (result is independent of this)")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Measure lambda, S, I, H_S, H_I of a box");
  add_box(analyze);
  add_common(analyze);

  auto* decompose = app.add_subcommand("decompose", "Minimum one-way weight decomposition");
  add_box(decompose);
  add_common(decompose);

  auto* certify = app.add_subcommand("certify", "Check every complementarity bound on a box");
  add_box(certify);
  add_common(certify);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo singlet simulation");
  add_sim(simulate);
  add_common(simulate);

  auto* sweep = app.add_subcommand("sweep", "Singlet simulation over an angle grid");
  add_sim(sweep);
  add_common(sweep);

  auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--seed", cfg.seed, "64-bit master seed");
  verify->add_option("--instances", cfg.instances, "Random instances per property")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--corrupt-table", cfg.corrupt_table)->group("");  // negative-control hook
  add_common(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out, err);
    if (certify->parsed()) return cmd_certify(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, false, out, err);
    if (sweep->parsed()) return cmd_simulate(cfg, true, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoxInvariantError& e) {
    err << "error: invalid box: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return kScope;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const WeightError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace nlbox::cli
