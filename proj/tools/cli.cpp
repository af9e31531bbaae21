#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "pbs/charts.hpp"
#include "pbs/errors.hpp"
#include "pbs/experiment.hpp"
#include "pbs/hybrid.hpp"
#include "pbs/io.hpp"

namespace pbs::cli {

namespace fs = std::filesystem;

namespace {

std::string default_out_dir() {
  if (const char* env = std::getenv("PBS_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::string valid_algorithm_list() {
  std::string names;
  for (auto alg : kAllAlgorithms) names += std::string(algorithm_name(alg)) + ", ";
  return names + "all";
}

std::vector<Algorithm> parse_algorithms(const std::string& text) {
  std::vector<Algorithm> algs;
  for (const auto& name : split(text, ',')) {
    if (name == "all") {
      for (auto alg : kAllAlgorithms) {
        if (std::find(algs.begin(), algs.end(), alg) == algs.end()) algs.push_back(alg);
      }
      continue;
    }
    const auto alg = parse_algorithm(name);
    if (!alg) {
      throw CLI::ValidationError("--alg", "unknown algorithm '" + name +
                                              "' (valid: " + valid_algorithm_list() + ")");
    }
    if (std::find(algs.begin(), algs.end(), *alg) == algs.end()) algs.push_back(*alg);
  }
  if (algs.empty()) throw CLI::ValidationError("--alg", "no algorithm given");
  return algs;
}

std::vector<DistributionKind> parse_distributions(const std::string& text) {
  std::vector<DistributionKind> kinds;
  for (const auto& name : split(text, ',')) {
    if (name == "all") {
      kinds = {DistributionKind::Uniform, DistributionKind::Normal, DistributionKind::Exponential};
      continue;
    }
    const auto kind = parse_distribution(name);
    if (!kind) {
      throw CLI::ValidationError("--dist", "unknown distribution '" + name +
                                               "' (valid: uniform, normal, exponential, all)");
    }
    if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) kinds.push_back(*kind);
  }
  if (kinds.empty()) throw CLI::ValidationError("--dist", "no distribution given");
  return kinds;
}

// "a:b" (step 1), "a:b:step", or a comma list.
std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  try {
    if (text.find(':') != std::string::npos) {
      const auto parts = split(text, ':');
      if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("expected a:b[:step]");
      const Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]);
      const Rational step = parts.size() == 3 ? parse_rational(parts[2]) : Rational(1);
      if (sign(step) <= 0) throw std::invalid_argument("step must be positive");
      for (Rational d = lo; d <= hi; d += step) grid.push_back(d);
    } else {
      for (const auto& part : split(text, ',')) grid.push_back(parse_rational(part));
    }
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--d", e.what());
  }
  if (grid.empty()) throw CLI::ValidationError("--d", "empty grid");
  for (const auto& d : grid) {
    if (sign(d) < 0) throw CLI::ValidationError("--d", "setup cost must be nonnegative");
  }
  return grid;
}

std::string ratio_text(const Rational& cost, const Rational& bound) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", sign(bound) == 0 ? 1.0 : to_double(cost / bound));
  return buf;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

struct GeneratorFlags {
  std::string dists = "uniform";
  std::size_t cases = 100;
  std::string grid = "0:100";
  std::size_t n = 30;
  std::size_t sources = 0, dests = 0;
  std::int64_t p_max = 120;
  double density = 1.0;
  std::uint64_t seed = 1;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  double normal_mean = 60, normal_stddev = 20, exponential_mean = 40;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dist", dists, "uniform, normal, exponential, comma list, or all")
        ->capture_default_str();
    cmd->add_option("--cases", cases, "instances per distribution")->capture_default_str();
    cmd->add_option("--d", grid, "setup-cost grid: a:b, a:b:step, or comma list")
        ->capture_default_str();
    cmd->add_option("--n", n, "sources and dests per instance")->capture_default_str();
    cmd->add_option("--sources", sources, "sources (overrides --n)");
    cmd->add_option("--dests", dests, "dests (overrides --n)");
    cmd->add_option("--p-max", p_max, "maximum message duration")->capture_default_str();
    cmd->add_option("--density", density, "edge probability in (0, 1]")->capture_default_str();
    cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
    cmd->add_option("--workers", workers, "parallel workers")->capture_default_str();
    cmd->add_option("--normal-mean", normal_mean)->capture_default_str();
    cmd->add_option("--normal-stddev", normal_stddev)->capture_default_str();
    cmd->add_option("--exp-mean", exponential_mean)->capture_default_str();
  }

  GeneratorConfig config() const {
    GeneratorConfig cfg;
    cfg.n_sources = sources ? sources : n;
    cfg.n_dests = dests ? dests : n;
    cfg.p_max = p_max;
    cfg.density = density;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.distribution.normal_mean = normal_mean;
    cfg.distribution.normal_stddev = normal_stddev;
    cfg.distribution.exponential_mean = exponential_mean;
    return cfg;
  }

  ExperimentReport sweep(const std::vector<Algorithm>& algs) const {
    ExperimentReport report;
    report.config = config();
    SweepOptions opts{parse_grid(grid), algs, workers};
    for (auto kind : parse_distributions(dists)) {
      GeneratorConfig cfg = report.config;
      cfg.distribution.kind = kind;
      report.sweeps.push_back(run_sweep(cfg, opts));
    }
    return report;
  }
};

void print_critical(const ExperimentReport& report, std::ostream& out) {
  for (const auto& sweep : report.sweeps) {
    const auto crit = detect_critical_d(sweep);
    out << "critical d (" << distribution_name(sweep.distribution) << "): ";
    if (crit.d) {
      out << format_rational(*crit.d) << "\n";
    } else {
      out << "none, " << algorithm_name(*crit.dominating) << " dominates\n";
    }
  }
}

int cmd_schedule(const std::string& instance_path, const std::string& alg_text,
                 const std::string& output, const std::string& out_dir, std::ostream& stdout_,
                 std::ostream& stderr_) {
  // With "-o -" the schedule owns stdout and the summary moves to stderr.
  std::ostream& out = output == "-" ? stderr_ : stdout_;
  const auto algs = parse_algorithms(alg_text);
  if (!output.empty() && algs.size() > 1) {
    throw CLI::ValidationError("--output", "only valid with a single algorithm");
  }
  const PbsInstance inst = parse_instance(read_text_file(instance_path));
  const auto metrics = compute_metrics(inst);
  const std::string stem = fs::path(instance_path).stem().string();

  out << "delta " << metrics.delta << "  W " << format_rational(metrics.big_w) << "  L "
      << format_rational(metrics.lower_bound) << "  d " << format_rational(inst.setup_cost())
      << "\n";
  out << pad("algorithm", 10) << pad("cost", 12) << pad("N", 8) << pad("sum_durations", 16)
      << "cost/L\n";

  std::ostringstream stdout_schedules;
  for (auto alg : algs) {
    const auto outcome = run_algorithm(alg, inst);
    const auto verdict = validate_schedule(inst, outcome.schedule);
    if (!verdict.ok()) {
      throw InternalError(std::string(algorithm_name(alg)) + " produced an invalid schedule: " +
                          verdict.violations.front().describe());
    }
    out << pad(outcome.label, 10) << pad(format_rational(outcome.cost), 12)
        << pad(std::to_string(outcome.rounds), 8)
        << pad(format_rational(outcome.sum_durations), 16)
        << ratio_text(outcome.cost, metrics.lower_bound);
    if (alg == Algorithm::IHsa) out << "  via " << outcome.schedule.algorithm;
    out << "\n";

    const auto text = write_schedule(outcome.schedule, inst.setup_cost());
    if (output == "-") {
      stdout_schedules << text;
    } else {
      const fs::path target = !output.empty()
                                  ? fs::path(output)
                                  : fs::path(out_dir) / (stem + "." +
                                                         std::string(algorithm_name(alg)) +
                                                         ".schedule");
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      write_text_file(target, text);
    }
  }
  stdout_ << stdout_schedules.str();
  return kOk;
}

int cmd_validate(const std::string& instance_path, const std::string& schedule_path,
                 std::ostream& out) {
  const PbsInstance inst = parse_instance(read_text_file(instance_path));
  const ScheduleFile file = parse_schedule(read_text_file(schedule_path));
  const auto verdict = validate_schedule(inst, file.schedule);
  const Rational cost = schedule_cost(file.schedule, inst.setup_cost());

  bool ok = verdict.ok();
  for (const auto& v : verdict.violations) out << v.describe() << "\n";
  if (file.cost && *file.cost != cost) {
    out << "cost-mismatch: file says " << format_rational(*file.cost) << ", recomputed "
        << format_rational(cost) << "\n";
    ok = false;
  }
  if (!ok) return kValidation;
  const auto metrics = compute_metrics(inst);
  out << "ok  cost " << format_rational(cost) << "  N " << file.schedule.round_count()
      << "  cost/L " << ratio_text(cost, metrics.lower_bound) << "\n";
  return kOk;
}

int cmd_bench(const GeneratorFlags& flags, const std::string& alg_text,
              const std::string& format_text, const std::string& out_dir, std::ostream& out) {
  const auto algs = parse_algorithms(alg_text);
  const auto formats = split(format_text, ',');
  for (const auto& f : formats) {
    if (f != "text" && f != "csv" && f != "chart") {
      throw CLI::ValidationError("--format", "unknown format '" + f + "' (valid: text, csv, chart)");
    }
  }
  auto has = [&](const char* f) { return std::find(formats.begin(), formats.end(), f) != formats.end(); };

  const ExperimentReport report = flags.sweep(algs);
  const bool crossover = std::find(algs.begin(), algs.end(), Algorithm::Posa) != algs.end() &&
                         std::find(algs.begin(), algs.end(), Algorithm::IOs01pt) != algs.end();

  if (has("csv") || has("chart")) fs::create_directories(out_dir);
  if (has("csv")) {
    write_text_file(fs::path(out_dir) / "report.csv", report_csv(report));
    write_text_file(fs::path(out_dir) / "meta.json", report_metadata_json(report));
    if (crossover) write_text_file(fs::path(out_dir) / "critical_d.csv", critical_d_csv(report));
  }
  if (has("chart")) {
    for (const auto& named : figure_charts(report)) {
      write_text_file(fs::path(out_dir) / named.file_name, render_svg(named.chart));
    }
  }
  if (has("text")) out << report_csv(report);
  if (crossover) print_critical(report, out);
  return kOk;
}

int cmd_critical(const GeneratorFlags& flags, const std::string& report_path, std::ostream& out) {
  const ExperimentReport report =
      report_path.empty() ? flags.sweep({Algorithm::Posa, Algorithm::IOs01pt})
                          : parse_report_csv(read_text_file(report_path));
  print_critical(report, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preemptive bipartite scheduling toolkit", "pbs"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path, alg = "i-hsa", output, out_dir = default_out_dir();
  auto* schedule = app.add_subcommand("schedule", "schedule one instance file");
  schedule->add_option("instance", instance_path, "instance file")->required();
  schedule->add_option("--alg", alg, "algorithm: " + valid_algorithm_list())->capture_default_str();
  schedule->add_option("-o,--output", output, "schedule file ('-' for stdout)");
  auto* out_dir_opt = schedule->add_option("--out-dir", out_dir, "directory for schedule files");
  out_dir_opt->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check a schedule file against an instance");
  validate->add_option("instance", instance_path)->required();
  validate->add_option("schedule", schedule_path)->required();

  GeneratorFlags flags;
  std::string bench_alg = "posa,i-os01pt,i-hsa,sga", formats = "csv,chart";
  auto* bench = app.add_subcommand("bench", "run a setup-cost sweep and write reports");
  flags.attach(bench);
  bench->add_option("--alg", bench_alg, "algorithms: " + valid_algorithm_list())
      ->capture_default_str();
  bench->add_option("--format", formats, "text, csv, chart (comma list)")->capture_default_str();
  bench->add_option("--out-dir", out_dir, "report directory")->capture_default_str();

  std::string report_path;
  auto* critical = app.add_subcommand("critical-d", "locate the POSA / I_OS01PT crossover");
  flags.attach(critical);
  critical->add_option("--report", report_path, "read a report.csv instead of sweeping");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*schedule) return cmd_schedule(instance_path, alg, output, out_dir, out, err);
    if (*validate) return cmd_validate(instance_path, schedule_path, out);
    if (*bench) return cmd_bench(flags, bench_alg, formats, out_dir, out);
    if (*critical) return cmd_critical(flags, report_path, out);
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SweepValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace pbs::cli
