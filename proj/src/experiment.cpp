#include "pbs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "pbs/errors.hpp"
#include "pbs/os01pt.hpp"
#include "pbs/posa.hpp"
#include "pbs/rng.hpp"

namespace pbs {

std::string_view distribution_name(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Uniform: return "uniform";
    case DistributionKind::Normal: return "normal";
    case DistributionKind::Exponential: return "exponential";
  }
  return "?";
}

std::optional<DistributionKind> parse_distribution(std::string_view name) {
  for (auto kind : {DistributionKind::Uniform, DistributionKind::Normal,
                    DistributionKind::Exponential}) {
    if (distribution_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void GeneratorConfig::validate() const {
  if (n_sources == 0 || n_dests == 0) throw InputError("generator needs at least one node per side");
  if (p_max <= 0) throw InputError("p_max must be positive");
  if (!(density > 0.0 && density <= 1.0)) throw InputError("density must lie in (0, 1]");
  if (cases == 0) throw InputError("cases must be positive");
  switch (distribution.kind) {
    case DistributionKind::Uniform: break;
    case DistributionKind::Normal:
      if (!(distribution.normal_stddev > 0.0)) throw InputError("normal stddev must be positive");
      if (distribution.normal_mean + 8.0 * distribution.normal_stddev < 0.5) {
        throw InputError("normal parameters round every draw to zero");
      }
      break;
    case DistributionKind::Exponential:
      if (!(distribution.exponential_mean > 0.0)) {
        throw InputError("exponential mean must be positive");
      }
      break;
  }
}

PbsInstance generate_instance(const GeneratorConfig& cfg, const Rational& d, std::size_t index) {
  cfg.validate();
  const auto stream = static_cast<std::uint64_t>(cfg.distribution.kind) + 1;
  Rng rng(splitmix64(cfg.seed ^ splitmix64(index * 4 + stream)));

  auto draw = [&]() -> std::int64_t {
    const auto& dist = cfg.distribution;
    double x = 0;
    switch (dist.kind) {
      case DistributionKind::Uniform: return rng.uniform_int(0, cfg.p_max);
      case DistributionKind::Normal: x = rng.normal(dist.normal_mean, dist.normal_stddev); break;
      case DistributionKind::Exponential: x = rng.exponential(dist.exponential_mean); break;
    }
    return std::llround(std::clamp(x, -1.0, static_cast<double>(cfg.p_max)));
  };

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cfg.n_sources; ++i) {
    for (std::size_t j = 0; j < cfg.n_dests; ++j) {
      if (cfg.density < 1.0 && rng.uniform01() >= cfg.density) continue;
      const std::int64_t rounded = draw();
      if (rounded == 0) continue;
      edges.push_back(Edge{i, j, Rational(std::clamp<std::int64_t>(rounded, 1, cfg.p_max))});
    }
  }
  return PbsInstance::create(cfg.n_sources, cfg.n_dests, std::move(edges), d);
}

const AlgorithmStats* SweepPoint::find(Algorithm alg) const {
  for (const auto& s : stats) {
    if (s.algorithm == alg) return &s;
  }
  return nullptr;
}

const DistributionSweep* ExperimentReport::find(DistributionKind kind) const {
  for (const auto& s : sweeps) {
    if (s.distribution == kind) return &s;
  }
  return nullptr;
}

SweepValidationError::SweepValidationError(std::uint64_t seed_, std::size_t index_, Rational d_,
                                           Algorithm alg, const std::string& detail)
    : std::runtime_error("schedule validation failed: algorithm " +
                         std::string(algorithm_name(alg)) + ", seed " + std::to_string(seed_) +
                         ", index " + std::to_string(index_) + ", d " + format_rational(d_) +
                         ": " + detail),
      seed(seed_),
      index(index_),
      d(d_),
      algorithm(alg) {}

namespace {

struct Record {
  double ratio = 1;
  double rounds_per_delta = 1;
  double duration_per_w = 1;
  bool chose_i_os01pt = false;
};

double safe_ratio(const Rational& num, const Rational& den) {
  return sign(den) == 0 ? 1.0 : to_double(num / den);
}

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

Record make_record(const AlgorithmOutcome& o) {
  Record r;
  r.ratio = safe_ratio(o.cost, o.metrics.lower_bound);
  r.rounds_per_delta = safe_ratio(o.rounds, o.metrics.delta);
  r.duration_per_w = safe_ratio(o.sum_durations, o.metrics.big_w);
  r.chose_i_os01pt = o.schedule.algorithm == "i-os01pt";
  return r;
}

bool wants(const SweepOptions& opts, Algorithm alg) {
  return std::find(opts.algorithms.begin(), opts.algorithms.end(), alg) != opts.algorithms.end();
}

// records[d][alg] for one instance.
using InstanceRecords = std::vector<std::vector<Record>>;

InstanceRecords run_instance(const GeneratorConfig& cfg, const SweepOptions& opts,
                             std::size_t index) {
  const PbsInstance base = generate_instance(cfg, Rational(0), index);

  auto checked = [&](Algorithm alg, const Rational& d, Schedule sched) {
    const auto verdict = validate_schedule(base, sched);
    if (!verdict.ok()) {
      throw SweepValidationError(cfg.seed, index, d, alg, verdict.violations.front().describe());
    }
    return sched;
  };

  // POSA and OS01PT never look at d; compute them once per instance.
  const bool need_posa = wants(opts, Algorithm::Posa) || wants(opts, Algorithm::IHsa);
  std::optional<Schedule> posa, os01pt;
  if (need_posa) posa = checked(Algorithm::Posa, Rational(0), posa_schedule(base));
  if (wants(opts, Algorithm::Os01pt)) {
    os01pt = checked(Algorithm::Os01pt, Rational(0), os01pt_schedule(base));
  }

  InstanceRecords out(opts.grid.size());
  for (std::size_t k = 0; k < opts.grid.size(); ++k) {
    const Rational& d = opts.grid[k];
    const PbsInstance inst = base.with_setup_cost(d);
    std::optional<AlgorithmOutcome> posa_out, ios_out;
    if (posa) posa_out = make_outcome("posa", inst, *posa);
    if (wants(opts, Algorithm::IOs01pt) || wants(opts, Algorithm::IHsa)) {
      ios_out = make_outcome("i-os01pt", inst,
                             checked(Algorithm::IOs01pt, d, i_os01pt_schedule(inst)));
    }
    for (auto alg : opts.algorithms) {
      switch (alg) {
        case Algorithm::Posa: out[k].push_back(make_record(*posa_out)); break;
        case Algorithm::Os01pt:
          out[k].push_back(make_record(make_outcome("os01pt", inst, *os01pt)));
          break;
        case Algorithm::IOs01pt: out[k].push_back(make_record(*ios_out)); break;
        case Algorithm::IHsa:
          out[k].push_back(make_record(choose_hybrid(*posa_out, *ios_out)));
          break;
        case Algorithm::Sga: {
          auto sga = sga_schedule(inst);
          checked(Algorithm::Sga, d, sga.schedule);
          out[k].push_back(make_record(sga));
          break;
        }
      }
    }
  }
  return out;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

DistributionSweep run_sweep(const GeneratorConfig& cfg, const SweepOptions& opts) {
  cfg.validate();
  if (opts.grid.empty()) throw InputError("sweep grid is empty");
  if (opts.algorithms.empty()) throw InputError("sweep needs at least one algorithm");

  std::vector<InstanceRecords> results(cfg.cases);
  std::vector<std::exception_ptr> errors(cfg.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t index = next++; index < cfg.cases; index = next++) {
      try {
        results[index] = run_instance(cfg, opts, index);
      } catch (...) {
        errors[index] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, cfg.cases);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  // Reduce in instance order so the floating-point sums are reproducible.
  DistributionSweep sweep;
  sweep.distribution = cfg.distribution.kind;
  for (std::size_t k = 0; k < opts.grid.size(); ++k) {
    SweepPoint point;
    point.d = opts.grid[k];
    for (std::size_t a = 0; a < opts.algorithms.size(); ++a) {
      AlgorithmStats st;
      st.algorithm = opts.algorithms[a];
      st.cases = cfg.cases;
      double ratio = 0, rpd = 0, dpw = 0, wins = 0;
      for (std::size_t index = 0; index < cfg.cases; ++index) {
        const Record& r = results[index][k][a];
        ratio += r.ratio;
        rpd += r.rounds_per_delta;
        dpw += r.duration_per_w;
        wins += r.chose_i_os01pt ? 1.0 : 0.0;
        st.worst_ratio = std::max(st.worst_ratio, r.ratio);
      }
      const auto n = static_cast<double>(cfg.cases);
      st.mean_ratio = ratio / n;
      st.mean_rounds_per_delta = rpd / n;
      st.mean_duration_per_w = dpw / n;
      if (st.algorithm == Algorithm::IHsa) st.i_os01pt_win_fraction = wins / n;
      point.stats.push_back(st);
    }
    sweep.points.push_back(std::move(point));
  }
  return sweep;
}

CriticalD detect_critical_d(std::span<const CurvePoint> curve) {
  for (const auto& p : curve) {
    if (p.i_os01pt < p.posa) return CriticalD{p.d, std::nullopt};
  }
  return CriticalD{std::nullopt, Algorithm::Posa};
}

CriticalD detect_critical_d(const DistributionSweep& sweep) {
  std::vector<CurvePoint> curve;
  for (const auto& point : sweep.points) {
    const auto* posa = point.find(Algorithm::Posa);
    const auto* ios = point.find(Algorithm::IOs01pt);
    if (posa == nullptr || ios == nullptr) {
      throw InputError("critical d needs posa and i-os01pt statistics at every grid point");
    }
    curve.push_back(CurvePoint{point.d, posa->mean_ratio, ios->mean_ratio});
  }
  return detect_critical_d(curve);
}

std::string report_csv(const ExperimentReport& report) {
  std::string out(kReportCsvHeader);
  out += '\n';
  for (const auto& sweep : report.sweeps) {
    for (const auto& point : sweep.points) {
      for (const auto& st : point.stats) {
        out += distribution_name(sweep.distribution);
        out += ',' + format_rational(point.d);
        out += ',';
        out += algorithm_name(st.algorithm);
        out += ',' + std::to_string(st.cases);
        out += ',' + fixed6(st.mean_ratio);
        out += ',' + fixed6(st.worst_ratio);
        out += ',' + fixed6(st.mean_rounds_per_delta);
        out += ',' + fixed6(st.mean_duration_per_w);
        out += ',';
        if (st.i_os01pt_win_fraction) out += fixed6(*st.i_os01pt_win_fraction);
        out += '\n';
      }
    }
  }
  return out;
}

ExperimentReport parse_report_csv(std::string_view text) {
  ExperimentReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("report line " + std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line) || (++line_no, line != kReportCsvHeader)) {
    fail("unexpected header");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cols.push_back(cell);
    if (!line.empty() && line.back() == ',') cols.emplace_back();
    if (cols.size() != 9) fail("expected 9 columns");

    const auto kind = parse_distribution(cols[0]);
    if (!kind) fail("unknown distribution '" + cols[0] + "'");
    const auto alg = parse_algorithm(cols[2]);
    if (!alg) fail("unknown algorithm '" + cols[2] + "'");

    AlgorithmStats st;
    st.algorithm = *alg;
    try {
      st.cases = std::stoul(cols[3]);
      st.mean_ratio = std::stod(cols[4]);
      st.worst_ratio = std::stod(cols[5]);
      st.mean_rounds_per_delta = std::stod(cols[6]);
      st.mean_duration_per_w = std::stod(cols[7]);
      if (!cols[8].empty()) st.i_os01pt_win_fraction = std::stod(cols[8]);
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
    Rational d;
    try {
      d = parse_rational(cols[1]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }

    if (report.sweeps.empty() || report.sweeps.back().distribution != *kind) {
      report.sweeps.push_back(DistributionSweep{*kind, {}});
    }
    auto& points = report.sweeps.back().points;
    if (points.empty() || points.back().d != d) points.push_back(SweepPoint{d, {}});
    points.back().stats.push_back(st);
  }
  return report;
}

std::string critical_d_csv(const ExperimentReport& report) {
  std::string out = "distribution,critical_d,dominating\n";
  for (const auto& sweep : report.sweeps) {
    const auto crit = detect_critical_d(sweep);
    out += distribution_name(sweep.distribution);
    out += ',';
    out += crit.d ? format_rational(*crit.d) : "none";
    out += ',';
    if (crit.dominating) out += algorithm_name(*crit.dominating);
    out += '\n';
  }
  return out;
}

std::string report_metadata_json(const ExperimentReport& report) {
  const auto& cfg = report.config;
  nlohmann::json meta;
  meta["seed"] = cfg.seed;
  meta["cases"] = cfg.cases;
  meta["n_sources"] = cfg.n_sources;
  meta["n_dests"] = cfg.n_dests;
  meta["p_max"] = cfg.p_max;
  meta["density"] = cfg.density;
  meta["normal_mean"] = cfg.distribution.normal_mean;
  meta["normal_stddev"] = cfg.distribution.normal_stddev;
  meta["exponential_mean"] = cfg.distribution.exponential_mean;
  meta["distributions"] = nlohmann::json::array();
  for (const auto& sweep : report.sweeps) {
    meta["distributions"].push_back(std::string(distribution_name(sweep.distribution)));
  }
  meta["grid"] = nlohmann::json::array();
  if (!report.sweeps.empty()) {
    for (const auto& p : report.sweeps.front().points) meta["grid"].push_back(format_rational(p.d));
  }
  return meta.dump(2) + "\n";
}

}  // namespace pbs
