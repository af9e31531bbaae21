#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbs/hybrid.hpp"
#include "pbs/instance.hpp"

namespace pbs {

enum class DistributionKind { Uniform, Normal, Exponential };

std::string_view distribution_name(DistributionKind kind);
std::optional<DistributionKind> parse_distribution(std::string_view name);

/// Message-duration law. Every draw is rounded to the nearest integer; a 0
/// means no message on that pair, anything else is clamped to [1, p_max].
/// Uniform draws integers in [0, p_max] directly.
struct WeightDistribution {
  DistributionKind kind = DistributionKind::Uniform;
  double normal_mean = 60.0;
  double normal_stddev = 20.0;
  double exponential_mean = 40.0;
};

struct GeneratorConfig {
  std::size_t n_sources = 30;
  std::size_t n_dests = 30;
  WeightDistribution distribution;
  std::int64_t p_max = 120;
  double density = 1.0;  // probability that a (source, dest) pair carries a message
  std::uint64_t seed = 1;
  std::size_t cases = 500;

  /// Throws InputError on an unusable configuration.
  void validate() const;
};

/// Instance `index` of the configured family with setup cost d. The demand
/// depends only on (seed, distribution, index), so the same instances are
/// reused across a d grid.
PbsInstance generate_instance(const GeneratorConfig& cfg, const Rational& d, std::size_t index);

/// Aggregates for one algorithm at one d.
struct AlgorithmStats {
  Algorithm algorithm = Algorithm::Posa;
  std::size_t cases = 0;
  double mean_ratio = 0;             // mean cost / L
  double worst_ratio = 0;            // max cost / L
  double mean_rounds_per_delta = 0;  // mean N / Δ
  double mean_duration_per_w = 0;    // mean Σ durations / W
  std::optional<double> i_os01pt_win_fraction;  // i-hsa only
};

struct SweepPoint {
  Rational d{0};
  std::vector<AlgorithmStats> stats;

  const AlgorithmStats* find(Algorithm alg) const;
};

struct DistributionSweep {
  DistributionKind distribution = DistributionKind::Uniform;
  std::vector<SweepPoint> points;
};

struct ExperimentReport {
  GeneratorConfig config;  // distribution field ignored; see sweeps
  std::vector<DistributionSweep> sweeps;

  const DistributionSweep* find(DistributionKind kind) const;
};

struct SweepOptions {
  std::vector<Rational> grid;
  std::vector<Algorithm> algorithms;
  std::size_t workers = 1;
};

/// A generated schedule failed validation. Carries the coordinates needed to
/// regenerate the instance.
class SweepValidationError : public std::runtime_error {
 public:
  SweepValidationError(std::uint64_t seed, std::size_t index, Rational d, Algorithm alg,
                       const std::string& detail);

  std::uint64_t seed;
  std::size_t index;
  Rational d;
  Algorithm algorithm;
};

/// Runs every algorithm on cfg.cases instances at every grid point and
/// validates every schedule. Results do not depend on the worker count.
DistributionSweep run_sweep(const GeneratorConfig& cfg, const SweepOptions& opts);

/// Crossover of the mean POSA and I_OS01PT curves: the first grid d at which
/// I_OS01PT's mean ratio is strictly below POSA's. When there is none,
/// `dominating` names POSA.
struct CriticalD {
  std::optional<Rational> d;
  std::optional<Algorithm> dominating;
};

struct CurvePoint {
  Rational d{0};
  double posa = 0;
  double i_os01pt = 0;
};

CriticalD detect_critical_d(std::span<const CurvePoint> curve);

/// Throws InputError if the sweep lacks POSA or I_OS01PT statistics.
CriticalD detect_critical_d(const DistributionSweep& sweep);

/// Frozen CSV layout, one row per distribution × d × algorithm.
inline constexpr std::string_view kReportCsvHeader =
    "distribution,d,algorithm,cases,mean_ratio,worst_ratio,mean_rounds_per_delta,"
    "mean_duration_per_w,i_os01pt_win_fraction";

std::string report_csv(const ExperimentReport& report);

/// Reads report_csv output back (statistics only; config is left default).
ExperimentReport parse_report_csv(std::string_view text);

/// distribution,critical_d,dominating
std::string critical_d_csv(const ExperimentReport& report);

/// Run metadata as JSON text: seed, cases, grid, generator parameters.
std::string report_metadata_json(const ExperimentReport& report);

}  // namespace pbs
