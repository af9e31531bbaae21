#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pbs/instance.hpp"

namespace pbs {

enum class Algorithm { Posa, Os01pt, IOs01pt, IHsa, Sga };

inline constexpr std::array<Algorithm, 5> kAllAlgorithms = {
    Algorithm::Posa, Algorithm::Os01pt, Algorithm::IOs01pt, Algorithm::IHsa, Algorithm::Sga};

/// CLI / report name: posa, os01pt, i-os01pt, i-hsa, sga.
std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// A schedule together with the numbers every report needs.
struct AlgorithmOutcome {
  std::string label;
  Schedule schedule;
  Rational cost{0};
  std::size_t rounds = 0;
  Rational sum_durations{0};
  InstanceMetrics metrics;
};

AlgorithmOutcome make_outcome(std::string label, const PbsInstance& inst, Schedule schedule);

/// Keeps the I_OS01PT outcome only if it is strictly cheaper; the result is
/// relabeled "i-hsa" and its schedule keeps the tag of the winner.
AlgorithmOutcome choose_hybrid(AlgorithmOutcome posa, AlgorithmOutcome i_os01pt);

AlgorithmOutcome i_hsa_schedule(const PbsInstance& inst);

/// Split-graph baseline: messages with w >= d go through POSA first, the
/// shorter ones follow via the w + d matching decomposition.
AlgorithmOutcome sga_schedule(const PbsInstance& inst);

AlgorithmOutcome run_algorithm(Algorithm alg, const PbsInstance& inst);

}  // namespace pbs
