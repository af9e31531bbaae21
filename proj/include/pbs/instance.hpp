#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbs/matrix.hpp"
#include "pbs/rational.hpp"

namespace pbs {

/// One message: `weight` time units from source to dest.
struct Edge {
  std::size_t source = 0;
  std::size_t dest = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted bipartite demand graph plus the per-round setup cost d.
///
/// Edges are kept sorted by (source, dest); at most one edge per pair and
/// every stored weight is strictly positive. Construct through `create`,
/// which enforces those rules.
class PbsInstance {
 public:
  PbsInstance() = default;

  /// Zero-weight edges are dropped (absent demand). Throws InputError on
  /// out-of-range indices, negative weights, a negative setup cost, or two
  /// edges on the same (source, dest) pair.
  static PbsInstance create(std::size_t n_sources, std::size_t n_dests, std::vector<Edge> edges,
                            Rational setup_cost);

  std::size_t n_sources() const { return n_sources_; }
  std::size_t n_dests() const { return n_dests_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& setup_cost() const { return setup_cost_; }

  /// Same demand, different d.
  PbsInstance with_setup_cost(Rational setup_cost) const;

  /// Edge on (source, dest), if any. O(log E).
  const Edge* find(std::size_t source, std::size_t dest) const;

  friend bool operator==(const PbsInstance&, const PbsInstance&) = default;

 private:
  std::size_t n_sources_ = 0;
  std::size_t n_dests_ = 0;
  std::vector<Edge> edges_;
  Rational setup_cost_{0};
};

/// Δ, W and L = W + d·Δ.
struct InstanceMetrics {
  std::size_t delta = 0;
  Rational big_w{0};
  Rational lower_bound{0};

  friend bool operator==(const InstanceMetrics&, const InstanceMetrics&) = default;
};

InstanceMetrics compute_metrics(const PbsInstance& inst);

/// Open-shop view: s×s processing-time matrix with s = max(n_sources, n_dests).
SquareMatrix<Rational> to_matrix(const PbsInstance& inst);

struct Pair {
  std::size_t source = 0;
  std::size_t dest = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// One switch configuration. Pairs are kept sorted; `valid()` reports whether
/// every endpoint is used at most once. Algorithms only ever build valid
/// matchings, but a matching read from a file may not be.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool valid() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Pair> pairs_;
};

struct Round {
  Matching matching;
  Rational duration;

  friend bool operator==(const Round&, const Round&) = default;
};

struct Schedule {
  std::vector<Round> rounds;
  std::string algorithm;

  std::size_t round_count() const { return rounds.size(); }
  Rational total_duration() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Σ durations + d·N.
Rational schedule_cost(const Schedule& sched, const Rational& setup_cost);

enum class ViolationKind {
  IndexOutOfRange,
  UnknownPair,
  SourceConflict,
  DestConflict,
  NonPositiveDuration,
  ServedAfterExhausted,
  UnderServed,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> round;  // absent for whole-schedule findings
  std::size_t source = 0;
  std::size_t dest = 0;
  Rational amount{0};  // residual demand for UnderServed, else 0

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Replays the schedule against the demand. Each edge in a round consumes
/// min(duration, remaining); the schedule is feasible iff every round is a
/// matching over existing edges and every edge ends with zero residual.
ValidationReport validate_schedule(const PbsInstance& inst, const Schedule& sched);

}  // namespace pbs
