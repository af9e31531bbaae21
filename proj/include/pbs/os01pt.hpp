#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pbs/instance.hpp"

namespace pbs {

/// How real edges are weighted for the matching step.
enum class EdgeWeighting {
  Plain,          // w
  PlusSetupCost,  // w + d
};

/// Which matching each decomposition step extracts.
enum class MatchingVariant {
  Perfect,    // maximum-weight perfect matching
  MaxWeight,  // maximum-weight matching, not necessarily perfect
};

struct MultiEdge {
  std::size_t source = 0;
  std::size_t dest = 0;
  Rational weight{0};             // matching weight (w, w + d, or 0 for dummies)
  Rational original_weight{0};    // transmission time; 0 for dummies
  std::optional<std::size_t> original;  // index into PbsInstance::edges()

  bool real() const { return original.has_value(); }
};

/// Demand graph on s = max(n_sources, n_dests) nodes per side, topped up with
/// zero-weight dummy edges until every node has degree `degree` (= Δ).
/// Dummies may be parallel to each other or to real edges.
struct RegularizedGraph {
  std::size_t size = 0;
  std::size_t degree = 0;
  std::vector<MultiEdge> edges;
};

/// Pads both sides to equal size, then repeatedly joins a minimum-degree
/// source to a minimum-degree dest (lowest index on ties) with a dummy edge.
RegularizedGraph regularize(const PbsInstance& inst, EdgeWeighting weighting);

struct Decomposition {
  Schedule schedule;
  std::size_t iterations = 0;  // matchings extracted, including dropped dummy-only ones
};

/// Peels matchings off `g` until it is empty. A round holds the real edges of
/// one matching and lasts as long as the longest of them; dummy-only rounds
/// are dropped. With MatchingVariant::Perfect on a regular graph this takes
/// exactly `g.degree` iterations.
Decomposition matching_decomposition(const RegularizedGraph& g, MatchingVariant variant);

/// Plain weights, perfect matchings.
Schedule os01pt_schedule(const PbsInstance& inst);

/// w + d weights, maximum-weight matchings.
Schedule i_os01pt_schedule(const PbsInstance& inst);

}  // namespace pbs
