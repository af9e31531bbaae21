#pragma once

#include "pbs/errors.hpp"
#include "pbs/instance.hpp"
#include "pbs/matrix.hpp"
#include "pbs/rational.hpp"

namespace pbs {

/// Square weighted bipartite graph. Pairs outside `support` are not edges
/// and can never be matched; their weight must be zero.
class WeightedBipartiteGraph {
 public:
  /// Throws InputError if sizes disagree, the graph is empty, a weight is
  /// negative, or a weight outside the support is nonzero.
  static WeightedBipartiteGraph create(SquareMatrix<Rational> weights, SquareMatrix<char> support);

  /// Every pair admissible.
  static WeightedBipartiteGraph complete(SquareMatrix<Rational> weights);

  std::size_t size() const { return weights_.size(); }
  const SquareMatrix<Rational>& weights() const { return weights_; }
  const SquareMatrix<char>& support() const { return support_; }

 private:
  SquareMatrix<Rational> weights_;
  SquareMatrix<char> support_;
};

/// Raised when no perfect matching exists inside the support.
class InfeasibleMatching : public InternalError {
 public:
  using InternalError::InternalError;
};

/// Maximum-weight perfect matching restricted to the support. Ties go to the
/// lexicographically smallest pair list.
Matching max_weight_perfect_matching(const WeightedBipartiteGraph& g);

/// Maximum-weight matching; equal-weight optima are broken toward more pairs,
/// then toward the lexicographically smallest completed assignment.
Matching max_weight_matching(const WeightedBipartiteGraph& g);

Rational matching_weight(const WeightedBipartiteGraph& g, const Matching& m);

}  // namespace pbs
