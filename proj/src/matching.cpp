#include "pbs/matching.hpp"

#include "pbs/detail/assignment.hpp"

namespace pbs {

WeightedBipartiteGraph WeightedBipartiteGraph::create(SquareMatrix<Rational> weights,
                                                      SquareMatrix<char> support) {
  if (weights.size() != support.size()) throw InputError("weight and support sizes differ");
  if (weights.size() == 0) throw InputError("bipartite graph must have at least one node per side");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (sign(weights(i, j)) < 0) throw InputError("negative weight");
      if (!support(i, j) && sign(weights(i, j)) != 0) {
        throw InputError("nonzero weight outside the support");
      }
    }
  }
  WeightedBipartiteGraph g;
  g.weights_ = std::move(weights);
  g.support_ = std::move(support);
  return g;
}

WeightedBipartiteGraph WeightedBipartiteGraph::complete(SquareMatrix<Rational> weights) {
  SquareMatrix<char> support(weights.size(), 1);
  return create(std::move(weights), std::move(support));
}

Matching max_weight_perfect_matching(const WeightedBipartiteGraph& g) {
  auto assigned = detail::max_weight_assignment(g.weights(), g.support());
  if (!assigned) throw InfeasibleMatching("no perfect matching inside the support");
  std::vector<Pair> pairs;
  pairs.reserve(assigned->size());
  for (std::size_t i = 0; i < assigned->size(); ++i) pairs.push_back({i, (*assigned)[i]});
  return Matching(std::move(pairs));
}

Matching max_weight_matching(const WeightedBipartiteGraph& g) {
  const auto assigned = detail::max_weight_matching(g.weights(), g.support());
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (assigned[i]) pairs.push_back({i, *assigned[i]});
  }
  return Matching(std::move(pairs));
}

Rational matching_weight(const WeightedBipartiteGraph& g, const Matching& m) {
  Rational total(0);
  for (const auto& p : m.pairs()) total += g.weights()(p.source, p.dest);
  return total;
}

}  // namespace pbs
