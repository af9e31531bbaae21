#include "pbs/os01pt.hpp"

#include <algorithm>

#include "pbs/detail/assignment.hpp"
#include "pbs/detail/ticks.hpp"
#include "pbs/errors.hpp"

namespace pbs {

RegularizedGraph regularize(const PbsInstance& inst, EdgeWeighting weighting) {
  RegularizedGraph g;
  g.size = std::max(inst.n_sources(), inst.n_dests());
  std::vector<std::size_t> src_degree(g.size, 0), dst_degree(g.size, 0);

  const auto& edges = inst.edges();
  g.edges.reserve(edges.size());
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    const Rational weight =
        weighting == EdgeWeighting::PlusSetupCost ? e.weight + inst.setup_cost() : e.weight;
    g.edges.push_back(MultiEdge{e.source, e.dest, weight, e.weight, id});
    ++src_degree[e.source];
    ++dst_degree[e.dest];
  }
  for (std::size_t i = 0; i < g.size; ++i) {
    g.degree = std::max({g.degree, src_degree[i], dst_degree[i]});
  }

  // Both sides carry the same total deficit, so a deficient source always
  // has a deficient partner.
  while (true) {
    const auto src = std::min_element(src_degree.begin(), src_degree.end());
    const auto dst = std::min_element(dst_degree.begin(), dst_degree.end());
    if (src == src_degree.end() || *src == g.degree) break;
    if (*dst == g.degree) throw InternalError("regularize: unequal degree deficits");
    const auto i = static_cast<std::size_t>(src - src_degree.begin());
    const auto j = static_cast<std::size_t>(dst - dst_degree.begin());
    g.edges.push_back(MultiEdge{i, j, Rational(0), Rational(0), std::nullopt});
    ++*src;
    ++*dst;
  }
  return g;
}

Decomposition matching_decomposition(const RegularizedGraph& g, MatchingVariant variant) {
  Decomposition out;
  const std::size_t n = g.size;
  if (g.edges.empty()) return out;

  detail::TickScale scale;
  for (const auto& e : g.edges) {
    scale.include(e.weight);
    scale.include(e.original_weight);
  }
  std::vector<std::int64_t> weight;
  weight.reserve(g.edges.size());
  for (const auto& e : g.edges) weight.push_back(scale.ticks(e.weight));

  // Per cell, the parallel edges still present, best candidate last:
  // heavier first, real before dummy, then lower edge index.
  std::vector<std::vector<std::size_t>> cells(n * n);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    cells[g.edges[k].source * n + g.edges[k].dest].push_back(k);
  }
  for (auto& stack : cells) {
    std::sort(stack.begin(), stack.end(), [&](std::size_t a, std::size_t b) {
      if (weight[a] != weight[b]) return weight[a] < weight[b];
      if (g.edges[a].real() != g.edges[b].real()) return !g.edges[a].real();
      return a > b;
    });
  }

  std::size_t left = g.edges.size();
  std::size_t real_left = 0;
  for (const auto& e : g.edges) real_left += e.real() ? 1 : 0;

  SquareMatrix<std::int64_t> cell_weight(n, 0);
  SquareMatrix<char> present(n, 0);
  while (left > 0) {
    if (variant == MatchingVariant::MaxWeight && real_left == 0) break;  // only dummies remain

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& stack = cells[i * n + j];
        present(i, j) = stack.empty() ? 0 : 1;
        cell_weight(i, j) = stack.empty() ? 0 : weight[stack.back()];
      }
    }

    std::vector<std::optional<std::size_t>> row_to_col(n);
    if (variant == MatchingVariant::Perfect) {
      const auto assigned = detail::max_weight_assignment(cell_weight, present);
      if (!assigned) throw InternalError("os01pt: regular multigraph without a perfect matching");
      for (std::size_t i = 0; i < n; ++i) row_to_col[i] = (*assigned)[i];
    } else {
      row_to_col = detail::max_weight_matching(cell_weight, present);
    }
    ++out.iterations;

    std::vector<Pair> pairs;
    Rational duration(0);
    std::size_t removed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_to_col[i]) continue;
      auto& stack = cells[i * n + *row_to_col[i]];
      const MultiEdge& e = g.edges[stack.back()];
      stack.pop_back();
      ++removed;
      if (e.real()) {
        pairs.push_back({e.source, e.dest});
        duration = std::max(duration, e.original_weight);
        --real_left;
      }
    }
    if (removed == 0) throw InternalError("os01pt: empty matching on a nonempty graph");
    left -= removed;
    if (!pairs.empty()) out.schedule.rounds.push_back(Round{Matching(std::move(pairs)), duration});
  }
  return out;
}

Schedule os01pt_schedule(const PbsInstance& inst) {
  auto sched = matching_decomposition(regularize(inst, EdgeWeighting::Plain),
                                      MatchingVariant::Perfect)
                   .schedule;
  sched.algorithm = "os01pt";
  return sched;
}

Schedule i_os01pt_schedule(const PbsInstance& inst) {
  auto sched = matching_decomposition(regularize(inst, EdgeWeighting::PlusSetupCost),
                                      MatchingVariant::MaxWeight)
                   .schedule;
  sched.algorithm = "i-os01pt";
  return sched;
}

}  // namespace pbs
