#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond its plain data types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "pbs/instance.hpp"
#include "pbs/matrix.hpp"
#include "pbs/rational.hpp"
#include "pbs/rng.hpp"

namespace oracle {

using pbs::Rational;
using Grid = std::vector<std::vector<Rational>>;
using Mask = std::vector<std::vector<bool>>;

inline Grid to_grid(const pbs::SquareMatrix<Rational>& m) {
  Grid g(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m(i, j);
  return g;
}

/// Best total over all perfect matchings inside the mask, by permutation
/// enumeration. nullopt when no perfect matching exists.
inline std::optional<Rational> best_perfect(const Grid& w, const Mask& mask) {
  const std::size_t n = w.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Rational> best;
  do {
    Rational total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = mask[i][perm[i]];
      total += w[i][perm[i]];
    }
    if (ok && (!best || total > *best)) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Best total over all (not necessarily perfect) matchings inside the mask,
/// plus the largest cardinality achieving that total.
struct BestMatching {
  Rational total{0};
  std::size_t cardinality = 0;
};

inline BestMatching best_matching(const Grid& w, const Mask& mask) {
  const std::size_t n = w.size();
  BestMatching best;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t, Rational, std::size_t)> go = [&](std::size_t row, Rational acc,
                                                                   std::size_t card) {
    if (row == n) {
      if (acc > best.total || (acc == best.total && card > best.cardinality)) best = {acc, card};
      return;
    }
    go(row + 1, acc, card);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || !mask[row][c]) continue;
      used[c] = true;
      go(row + 1, acc + w[row][c], card + 1);
      used[c] = false;
    }
  };
  go(0, Rational(0), 0);
  return best;
}

/// Δ and W straight from the definition.
struct Metrics {
  std::size_t delta = 0;
  Rational big_w{0};
};

inline Metrics metrics(const pbs::PbsInstance& inst) {
  std::vector<std::size_t> src_deg(inst.n_sources()), dst_deg(inst.n_dests());
  std::vector<Rational> src_load(inst.n_sources()), dst_load(inst.n_dests());
  for (const auto& e : inst.edges()) {
    ++src_deg[e.source];
    ++dst_deg[e.dest];
    src_load[e.source] += e.weight;
    dst_load[e.dest] += e.weight;
  }
  Metrics m;
  for (auto d : src_deg) m.delta = std::max(m.delta, d);
  for (auto d : dst_deg) m.delta = std::max(m.delta, d);
  for (const auto& l : src_load) m.big_w = std::max(m.big_w, l);
  for (const auto& l : dst_load) m.big_w = std::max(m.big_w, l);
  return m;
}

/// Independent feasibility replay: every round must be a matching over
/// demand edges, and each edge's served time (capped by its demand) must add
/// up to exactly its weight. Rounds that serve an already finished edge are
/// rejected too.
inline bool feasible(const pbs::PbsInstance& inst, const pbs::Schedule& s) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> left;
  for (const auto& e : inst.edges()) left[{e.source, e.dest}] = e.weight;
  for (const auto& r : s.rounds) {
    if (r.duration <= Rational(0)) return false;
    std::vector<std::size_t> srcs, dsts;
    for (const auto& p : r.matching.pairs()) {
      srcs.push_back(p.source);
      dsts.push_back(p.dest);
      auto it = left.find({p.source, p.dest});
      if (it == left.end() || it->second <= Rational(0)) return false;
      it->second -= std::min(it->second, r.duration);
    }
    std::sort(srcs.begin(), srcs.end());
    std::sort(dsts.begin(), dsts.end());
    if (std::adjacent_find(srcs.begin(), srcs.end()) != srcs.end()) return false;
    if (std::adjacent_find(dsts.begin(), dsts.end()) != dsts.end()) return false;
  }
  for (const auto& [k, v] : left) {
    if (v != Rational(0)) return false;
  }
  return true;
}

/// Random instance with integer weights in [1, max_w]; each pair present
/// with probability `density`.
inline pbs::PbsInstance random_instance(pbs::Rng& rng, std::size_t ns, std::size_t nd,
                                        std::int64_t max_w, double density, Rational d) {
  std::vector<pbs::Edge> edges;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nd; ++j)
      if (rng.uniform01() < density) edges.push_back({i, j, Rational(rng.uniform_int(1, max_w))});
  return pbs::PbsInstance::create(ns, nd, std::move(edges), d);
}

inline pbs::PbsInstance from_grid(const std::vector<std::vector<int>>& w, Rational d) {
  std::vector<pbs::Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w[i].size(); ++j)
      if (w[i][j] > 0) edges.push_back({i, j, Rational(w[i][j])});
  return pbs::PbsInstance::create(w.size(), w.empty() ? 0 : w[0].size(), std::move(edges), d);
}

}  // namespace oracle
