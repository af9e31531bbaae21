#include "pbs/instance.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "pbs/errors.hpp"

namespace pbs {

PbsInstance PbsInstance::create(std::size_t n_sources, std::size_t n_dests,
                                std::vector<Edge> edges, Rational setup_cost) {
  if (sign(setup_cost) < 0) throw InputError("setup cost must be nonnegative");
  std::erase_if(edges, [](const Edge& e) { return sign(e.weight) == 0; });
  for (const auto& e : edges) {
    if (e.source >= n_sources || e.dest >= n_dests) {
      throw InputError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.dest) +
                       ") is outside a " + std::to_string(n_sources) + "x" +
                       std::to_string(n_dests) + " instance");
    }
    if (sign(e.weight) < 0) {
      throw InputError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.dest) +
                       ") has negative weight");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.dest) < std::tie(b.source, b.dest);
  });
  const auto dup = std::adjacent_find(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source == b.source && a.dest == b.dest;
  });
  if (dup != edges.end()) {
    throw InputError("parallel edges on (" + std::to_string(dup->source) + ", " +
                     std::to_string(dup->dest) + ")");
  }

  PbsInstance inst;
  inst.n_sources_ = n_sources;
  inst.n_dests_ = n_dests;
  inst.edges_ = std::move(edges);
  inst.setup_cost_ = setup_cost;
  return inst;
}

PbsInstance PbsInstance::with_setup_cost(Rational setup_cost) const {
  if (sign(setup_cost) < 0) throw InputError("setup cost must be nonnegative");
  PbsInstance out = *this;
  out.setup_cost_ = setup_cost;
  return out;
}

const Edge* PbsInstance::find(std::size_t source, std::size_t dest) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{source, dest},
                             [](const Edge& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{e.source, e.dest} < key;
                             });
  if (it == edges_.end() || it->source != source || it->dest != dest) return nullptr;
  return &*it;
}

InstanceMetrics compute_metrics(const PbsInstance& inst) {
  std::vector<std::size_t> src_degree(inst.n_sources(), 0), dst_degree(inst.n_dests(), 0);
  std::vector<Rational> src_load(inst.n_sources(), Rational(0)),
      dst_load(inst.n_dests(), Rational(0));
  for (const auto& e : inst.edges()) {
    ++src_degree[e.source];
    ++dst_degree[e.dest];
    src_load[e.source] += e.weight;
    dst_load[e.dest] += e.weight;
  }

  InstanceMetrics m;
  for (auto deg : src_degree) m.delta = std::max(m.delta, deg);
  for (auto deg : dst_degree) m.delta = std::max(m.delta, deg);
  for (const auto& load : src_load) m.big_w = std::max(m.big_w, load);
  for (const auto& load : dst_load) m.big_w = std::max(m.big_w, load);
  m.lower_bound = m.big_w + inst.setup_cost() * static_cast<std::int64_t>(m.delta);
  return m;
}

SquareMatrix<Rational> to_matrix(const PbsInstance& inst) {
  SquareMatrix<Rational> out(std::max(inst.n_sources(), inst.n_dests()), Rational(0));
  for (const auto& e : inst.edges()) out(e.source, e.dest) = e.weight;
  return out;
}

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

bool Matching::valid() const {
  std::vector<std::size_t> sources, dests;
  sources.reserve(pairs_.size());
  dests.reserve(pairs_.size());
  for (const auto& p : pairs_) {
    sources.push_back(p.source);
    dests.push_back(p.dest);
  }
  std::sort(sources.begin(), sources.end());
  std::sort(dests.begin(), dests.end());
  return std::adjacent_find(sources.begin(), sources.end()) == sources.end() &&
         std::adjacent_find(dests.begin(), dests.end()) == dests.end();
}

Rational Schedule::total_duration() const {
  Rational total(0);
  for (const auto& r : rounds) total += r.duration;
  return total;
}

Rational schedule_cost(const Schedule& sched, const Rational& setup_cost) {
  return sched.total_duration() + setup_cost * static_cast<std::int64_t>(sched.round_count());
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IndexOutOfRange: return "index-out-of-range";
    case ViolationKind::UnknownPair: return "unknown-pair";
    case ViolationKind::SourceConflict: return "source-conflict";
    case ViolationKind::DestConflict: return "dest-conflict";
    case ViolationKind::NonPositiveDuration: return "non-positive-duration";
    case ViolationKind::ServedAfterExhausted: return "served-after-exhausted";
    case ViolationKind::UnderServed: return "under-served";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (round) out << " round " << *round;
  switch (kind) {
    case ViolationKind::SourceConflict:
      out << ": source " << source << " appears more than once";
      break;
    case ViolationKind::DestConflict:
      out << ": dest " << dest << " appears more than once";
      break;
    case ViolationKind::NonPositiveDuration:
      break;
    case ViolationKind::UnderServed:
      out << ": edge " << source << ":" << dest << " short by " << format_rational(amount);
      break;
    default:
      out << ": edge " << source << ":" << dest;
      break;
  }
  return out.str();
}

ValidationReport validate_schedule(const PbsInstance& inst, const Schedule& sched) {
  ValidationReport report;
  const auto& edges = inst.edges();
  std::vector<Rational> remaining;
  remaining.reserve(edges.size());
  for (const auto& e : edges) remaining.push_back(e.weight);

  auto add = [&](ViolationKind kind, std::size_t round, std::size_t s, std::size_t d) {
    report.violations.push_back(Violation{kind, round, s, d, Rational(0)});
  };

  for (std::size_t r = 0; r < sched.rounds.size(); ++r) {
    const auto& round = sched.rounds[r];
    if (sign(round.duration) <= 0) add(ViolationKind::NonPositiveDuration, r, 0, 0);

    std::vector<std::size_t> sources, dests;
    for (const auto& p : round.matching.pairs()) {
      sources.push_back(p.source);
      dests.push_back(p.dest);
    }
    std::sort(sources.begin(), sources.end());
    std::sort(dests.begin(), dests.end());
    for (std::size_t i = 1; i < sources.size(); ++i) {
      if (sources[i] == sources[i - 1] && (i == 1 || sources[i - 2] != sources[i])) {
        add(ViolationKind::SourceConflict, r, sources[i], 0);
      }
    }
    for (std::size_t i = 1; i < dests.size(); ++i) {
      if (dests[i] == dests[i - 1] && (i == 1 || dests[i - 2] != dests[i])) {
        add(ViolationKind::DestConflict, r, 0, dests[i]);
      }
    }

    for (const auto& p : round.matching.pairs()) {
      if (p.source >= inst.n_sources() || p.dest >= inst.n_dests()) {
        add(ViolationKind::IndexOutOfRange, r, p.source, p.dest);
        continue;
      }
      const Edge* edge = inst.find(p.source, p.dest);
      if (edge == nullptr) {
        add(ViolationKind::UnknownPair, r, p.source, p.dest);
        continue;
      }
      auto& left = remaining[static_cast<std::size_t>(edge - edges.data())];
      if (sign(left) == 0) {
        add(ViolationKind::ServedAfterExhausted, r, p.source, p.dest);
        continue;
      }
      if (sign(round.duration) > 0) left -= std::min(round.duration, left);
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (sign(remaining[i]) != 0) {
      report.violations.push_back(Violation{ViolationKind::UnderServed, std::nullopt,
                                            edges[i].source, edges[i].dest, remaining[i]});
    }
  }
  return report;
}

}  // namespace pbs
