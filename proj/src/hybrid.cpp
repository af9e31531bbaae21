#include "pbs/hybrid.hpp"

#include "pbs/os01pt.hpp"
#include "pbs/posa.hpp"

namespace pbs {

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::Posa: return "posa";
    case Algorithm::Os01pt: return "os01pt";
    case Algorithm::IOs01pt: return "i-os01pt";
    case Algorithm::IHsa: return "i-hsa";
    case Algorithm::Sga: return "sga";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto alg : kAllAlgorithms) {
    if (algorithm_name(alg) == name) return alg;
  }
  return std::nullopt;
}

AlgorithmOutcome make_outcome(std::string label, const PbsInstance& inst, Schedule schedule) {
  AlgorithmOutcome out;
  out.label = std::move(label);
  out.metrics = compute_metrics(inst);
  out.rounds = schedule.round_count();
  out.sum_durations = schedule.total_duration();
  out.cost = schedule_cost(schedule, inst.setup_cost());
  out.schedule = std::move(schedule);
  return out;
}

AlgorithmOutcome choose_hybrid(AlgorithmOutcome posa, AlgorithmOutcome i_os01pt) {
  AlgorithmOutcome out = i_os01pt.cost < posa.cost ? std::move(i_os01pt) : std::move(posa);
  out.label = "i-hsa";
  return out;
}

AlgorithmOutcome i_hsa_schedule(const PbsInstance& inst) {
  return choose_hybrid(make_outcome("posa", inst, posa_schedule(inst)),
                       make_outcome("i-os01pt", inst, i_os01pt_schedule(inst)));
}

AlgorithmOutcome sga_schedule(const PbsInstance& inst) {
  std::vector<Edge> big, small;
  for (const auto& e : inst.edges()) (e.weight >= inst.setup_cost() ? big : small).push_back(e);

  const auto big_part = PbsInstance::create(inst.n_sources(), inst.n_dests(), std::move(big),
                                            inst.setup_cost());
  const auto small_part = PbsInstance::create(inst.n_sources(), inst.n_dests(), std::move(small),
                                              inst.setup_cost());

  Schedule sched = posa_schedule(big_part);
  Schedule tail = i_os01pt_schedule(small_part);
  sched.rounds.insert(sched.rounds.end(), std::make_move_iterator(tail.rounds.begin()),
                      std::make_move_iterator(tail.rounds.end()));
  sched.algorithm = "sga";
  return make_outcome("sga", inst, std::move(sched));
}

AlgorithmOutcome run_algorithm(Algorithm alg, const PbsInstance& inst) {
  switch (alg) {
    case Algorithm::Posa: return make_outcome("posa", inst, posa_schedule(inst));
    case Algorithm::Os01pt: return make_outcome("os01pt", inst, os01pt_schedule(inst));
    case Algorithm::IOs01pt: return make_outcome("i-os01pt", inst, i_os01pt_schedule(inst));
    case Algorithm::IHsa: return i_hsa_schedule(inst);
    case Algorithm::Sga: return sga_schedule(inst);
  }
  return i_hsa_schedule(inst);
}

}  // namespace pbs
