#include "pbs/posa.hpp"

#include <algorithm>

#include "pbs/detail/assignment.hpp"
#include "pbs/detail/ticks.hpp"
#include "pbs/errors.hpp"

namespace pbs {

namespace {

template <class T>
SquareMatrix<T> balancing_slack(const SquareMatrix<T>& m, T& balance) {
  const std::size_t n = m.size();
  std::vector<T> row(n, T{}), col(n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row[i] += m(i, j);
      col[j] += m(i, j);
    }
  }
  balance = T{};
  for (std::size_t i = 0; i < n; ++i) balance = std::max({balance, row[i], col[i]});

  SquareMatrix<T> slack(n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T fill = std::min(balance - row[i], balance - col[j]);
      if (fill > T{}) {
        slack(i, j) = fill;
        row[i] += fill;
        col[j] += fill;
      }
    }
  }
  return slack;
}

using Ticks = std::int64_t;

void check_balanced(const SquareMatrix<Ticks>& real, const SquareMatrix<Ticks>& slack, Ticks expected) {
  const std::size_t n = real.size();
  for (std::size_t i = 0; i < n; ++i) {
    Ticks row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += real(i, j) + slack(i, j);
      col += real(j, i) + slack(j, i);
    }
    if (row != expected || col != expected) {
      throw InternalError("posa: work matrix lost double balance");
    }
  }
}

}  // namespace

PaddedWorkMatrix pad_to_doubly_balanced(const SquareMatrix<Rational>& m) {
  PaddedWorkMatrix out;
  out.slack = balancing_slack(m, out.balance);
  const std::size_t n = m.size();
  out.entries = SquareMatrix<Rational>(n, Rational(0));
  out.real = SquareMatrix<char>(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.entries(i, j) = m(i, j) + out.slack(i, j);
      out.real(i, j) = sign(m(i, j)) > 0 ? 1 : 0;
    }
  }
  return out;
}

Schedule posa_schedule(const PbsInstance& inst) {
  Schedule sched;
  sched.algorithm = "posa";
  const std::size_t n = std::max(inst.n_sources(), inst.n_dests());
  if (inst.edges().empty()) return sched;

  detail::TickScale scale;
  for (const auto& e : inst.edges()) scale.include(e.weight);

  SquareMatrix<Ticks> real(n, 0);
  for (const auto& e : inst.edges()) real(e.source, e.dest) = scale.ticks(e.weight);
  Ticks remaining = 0;
  SquareMatrix<Ticks> slack = balancing_slack(real, remaining);

  SquareMatrix<Ticks> work(n, 0);
  SquareMatrix<char> support(n, 0);
  while (remaining > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) = real(i, j) + slack(i, j);
        support(i, j) = work(i, j) > 0 ? 1 : 0;
      }
    }
    const auto assigned = detail::max_weight_assignment(work, support);
    if (!assigned) throw InternalError("posa: balanced matrix without a positive perfect matching");

    Ticks step = remaining;
    for (std::size_t i = 0; i < n; ++i) step = std::min(step, work(i, (*assigned)[i]));

    std::vector<Pair> served;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (*assigned)[i];
      const Ticks from_real = std::min(step, real(i, j));
      real(i, j) -= from_real;
      slack(i, j) -= step - from_real;
      if (from_real > 0) served.push_back({i, j});
    }
    remaining -= step;
    check_balanced(real, slack, remaining);

    if (served.empty()) continue;
    Matching matching(std::move(served));
    const Rational duration = scale.value(step);
    if (!sched.rounds.empty() && sched.rounds.back().matching == matching) {
      sched.rounds.back().duration += duration;
    } else {
      sched.rounds.push_back(Round{std::move(matching), duration});
    }
  }
  return sched;
}

}  // namespace pbs
