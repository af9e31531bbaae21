#pragma once

#include "pbs/instance.hpp"
#include "pbs/matrix.hpp"

namespace pbs {

/// Demand matrix topped up with slack so that every row and column sums to
/// the same value. `entries` = real demand + slack; `real` marks cells that
/// carry original demand.
struct PaddedWorkMatrix {
  SquareMatrix<Rational> entries;
  SquareMatrix<Rational> slack;
  SquareMatrix<char> real;
  Rational balance{0};  // common row/column sum

  std::size_t size() const { return entries.size(); }
};

/// Adds slack so all line sums equal the largest line sum. Slack is placed
/// by a row-major sweep assigning min(row deficit, column deficit) per cell.
PaddedWorkMatrix pad_to_doubly_balanced(const SquareMatrix<Rational>& m);

/// Preemptive open-shop decomposition. Each step matches a maximum-weight
/// perfect matching on the positive cells of the padded matrix, runs it for
/// the smallest matched entry, and emits the real pairs it served. Total
/// duration equals W. Consecutive rounds with the same real pairs are merged.
Schedule posa_schedule(const PbsInstance& inst);

}  // namespace pbs
