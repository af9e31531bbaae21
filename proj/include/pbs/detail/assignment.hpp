#pragma once

// Assignment kernels shared by every decomposition. Templated on the value
// type so the same code runs on exact Rationals at the public API and on
// integer ticks inside the schedulers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pbs/errors.hpp"
#include "pbs/matrix.hpp"

namespace pbs::detail {

/// Element of the lexicographically ordered group T × int64: compares on
/// `primary` first, then `secondary`. Running the assignment kernel over
/// this type maximizes weight and breaks weight ties by the secondary sum.
template <class T>
struct LexValue {
  T primary{};
  std::int64_t secondary = 0;

  friend LexValue operator+(const LexValue& a, const LexValue& b) {
    return {a.primary + b.primary, a.secondary + b.secondary};
  }
  friend LexValue operator-(const LexValue& a, const LexValue& b) {
    return {a.primary - b.primary, a.secondary - b.secondary};
  }
  friend LexValue operator-(const LexValue& a) { return {-a.primary, -a.secondary}; }
  LexValue& operator+=(const LexValue& o) { return *this = *this + o; }
  LexValue& operator-=(const LexValue& o) { return *this = *this - o; }
  friend bool operator==(const LexValue& a, const LexValue& b) {
    return a.primary == b.primary && a.secondary == b.secondary;
  }
  friend bool operator<(const LexValue& a, const LexValue& b) {
    if (a.primary < b.primary) return true;
    if (b.primary < a.primary) return false;
    return a.secondary < b.secondary;
  }
};

namespace assignment_impl {

// Among the perfect matchings of the tight subgraph, move to the one whose
// row->col vector is lexicographically smallest. The tight subgraph of an
// optimal dual holds exactly the optimal assignments, so this selects the
// canonical optimum without changing the total.
inline void lex_smallest(std::vector<std::size_t>& row_to_col, const SquareMatrix<char>& tight) {
  const std::size_t n = row_to_col.size();
  std::vector<std::size_t> col_to_row(n);
  for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;
  std::vector<char> locked(n, 0);
  std::vector<char> seen(n, 0);

  // Re-seat `row` on some column so that `target` ends up owned by the row
  // currently sitting on it; only unlocked columns other than `avoid` move.
  auto reseat = [&](auto&& self, std::size_t row, std::size_t target, std::size_t avoid) -> bool {
    for (std::size_t c = 0; c < n; ++c) {
      if (!tight(row, c) || locked[c] || c == avoid || seen[c]) continue;
      seen[c] = 1;
      if (c == target || self(self, col_to_row[c], target, avoid)) {
        row_to_col[row] = c;
        col_to_row[c] = row;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t current = row_to_col[i];
    for (std::size_t j = 0; j < current; ++j) {
      if (!tight(i, j) || locked[j]) continue;
      std::fill(seen.begin(), seen.end(), 0);
      const std::size_t holder = col_to_row[j];
      if (reseat(reseat, holder, current, j)) {
        row_to_col[i] = j;
        col_to_row[j] = i;
        break;
      }
    }
    locked[row_to_col[i]] = 1;
  }
}

}  // namespace assignment_impl

/// Maximum-weight perfect assignment on the pairs marked in `admissible`,
/// canonicalized to the lexicographically smallest optimal row->col vector.
/// Returns nullopt if the mask admits no perfect assignment.
template <class T>
std::optional<std::vector<std::size_t>> max_weight_assignment(const SquareMatrix<T>& weight,
                                                              const SquareMatrix<char>& admissible) {
  const std::size_t n = weight.size();
  if (n == 0) return std::vector<std::size_t>{};

  // Shortest augmenting path Hungarian method on cost = -weight, 1-based
  // with column 0 as the virtual root.
  std::vector<T> u(n + 1, T{}), v(n + 1, T{}), minv(n + 1, T{});
  std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0), reached(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(reached.begin(), reached.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      bool found = false;
      T delta{};
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        if (admissible(i0 - 1, j - 1)) {
          const T cur = -weight(i0 - 1, j - 1) - u[i0] - v[j];
          if (!reached[j] || cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
            reached[j] = 1;
          }
        }
        if (reached[j] && (!found || minv[j] < delta)) {
          delta = minv[j];
          j1 = j;
          found = true;
        }
      }
      if (!found) return std::nullopt;
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else if (reached[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[owner[j] - 1] = j - 1;

  SquareMatrix<char> tight(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!admissible(i, j)) continue;
      const T reduced = -weight(i, j) - u[i + 1] - v[j + 1];
      if (reduced < T{}) throw InternalError("assignment duals lost feasibility");
      tight(i, j) = reduced == T{} ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!tight(i, row_to_col[i])) throw InternalError("assignment left a slack matched pair");
  }
  assignment_impl::lex_smallest(row_to_col, tight);
  return row_to_col;
}

/// Maximum-weight matching (not necessarily perfect) on the admissible pairs,
/// weights nonnegative. Among equal-weight optima the one with more pairs
/// wins; remaining ties go to the lexicographically smallest completed
/// assignment. Entry i holds row i's column, or nullopt if unmatched.
template <class T>
std::vector<std::optional<std::size_t>> max_weight_matching(const SquareMatrix<T>& weight,
                                                            const SquareMatrix<char>& admissible) {
  const std::size_t n = weight.size();
  // Complete the graph with zero-value filler pairs; real pairs carry one
  // unit of secondary value, so ties in weight favor cardinality.
  SquareMatrix<LexValue<T>> lifted(n);
  SquareMatrix<char> all(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (admissible(i, j)) lifted(i, j) = LexValue<T>{weight(i, j), 1};
    }
  }
  auto assigned = max_weight_assignment(lifted, all);
  if (!assigned) throw InternalError("complete graph has no perfect assignment");

  std::vector<std::optional<std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (*assigned)[i];
    if (admissible(i, j)) out[i] = j;
  }
  return out;
}

}  // namespace pbs::detail
