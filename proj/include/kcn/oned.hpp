#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/instance.hpp"

namespace kcn {

/// Intervals (intersections allowed) presorted by left and by right endpoint.
/// `left_rank[i]` / `right_rank[i]` give interval i's position in each order.
class IntervalSet {
 public:
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<std::size_t>& by_left() const { return by_left_; }
  const std::vector<std::size_t>& by_right() const { return by_right_; }
  const std::vector<std::size_t>& left_rank() const { return left_rank_; }
  const std::vector<std::size_t>& right_rank() const { return right_rank_; }
  std::size_t size() const { return intervals_.size(); }

  /// All 2n endpoints, ascending.
  std::vector<double> endpoints() const;

 private:
  std::vector<Interval> intervals_;
  std::vector<std::size_t> by_left_;
  std::vector<std::size_t> by_right_;
  std::vector<std::size_t> left_rank_;
  std::vector<std::size_t> right_rank_;
};

struct Verdict1D {
  std::optional<std::vector<double>> centers;  // set iff at most k were needed
  std::size_t centers_needed = 0;

  bool feasible() const { return centers.has_value(); }
};

/// Greedy sweep: center at (leftmost right endpoint) + r, drop every interval
/// whose left endpoint is within 2r of that right endpoint, repeat. The sweep
/// uses the fewest possible centers, so the verdict is exact.
Verdict1D decide_1d(const IntervalSet& set, int k, double r);

/// Implicit (m-1) x (m-1) matrix with entry(i, j) = A[m-1-i] - A[j] over the
/// shifted ascending values A[i] = p[i] - p[0]. Rows and columns are
/// nonincreasing; entries include every pairwise difference p[j] - p[i], i < j.
class SortedMatrix {
 public:
  explicit SortedMatrix(std::vector<double> shifted) : shifted_(std::move(shifted)) {}

  std::size_t dim() const { return shifted_.size() - 1; }
  double entry(std::size_t i, std::size_t j) const {
    return shifted_[shifted_.size() - 1 - i] - shifted_[j];
  }
  const std::vector<double>& shifted() const { return shifted_; }

 private:
  std::vector<double> shifted_;
};

/// Sorts the values and shifts them so the smallest is zero. Needs >= 2 values.
SortedMatrix build_sorted_matrix(std::vector<double> values);

struct MatrixSearchResult {
  double infeasible_bound = 0;  // lambda_1: largest value known infeasible
  double feasible_bound = std::numeric_limits<double>::infinity();  // lambda_2
  std::vector<double> remaining;  // entries still strictly inside the range
  std::size_t tests = 0;          // feasibility tests performed
};

/// Sorted-matrix search: splits active submatrices into quadrants, tests the
/// median of the submatrix minima and of the maxima, and discards every
/// submatrix lying outside (lambda_1, lambda_2), until at most `stop_count`
/// entries remain. With stop_count = 0 the final lambda_2 is the smallest
/// feasible entry in the initial range. Values outside the current range are
/// never tested. Throws InputError if no entry in range is feasible while
/// lambda_2 is unbounded.
MatrixSearchResult msearch(const SortedMatrix& m, const std::function<bool(double)>& feasible,
                           std::size_t stop_count = 0, double lambda1 = 0,
                           double lambda2 = std::numeric_limits<double>::infinity());

/// Exact 1D optimum: radius 0 if the sweep succeeds there, otherwise half of
/// the smallest endpoint difference d for which decide_1d(d / 2) succeeds.
Solution solve_1d(std::span<const Interval> intervals, int k);

}  // namespace kcn
