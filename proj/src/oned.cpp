#include "kcn/oned.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kcn {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) validate(Object{iv});
  const std::size_t n = intervals_.size();
  by_left_.resize(n);
  by_right_.resize(n);
  std::iota(by_left_.begin(), by_left_.end(), 0);
  std::iota(by_right_.begin(), by_right_.end(), 0);
  std::stable_sort(by_left_.begin(), by_left_.end(), [&](std::size_t a, std::size_t b) {
    return intervals_[a].lo < intervals_[b].lo;
  });
  std::stable_sort(by_right_.begin(), by_right_.end(), [&](std::size_t a, std::size_t b) {
    return intervals_[a].hi < intervals_[b].hi;
  });
  left_rank_.resize(n);
  right_rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    left_rank_[by_left_[i]] = i;
    right_rank_[by_right_[i]] = i;
  }
}

std::vector<double> IntervalSet::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * intervals_.size());
  for (const auto& iv : intervals_) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict1D decide_1d(const IntervalSet& set, int k, double r) {
  if (!(r >= 0)) throw InputError("decide_1d requires r >= 0");
  if (k < 0) throw InputError("decide_1d requires k >= 0");
  const auto& iv = set.intervals();
  const auto& by_left = set.by_left();
  const auto& by_right = set.by_right();
  std::vector<char> removed(iv.size(), 0);
  std::vector<double> centers;
  std::size_t left_pos = 0;
  std::size_t right_pos = 0;
  while (true) {
    while (right_pos < by_right.size() && removed[by_right[right_pos]]) ++right_pos;
    if (right_pos == by_right.size()) break;
    const double beta = iv[by_right[right_pos]].hi;
    centers.push_back(beta + r);
    // Endpoint differences reach us through r = d / 2; absorb rounding.
    const double reach = beta + 2 * r;
    const double slack = 1e-12 * std::max(1.0, std::abs(reach));
    while (left_pos < by_left.size() && iv[by_left[left_pos]].lo <= reach + slack) {
      removed[by_left[left_pos]] = 1;
      ++left_pos;
    }
  }
  Verdict1D v;
  v.centers_needed = centers.size();
  if (centers.size() <= static_cast<std::size_t>(k)) v.centers = std::move(centers);
  return v;
}

SortedMatrix build_sorted_matrix(std::vector<double> values) {
  if (values.size() < 2) throw InputError("build_sorted_matrix needs at least two values");
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("build_sorted_matrix needs finite values");
  }
  std::sort(values.begin(), values.end());
  const double origin = values.front();
  for (double& v : values) v -= origin;
  return SortedMatrix(std::move(values));
}

namespace {

struct Block {
  std::size_t row;
  std::size_t col;
  std::size_t size;
};

}  // namespace

MatrixSearchResult msearch(const SortedMatrix& m, const std::function<bool(double)>& feasible,
                           std::size_t stop_count, double lambda1, double lambda2) {
  const std::size_t n = m.dim();
  MatrixSearchResult res;
  res.infeasible_bound = lambda1;
  res.feasible_bound = lambda2;
  if (n == 0) return res;

  auto rows_end = [&](const Block& b) { return std::min(b.row + b.size, n); };
  auto cols_end = [&](const Block& b) { return std::min(b.col + b.size, n); };
  auto largest = [&](const Block& b) { return m.entry(b.row, b.col); };
  auto smallest = [&](const Block& b) { return m.entry(rows_end(b) - 1, cols_end(b) - 1); };
  auto area = [&](const Block& b) { return (rows_end(b) - b.row) * (cols_end(b) - b.col); };

  std::size_t padded = 1;
  while (padded < n) padded *= 2;
  std::vector<Block> active{{0, 0, padded}};

  auto prune = [&] {
    std::erase_if(active, [&](const Block& b) {
      return !(largest(b) > res.infeasible_bound && smallest(b) < res.feasible_bound);
    });
  };
  auto probe = [&](double v) {
    if (!(v > res.infeasible_bound && v < res.feasible_bound)) return;
    ++res.tests;
    if (feasible(v)) res.feasible_bound = v;
    else res.infeasible_bound = v;
    prune();
  };
  auto median_of = [&](auto key) {
    std::vector<double> vals;
    vals.reserve(active.size());
    for (const auto& b : active) vals.push_back(key(b));
    auto mid = vals.begin() + static_cast<std::ptrdiff_t>((vals.size() - 1) / 2);
    std::nth_element(vals.begin(), mid, vals.end());
    return *mid;
  };

  prune();
  while (!active.empty()) {
    std::size_t total = 0;
    bool all_unit = true;
    for (const auto& b : active) {
      total += area(b);
      all_unit = all_unit && b.size == 1;
    }
    if (total <= stop_count) break;

    if (!all_unit) {
      std::vector<Block> next;
      next.reserve(4 * active.size());
      for (const auto& b : active) {
        if (b.size == 1) {
          next.push_back(b);
          continue;
        }
        const std::size_t h = b.size / 2;
        for (std::size_t dr : {std::size_t{0}, h}) {
          for (std::size_t dc : {std::size_t{0}, h}) {
            const Block q{b.row + dr, b.col + dc, h};
            if (q.row < n && q.col < n) next.push_back(q);
          }
        }
      }
      active = std::move(next);
      prune();
      if (active.empty()) break;
    }

    probe(median_of(smallest));
    if (active.empty()) break;
    if (!all_unit) probe(median_of(largest));
  }

  for (const auto& b : active) {
    for (std::size_t i = b.row; i < rows_end(b); ++i) {
      for (std::size_t j = b.col; j < cols_end(b); ++j) {
        const double v = m.entry(i, j);
        if (v > res.infeasible_bound && v < res.feasible_bound) res.remaining.push_back(v);
      }
    }
  }
  std::sort(res.remaining.begin(), res.remaining.end());
  if (stop_count == 0 && std::isinf(res.feasible_bound))
    throw InputError("msearch: no feasible matrix entry in the search range");
  return res;
}

Solution solve_1d(std::span<const Interval> intervals, int k) {
  if (k <= 0) throw InputError("k must be at least 1");
  Solution sol;
  sol.algorithm = "1d";
  if (intervals.empty()) return sol;

  const IntervalSet set({intervals.begin(), intervals.end()});
  auto at_zero = decide_1d(set, k, 0.0);
  sol.decider_calls = 1;
  std::vector<double> centers;
  if (at_zero.feasible()) {
    centers = std::move(*at_zero.centers);
  } else {
    const SortedMatrix matrix = build_sorted_matrix(set.endpoints());
    double best_gap = std::numeric_limits<double>::infinity();
    auto feasible = [&](double gap) {
      auto v = decide_1d(set, k, gap / 2);
      if (v.feasible() && gap < best_gap) {
        best_gap = gap;
        centers = std::move(*v.centers);
      }
      return v.feasible();
    };
    const auto res = msearch(matrix, feasible);
    sol.decider_calls += res.tests;
  }
  for (double c : centers) sol.centers.push_back(make_point({c}));
  const auto objects = to_objects(intervals);
  sol.radius = cover_radius(objects, sol.centers);
  return sol;
}

}  // namespace kcn
