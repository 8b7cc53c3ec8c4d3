#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/instance.hpp"

namespace kcn {

/// base + B(radius): the points whose radius-ball touches the base object.
struct InflatedRegion {
  Object base;
  std::size_t index = 0;
  double radius = 0;

  bool contains(const Point& s, double slack = 0) const {
    return hits<double>(s, base, radius, slack);
  }
};

std::vector<InflatedRegion> inflate(std::span<const Object> objects, double radius);

/// Greedy hitting set: repeatedly take the candidate hitting the most regions
/// not yet hit, lowest index on ties. Returns candidate indices. Throws
/// InputError naming the first region no candidate hits.
std::vector<std::size_t> greedy_hitting_set(std::span<const InflatedRegion> regions,
                                            std::span<const Point> candidates,
                                            double slack = 0);

/// b-swap local search for a hitting set drawn from `candidates`.
///
/// Starts from `initial` (candidate indices; the greedy set when empty) and
/// repeatedly replaces t <= b chosen points by at most t - 1 candidates while
/// every region stays hit. The result admits no such swap.
std::vector<std::size_t> local_search_hitting_set(std::span<const InflatedRegion> regions,
                                                  std::span<const Point> candidates, int b,
                                                  std::vector<std::size_t> initial = {},
                                                  double slack = 0);

/// Points of the b-locally-optimal hitting set.
std::vector<Point> hitting_set_local_search(std::span<const InflatedRegion> regions,
                                            std::span<const Point> candidates, int b,
                                            double slack = 0);

/// Perturbation that turns tangent inflated disks into properly overlapping
/// ones without creating new overlaps: a quarter of the smallest positive gap
/// between the inflated disks, or 0 when no pair is tangent within kTolerance.
double inflation_perturbation(std::span<const Disk> disks, double radius);

/// Largest perturbation actually applied; keeps reported radii within
/// kTolerance of the searched candidate radius.
inline constexpr double kPerturbationCap = 1e-10;

inline constexpr int kDefaultSwapSize = 3;

/// (1 + epsilon)-size-approximation: binary search over the canonical radii,
/// moving right whenever the hitting set has more than (1 + epsilon) k points.
Solution solve_size(std::span<const Disk> disks, int k, double epsilon,
                    int swap_size = kDefaultSwapSize);

}  // namespace kcn
