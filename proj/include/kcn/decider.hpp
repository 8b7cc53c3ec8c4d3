#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/matching.hpp"

namespace kcn {

/// 5 + 2*sqrt(3): radius factor of the decider.
inline const double kDeciderFactor = 5.0 + 2.0 * std::sqrt(3.0);
/// 3 + 2*sqrt(3): disks at least this many times r skip the sweep phase.
inline const double kLargeDiskFactor = 3.0 + 2.0 * std::sqrt(3.0);
/// 2/sqrt(3) - 1: three disjoint radius-r disks are never all this close to a point.
inline const double kPackingFactor = 2.0 / std::sqrt(3.0) - 1.0;

/// Centers ordered as the sweep part, the lone-disk part and the paired part.
struct Cover {
  std::vector<Point> centers;
  std::array<std::size_t, 3> part_sizes{0, 0, 0};

  std::span<const Point> part(std::size_t i) const;
};

struct DeciderVerdict {
  std::optional<Cover> cover;      // set iff the verdict is Cover
  std::size_t centers_needed = 0;  // |S| whether or not it fits in k

  bool feasible() const { return cover.has_value(); }
};

/// True iff at least three of the disks lie within (2/sqrt(3) - 1) r of s.
/// Never true for disjoint disks of radius >= r; exists as a test oracle.
bool packing_admits_three(std::span<const Ball> disks, const Point& s, double r);

/// Graph on `members` with an edge whenever two balls are within 2r + slack.
ProximityGraph build_proximity_graph(std::span<const Ball> balls,
                                     std::span<const std::size_t> members, double r,
                                     double slack = kTolerance);

/// The (5 + 2 sqrt 3)-decider for disjoint balls of any dimension.
///
/// If r >= r_opt it returns a cover of radius <= (5 + 2 sqrt 3) r with at
/// most k centers; if r < r_opt / (5 + 2 sqrt 3) it returns Infeasible.
/// Distance comparisons against r are relaxed by `slack`.
DeciderVerdict decide(std::span<const Ball> balls, int k, double r, double slack = kTolerance);

}  // namespace kcn
