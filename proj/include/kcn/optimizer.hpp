#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/instance.hpp"

namespace kcn {

/// Called once per decider probe with the probed radius and its verdict.
using ProbeObserver = std::function<void(double radius, bool feasible)>;

/// (5 + 2 sqrt 3)-approximation for disjoint planar disks: binary search of
/// the decider over the canonical radii.
Solution solve_disks(std::span<const Disk> disks, int k, const ProbeObserver& observer = {});

/// Candidate radii for balls in any dimension: ball-to-other-center distances
/// and half gaps, positive values only, ascending.
std::vector<double> ball_candidate_radii(std::span<const Ball> balls);

/// (5 + 2 sqrt 3 + epsilon)-approximation for disjoint balls in R^d: binary
/// search over ball_candidate_radii, then over the geometric grid
/// z/c * (1 + epsilon/c)^i bracketing the optimum.
Solution solve_balls_dd(std::span<const Ball> balls, int k, double epsilon,
                        const ProbeObserver& observer = {});

}  // namespace kcn
