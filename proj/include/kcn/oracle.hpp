#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/instance.hpp"

namespace kcn {

/// Largest |P|^k the canonical brute force accepts.
inline constexpr double kOracleGuard = 1e8;

/// Exact optimum for disjoint planar disks: binary search over the canonical
/// radii with an exhaustive search for k canonical points at each radius.
/// Throws InputError when |P|^k exceeds kOracleGuard.
Solution brute_force_opt(std::span<const Disk> disks, int k);

/// Exact 1D optimum over the candidates {0} and all half endpoint differences,
/// decided by a right-to-left greedy.
Solution brute_force_opt_1d(std::span<const Interval> intervals, int k);

/// Dispatches on the object type of the instance.
Solution brute_force_opt(const Instance& inst);

/// Exact up to solver accuracy for balls or segments in any dimension: every
/// assignment of objects to at most k groups, each group solved as a convex
/// 1-center problem by the ellipsoid method. Limited to 14 objects.
Solution partition_opt(std::span<const Object> objects, int k);

/// Minimizer of max_i d(x, object_i) where balls use the signed distance
/// |x - c| - radius. Returns the point; `value` receives the objective.
Point one_center(std::span<const Object> objects, double* value = nullptr);

/// Partition oracle with each group's 1-center taken from a square grid of
/// spacing `step` over the padded bounding box. Limited to 4 objects.
Solution grid_opt(std::span<const Object> objects, int k, double step);

}  // namespace kcn
