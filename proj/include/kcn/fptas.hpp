#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"
#include "kcn/instance.hpp"

namespace kcn {

enum class KCenterMode {
  automatic,         // exact candidates when small enough, grid otherwise
  exact_candidates,  // points, pair midpoints and triple circumcenters
  grid,              // farthest-point seeding, then a grid of candidate centers
};

struct FptasConfig {
  double epsilon = 0.5;
  double gamma = 16;  // instances with n <= gamma k / eps^2 are solved exactly
  KCenterMode mode = KCenterMode::automatic;
};

/// Result of the smallest-radius search over a finite candidate set.
struct DiscreteCover {
  double radius = 0;                // the smallest feasible value of `radii`
  std::vector<std::size_t> chosen;  // candidate (row) indices
};

/// Smallest value of the ascending `radii` at which at most k candidates
/// cover every object, where distance(c, i) is the candidate-object distance.
/// Returns nullopt if even the largest value fails.
std::optional<DiscreteCover> discrete_k_cover(const Eigen::MatrixXd& distance, int k,
                                              std::span<const double> radii);

/// Farthest-point traversal from points[0]; returns the chosen indices.
std::vector<std::size_t> farthest_point_seeds(std::span<const Point> points, int k);

/// (1 + epsilon)-approximate Euclidean k-center of planar points. The
/// Solution radius is max over points of the distance to the nearest center.
Solution kcenter_points(std::span<const Point> points, int k, double epsilon,
                        KCenterMode mode = KCenterMode::automatic);

/// (1 + epsilon)-radius-approximation for disjoint unit disks.
Solution solve_unit_disks_small_k(std::span<const Disk> disks, int k,
                                  const FptasConfig& config);

}  // namespace kcn
