#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kcn/geometry.hpp"

namespace kcn {

enum class Provenance {
  object_point,       // one point inside each disk (its center)
  bisector_event,     // bisector point equidistant to a third disk
  interval_minimum,   // closest-to-vertex point of an event-free bisector arc
};

const char* to_string(Provenance p);

struct CandidatePoint {
  Point point;
  Provenance provenance = Provenance::object_point;
  std::size_t first = 0;   // defining disk (the only one for object points)
  std::size_t second = 0;  // second defining disk of the bisector
  double distance = 0;     // distance to the defining disk(s)
};

/// Candidate centers and radii containing an optimal solution for every k.
struct CandidateSets {
  std::vector<CandidatePoint> points;
  std::vector<double> radii;  // ascending, deduplicated, radii.front() == 0
};

/// Upper bound on the optimal radius for any k >= 1: the one-center radius
/// of the first disk's center.
double radius_upper_bound(std::span<const Disk> disks);

/// Builds the candidate sets for pairwise-disjoint planar disks. Bisector
/// events farther than radius_upper_bound from their disks are skipped since
/// no optimal center can use them.
CandidateSets canonical_candidates(std::span<const Disk> disks);

/// Sorts and merges values within `rel_tol * max(1, |v|)` of the first value
/// of their run.
std::vector<double> sorted_unique(std::vector<double> values, double rel_tol);

/// Removes points within `tol` of an earlier point, keeping first occurrences.
std::vector<CandidatePoint> unique_points(std::vector<CandidatePoint> points, double tol);

}  // namespace kcn
