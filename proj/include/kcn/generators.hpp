#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kcn/geometry.hpp"

namespace kcn {

struct DiskOptions {
  double box = 20;         // centers are drawn from [0, box]^d
  double min_radius = 0.2;
  double max_radius = 1.5;
  double min_gap = 0.05;   // minimum boundary distance between any two balls
};

/// Seeded rejection sampling of pairwise disjoint balls in R^dim.
/// Throws InputError if the box is too crowded for n balls.
std::vector<Ball> random_balls(std::size_t n, int dim, std::uint64_t seed,
                               const DiskOptions& opt = {});
std::vector<Disk> random_disks(std::size_t n, std::uint64_t seed, const DiskOptions& opt = {});
std::vector<Disk> random_unit_disks(std::size_t n, std::uint64_t seed, double box = 20,
                                    double min_gap = 0.05);

/// Seeded intervals with left ends in [0, span] and lengths in [0, max_length];
/// intersections are allowed.
std::vector<Interval> random_intervals(std::size_t n, std::uint64_t seed, double span = 100,
                                       double max_length = 10);

/// Straight-line embedded graph.
struct PlanarGraph {
  std::vector<Vector2> positions;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t degree(std::size_t v) const;
};

/// Built-in embeddings: "edge", "path", "star", "triangle", "k4", "square".
PlanarGraph named_graph(const std::string& name);

struct GadgetParams {
  PlanarGraph graph;
  int k = 1;                     // vertex-cover budget of the source instance
  double eps_shrink = 0.01;      // segment gadget: length removed at each end
  double delta_sep = 1e-4;       // disk gadget: gap inside a degree-3 triple
  std::vector<int> edge_disks;   // per-edge disk counts; empty or 0 = automatic
};

struct SegmentGadget {
  std::vector<Segment> segments;  // one per edge, in edge order
  int k = 0;
};

/// Edge segments with eps_shrink removed at both ends.
SegmentGadget gen_vc_segments(const GadgetParams& params);

/// 4 / sqrt(3): center distance of consecutive gadget disks.
inline const double kChainStep = 4.0 / std::sqrt(3.0);
/// 2 (2 / sqrt(3) - 1): boundary gap of consecutive gadget disks.
inline const double kChainGap = 2.0 * (2.0 / std::sqrt(3.0) - 1.0);
/// 2 sqrt(13/3) - 2: distance from a triple disk to the second disk of another edge.
inline const double kTripleCrossDistance = 2.0 * std::sqrt(13.0 / 3.0) - 2.0;

struct DiskGadget {
  std::vector<Disk> disks;
  std::vector<std::vector<std::size_t>> chains;    // disk indices per edge, u end first
  std::vector<std::array<std::size_t, 3>> triples;  // end disks at each degree-3 vertex
  std::vector<std::size_t> triple_vertices;
  int kappa = 0;                                   // k + (|disks| - |E|) / 2
};

/// Unit-disk chains along the edges of a planar graph of maximum degree 3.
/// The layout is validated after construction; throws InputError when the
/// embedding cannot host chains with the required spacing.
DiskGadget gen_vc_disks(const GadgetParams& params);

}  // namespace kcn
