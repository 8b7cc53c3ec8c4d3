#include "kcn/decider.hpp"

#include <numeric>

#include "kcn/instance.hpp"

namespace kcn {

std::span<const Point> Cover::part(std::size_t i) const {
  std::size_t begin = 0;
  for (std::size_t t = 0; t < i; ++t) begin += part_sizes[t];
  return std::span<const Point>(centers).subspan(begin, part_sizes[i]);
}

bool packing_admits_three(std::span<const Ball> disks, const Point& s, double r) {
  const double limit = kPackingFactor * r;
  std::size_t close = 0;
  for (const auto& d : disks) {
    if (dist_point_object(s, d) <= limit) ++close;
  }
  return close >= 3;
}

ProximityGraph build_proximity_graph(std::span<const Ball> balls,
                                     std::span<const std::size_t> members, double r,
                                     double slack) {
  ProximityGraph g;
  g.labels.assign(members.begin(), members.end());
  g.adjacency.resize(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (dist_objects(balls[members[a]], balls[members[b]]) <= 2 * r + slack) g.add_edge(a, b);
    }
  }
  return g;
}

DeciderVerdict decide(std::span<const Ball> balls, int k, double r, double slack) {
  if (!(r > 0)) throw InputError("decide requires r > 0");
  if (k < 0) throw InputError("decide requires k >= 0");
  require_disjoint(balls);
  const std::size_t n = balls.size();

  std::vector<char> removed(n, 0);
  std::vector<Point> first, second, third;

  // Sweep: centers of small balls, taken in input order, each clearing
  // everything within (5 + 2 sqrt 3) r.
  const double sweep_radius = kDeciderFactor * r;
  for (std::size_t i = 0; i < n; ++i) {
    if (removed[i] || !(balls[i].radius < kLargeDiskFactor * r)) continue;
    const Point& p = balls[i].center;
    first.push_back(p);
    for (std::size_t j = 0; j < n; ++j) {
      if (!removed[j] && hits(p, balls[j], sweep_radius, slack)) removed[j] = 1;
    }
  }

  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) survivors.push_back(i);
  }

  std::vector<std::size_t> paired;
  for (std::size_t a : survivors) {
    bool has_partner = false;
    for (std::size_t b : survivors) {
      if (a != b && dist_objects(balls[a], balls[b]) <= 2 * r + slack) {
        has_partner = true;
        break;
      }
    }
    if (has_partner) paired.push_back(a);
    else second.push_back(balls[a].center);
  }

  if (!paired.empty()) {
    const ProximityGraph g = build_proximity_graph(balls, paired, r, slack);
    for (const auto& [u, v] : min_edge_cover(g)) {
      third.push_back(gap_midpoint(balls[g.labels[u]], balls[g.labels[v]]));
    }
  }

  DeciderVerdict verdict;
  verdict.centers_needed = first.size() + second.size() + third.size();
  if (verdict.centers_needed > static_cast<std::size_t>(k)) return verdict;
  Cover cover;
  cover.part_sizes = {first.size(), second.size(), third.size()};
  cover.centers.reserve(verdict.centers_needed);
  for (auto* part : {&first, &second, &third}) {
    cover.centers.insert(cover.centers.end(), part->begin(), part->end());
  }
  verdict.cover = std::move(cover);
  return verdict;
}

}  // namespace kcn
