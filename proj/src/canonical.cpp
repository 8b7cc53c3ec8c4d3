#include "kcn/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "kcn/instance.hpp"

namespace kcn {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::object_point: return "object-point";
    case Provenance::bisector_event: return "bisector-event";
    case Provenance::interval_minimum: return "interval-minimum";
  }
  return "?";
}

double radius_upper_bound(std::span<const Disk> disks) {
  double bound = 0;
  for (const auto& d : disks) bound = std::max(bound, dist_point_object(disks.front().center, d));
  return bound;
}

std::vector<double> sorted_unique(std::vector<double> values, double rel_tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (!out.empty() && v - out.back() <= rel_tol * std::max(1.0, std::abs(out.back()))) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<CandidatePoint> unique_points(std::vector<CandidatePoint> points, double tol) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].point[0] < points[b].point[0] ||
           (points[a].point[0] == points[b].point[0] && a < b);
  });
  std::vector<char> dropped(points.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t a = order[i];
    if (dropped[a]) continue;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const std::size_t b = order[j];
      if (points[b].point[0] - points[a].point[0] > tol) break;
      if (dropped[b]) continue;
      if ((points[a].point - points[b].point).norm() <= tol) {
        // Keep the earliest occurrence of the cluster.
        if (b < a) {
          dropped[a] = 1;
          break;
        }
        dropped[b] = 1;
      }
    }
  }
  std::vector<CandidatePoint> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!dropped[i]) out.push_back(std::move(points[i]));
  }
  return out;
}

CandidateSets canonical_candidates(std::span<const Disk> disks) {
  if (disks.empty()) throw InputError("canonical_candidates needs at least one disk");
  for (const auto& d : disks) {
    validate(Object{d});
    if (d.center.size() != 2) throw InputError("canonical_candidates needs planar disks");
  }
  require_disjoint(disks);

  const double window = radius_upper_bound(disks) + kTolerance;
  CandidateSets out;
  std::vector<double> radii{0.0};
  for (std::size_t i = 0; i < disks.size(); ++i) {
    out.points.push_back({disks[i].center, Provenance::object_point, i, i, 0.0});
  }

  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Bisector bis = disk_bisector(disks[i], disks[j], i, j);
      std::vector<BisectorEvent> events;
      for (std::size_t l = 0; l < disks.size(); ++l) {
        if (l == i || l == j) continue;
        for (const auto& e : equidistant_point_on_bisector(bis, disks[l], window)) {
          events.push_back(e);
        }
      }
      std::sort(events.begin(), events.end(),
                [](const auto& x, const auto& y) { return x.u < y.u; });
      for (const auto& e : events) {
        out.points.push_back({bis.at(e.u), Provenance::bisector_event, i, j, e.distance});
        radii.push_back(e.distance);
      }

      // One minimizer per maximal event-free arc. Distance grows with |u|,
      // so it is the vertex if the arc contains u = 0, else the endpoint
      // nearer to it.
      std::vector<double> minima;
      if (events.empty()) {
        minima.push_back(0.0);
      } else {
        if (events.front().u > 0) minima.push_back(0.0);
        else minima.push_back(events.front().u);
        for (std::size_t t = 0; t + 1 < events.size(); ++t) {
          const double lo = events[t].u;
          const double hi = events[t + 1].u;
          if (lo < 0 && hi > 0) minima.push_back(0.0);
          else minima.push_back(std::abs(lo) < std::abs(hi) ? lo : hi);
        }
        if (events.back().u < 0) minima.push_back(0.0);
        else minima.push_back(events.back().u);
      }
      for (double u : minima) {
        const bool is_event = std::any_of(events.begin(), events.end(),
                                          [&](const auto& e) { return e.u == u; });
        if (is_event) continue;
        const double dist = bis.distance_at(u);
        out.points.push_back({bis.at(u), Provenance::interval_minimum, i, j, dist});
        radii.push_back(dist);
      }
    }
  }

  out.points = unique_points(std::move(out.points), 1e-9);
  out.radii = sorted_unique(std::move(radii), 1e-12);
  return out;
}

}  // namespace kcn
