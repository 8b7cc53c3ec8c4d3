#include "kcn/size_ptas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "kcn/canonical.hpp"

namespace kcn {
namespace {

// hit[c][r] for candidate c and region r.
std::vector<std::vector<char>> hit_matrix(std::span<const InflatedRegion> regions,
                                          std::span<const Point> candidates, double slack) {
  std::vector<std::vector<char>> hit(candidates.size(), std::vector<char>(regions.size(), 0));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t r = 0; r < regions.size(); ++r) {
      hit[c][r] = regions[r].contains(candidates[c], slack) ? 1 : 0;
    }
  }
  return hit;
}

void require_hittable(const std::vector<std::vector<char>>& hit, std::size_t region_count) {
  for (std::size_t r = 0; r < region_count; ++r) {
    bool any = false;
    for (const auto& row : hit) any = any || row[r];
    if (!any) throw InputError("region " + std::to_string(r) + " is hit by no candidate");
  }
}

std::vector<std::size_t> greedy_from_matrix(const std::vector<std::vector<char>>& hit,
                                            std::size_t region_count) {
  std::vector<char> done(region_count, 0);
  std::size_t remaining = region_count;
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < hit.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t r = 0; r < region_count; ++r) gain += (!done[r] && hit[c][r]) ? 1 : 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw std::logic_error("greedy hitting set stalled");
    chosen.push_back(best);
    for (std::size_t r = 0; r < region_count; ++r) {
      if (!done[r] && hit[best][r]) {
        done[r] = 1;
        --remaining;
      }
    }
  }
  return chosen;
}

// Depth-limited search for at most `budget` candidates hitting all of `open`.
bool cover_open(const std::vector<std::vector<char>>& hit, std::vector<std::size_t>& open,
                int budget, std::vector<std::size_t>& picked) {
  if (open.empty()) return true;
  if (budget == 0) return false;
  const std::size_t target = open.front();
  for (std::size_t c = 0; c < hit.size(); ++c) {
    if (!hit[c][target]) continue;
    std::vector<std::size_t> rest;
    for (std::size_t r : open) {
      if (!hit[c][r]) rest.push_back(r);
    }
    picked.push_back(c);
    if (cover_open(hit, rest, budget - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

// Visits t-subsets of {0..n-1} in lexicographic order until `fn` returns true.
bool for_each_subset(std::size_t n, std::size_t t,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (t > n) return false;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<InflatedRegion> inflate(std::span<const Object> objects, double radius) {
  std::vector<InflatedRegion> out;
  out.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) out.push_back({objects[i], i, radius});
  return out;
}

std::vector<std::size_t> greedy_hitting_set(std::span<const InflatedRegion> regions,
                                            std::span<const Point> candidates, double slack) {
  const auto hit = hit_matrix(regions, candidates, slack);
  require_hittable(hit, regions.size());
  return greedy_from_matrix(hit, regions.size());
}

std::vector<std::size_t> local_search_hitting_set(std::span<const InflatedRegion> regions,
                                                  std::span<const Point> candidates, int b,
                                                  std::vector<std::size_t> initial,
                                                  double slack) {
  if (b < 1) throw InputError("swap size must be at least 1");
  const auto hit = hit_matrix(regions, candidates, slack);
  require_hittable(hit, regions.size());
  std::vector<std::size_t> current =
      initial.empty() ? greedy_from_matrix(hit, regions.size()) : std::move(initial);
  for (std::size_t c : current) {
    if (c >= candidates.size()) throw InputError("initial hitting set index out of range");
  }
  {
    std::vector<char> ok(regions.size(), 0);
    for (std::size_t c : current)
      for (std::size_t r = 0; r < regions.size(); ++r) ok[r] = ok[r] || hit[c][r];
    if (std::find(ok.begin(), ok.end(), 0) != ok.end())
      throw InputError("initial set is not a hitting set");
  }

  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<int> count(regions.size(), 0);
    for (std::size_t c : current)
      for (std::size_t r = 0; r < regions.size(); ++r) count[r] += hit[c][r];

    for (std::size_t t = 1; t <= static_cast<std::size_t>(b) && !improved; ++t) {
      improved = for_each_subset(current.size(), t, [&](const std::vector<std::size_t>& drop) {
        std::vector<int> left = count;
        for (std::size_t d : drop)
          for (std::size_t r = 0; r < regions.size(); ++r) left[r] -= hit[current[d]][r];
        std::vector<std::size_t> open;
        for (std::size_t r = 0; r < regions.size(); ++r) {
          if (left[r] == 0) open.push_back(r);
        }
        std::vector<std::size_t> picked;
        if (!cover_open(hit, open, static_cast<int>(t) - 1, picked)) return false;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < current.size(); ++i) {
          if (std::find(drop.begin(), drop.end(), i) == drop.end()) next.push_back(current[i]);
        }
        for (std::size_t c : picked) {
          if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
        }
        current = std::move(next);
        return true;
      });
    }
  }
  return current;
}

std::vector<Point> hitting_set_local_search(std::span<const InflatedRegion> regions,
                                            std::span<const Point> candidates, int b,
                                            double slack) {
  std::vector<Point> out;
  for (std::size_t c : local_search_hitting_set(regions, candidates, b, {}, slack)) {
    out.push_back(candidates[c]);
  }
  return out;
}

double inflation_perturbation(std::span<const Disk> disks, double radius) {
  bool tangent = false;
  double smallest_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const double gap = dist_objects(disks[i], disks[j]) - 2 * radius;
      if (std::abs(gap) <= kTolerance) tangent = true;
      else if (gap > 0) smallest_gap = std::min(smallest_gap, gap);
    }
  }
  if (!tangent) return 0;
  return std::isfinite(smallest_gap) ? smallest_gap / 4 : kTolerance;
}

Solution solve_size(std::span<const Disk> disks, int k, double epsilon, int swap_size) {
  if (!(epsilon > 0)) throw InputError("epsilon must be positive");
  if (k <= 0) throw InputError("k must be at least 1");
  if (swap_size < 1) throw InputError("swap size must be at least 1");
  for (const auto& d : disks) validate(Object{d});

  Solution sol;
  sol.algorithm = "size-ptas";
  if (static_cast<std::size_t>(k) >= disks.size()) {
    for (const auto& d : disks) sol.centers.push_back(d.center);
    return sol;
  }

  const auto candidates = canonical_candidates(disks);
  std::vector<Point> points;
  points.reserve(candidates.points.size());
  for (const auto& c : candidates.points) points.push_back(c.point);
  const std::vector<double> radii(candidates.radii.begin() + 1, candidates.radii.end());
  const auto objects = to_objects(disks);
  const auto limit =
      static_cast<std::size_t>(std::floor((1.0 + epsilon) * k + 1e-9));

  auto run = [&](double r) {
    ++sol.decider_calls;
    const double alpha = std::min(inflation_perturbation(disks, r), kPerturbationCap);
    const auto regions = inflate(objects, r + alpha);
    const double slack = 1e-12 * std::max(1.0, r);
    return local_search_hitting_set(regions, points, swap_size, {}, slack);
  };

  std::vector<std::size_t> best = run(radii.front());
  if (best.size() > limit) {
    std::size_t lo = 0;
    std::size_t hi = radii.size() - 1;
    best = run(radii[hi]);
    if (best.size() > limit) throw std::logic_error("hitting set too large at the largest radius");
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      auto h = run(radii[mid]);
      if (h.size() > limit) {
        lo = mid;
      } else {
        hi = mid;
        best = std::move(h);
      }
    }
  }
  for (std::size_t c : best) sol.centers.push_back(points[c]);
  sol.radius = cover_radius(disks, sol.centers);
  return sol;
}

}  // namespace kcn
