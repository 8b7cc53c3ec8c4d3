#include "kcn/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "kcn/canonical.hpp"
#include "kcn/decider.hpp"

namespace kcn {
namespace {

Solution trivial_solution(std::span<const Ball> balls, const char* algorithm) {
  Solution sol;
  sol.algorithm = algorithm;
  for (const auto& b : balls) sol.centers.push_back(b.center);
  sol.radius = 0;
  return sol;
}

struct Probe {
  std::span<const Ball> balls;
  int k;
  const ProbeObserver& observer;
  std::size_t calls = 0;

  DeciderVerdict operator()(double r) {
    ++calls;
    auto v = decide(balls, k, r);
    if (observer) observer(r, v.feasible());
    return v;
  }
};

// Finds adjacent indices lo < hi with lo infeasible and hi feasible, or
// hi = 0 if the smallest value is already feasible. Returns the cover at hi.
Cover search_sorted(const std::vector<double>& values, Probe& probe, std::size_t* hi_index) {
  auto v = probe(values.front());
  if (v.feasible()) {
    *hi_index = 0;
    return std::move(*v.cover);
  }
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;
  auto top = probe(values[hi]);
  if (!top.feasible()) throw std::logic_error("decider rejected the largest candidate radius");
  Cover best = std::move(*top.cover);
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto m = probe(values[mid]);
    if (m.feasible()) {
      hi = mid;
      best = std::move(*m.cover);
    } else {
      lo = mid;
    }
  }
  *hi_index = hi;
  return best;
}

void check_common(std::span<const Ball> balls, int k) {
  if (k <= 0) throw InputError("k must be at least 1");
  for (const auto& b : balls) validate(Object{b});
  require_disjoint(balls);
}

}  // namespace

Solution solve_disks(std::span<const Disk> disks, int k, const ProbeObserver& observer) {
  check_common(disks, k);
  for (const auto& d : disks) {
    if (d.center.size() != 2) throw InputError("solve_disks needs planar disks");
  }
  if (static_cast<std::size_t>(k) >= disks.size()) return trivial_solution(disks, "disks");

  const auto candidates = canonical_candidates(disks);
  // k < n disjoint disks cannot be covered at radius 0.
  std::vector<double> radii(candidates.radii.begin() + 1, candidates.radii.end());

  Probe probe{disks, k, observer};
  std::size_t hi = 0;
  Cover cover = search_sorted(radii, probe, &hi);
  Solution sol;
  sol.algorithm = "disks";
  sol.centers = std::move(cover.centers);
  sol.radius = cover_radius(disks, sol.centers);
  sol.decider_calls = probe.calls;
  return sol;
}

std::vector<double> ball_candidate_radii(std::span<const Ball> balls) {
  std::vector<double> values;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = 0; j < balls.size(); ++j) {
      if (i == j) continue;
      values.push_back(dist_point_object(balls[j].center, balls[i]));
      if (i < j) values.push_back(dist_objects(balls[i], balls[j]) / 2);
    }
  }
  std::erase_if(values, [](double v) { return !(v > 0); });
  return sorted_unique(std::move(values), 1e-9);
}

Solution solve_balls_dd(std::span<const Ball> balls, int k, double epsilon,
                        const ProbeObserver& observer) {
  if (!(epsilon > 0)) throw InputError("epsilon must be positive");
  check_common(balls, k);
  if (!balls.empty() && balls.front().center.size() < 2)
    throw InputError("solve_balls_dd needs dimension >= 2");
  if (static_cast<std::size_t>(k) >= balls.size()) return trivial_solution(balls, "balls");

  const auto radii = ball_candidate_radii(balls);
  Probe probe{balls, k, observer};
  std::size_t hi = 0;
  Cover cover = search_sorted(radii, probe, &hi);

  // The optimum lies in [z / c, c z]; the cover at z already has radius
  // <= c z, so only [z / c, z] needs refining.
  const double z = radii[hi];
  const double c = kDeciderFactor;
  const double step = 1.0 + epsilon / c;
  std::vector<double> grid;
  for (double g = z / c; g < z; g *= step) grid.push_back(g);
  if (!grid.empty()) {
    auto bottom = probe(grid.front());
    if (bottom.feasible()) {
      cover = std::move(*bottom.cover);
    } else {
      std::size_t lo = 0;
      std::size_t top = grid.size();  // stands for z, known feasible
      while (top - lo > 1) {
        const std::size_t mid = lo + (top - lo) / 2;
        auto m = probe(grid[mid]);
        if (m.feasible()) {
          top = mid;
          cover = std::move(*m.cover);
        } else {
          lo = mid;
        }
      }
    }
  }

  Solution sol;
  sol.algorithm = "balls";
  sol.centers = std::move(cover.centers);
  sol.radius = cover_radius(balls, sol.centers);
  sol.decider_calls = probe.calls;
  return sol;
}

}  // namespace kcn
