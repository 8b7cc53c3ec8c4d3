#include "kcn/fptas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "kcn/canonical.hpp"

namespace kcn {
namespace {

using Mask = std::vector<std::uint64_t>;

bool covers_all(const Mask& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!((m[i / 64] >> (i % 64)) & 1u)) return false;
  }
  return true;
}

bool test_bit(const Mask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1u; }

struct MaskSet {
  std::vector<Mask> masks;
  std::vector<std::size_t> owner;  // a candidate realizing each mask
};

MaskSet masks_at(const Eigen::MatrixXd& distance, double r) {
  const auto rows = static_cast<std::size_t>(distance.rows());
  const auto cols = static_cast<std::size_t>(distance.cols());
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::pair<Mask, std::size_t>> all;
  all.reserve(rows);
  for (std::size_t c = 0; c < rows; ++c) {
    Mask m(words, 0);
    bool any = false;
    for (std::size_t i = 0; i < cols; ++i) {
      if (distance(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) <= r) {
        m[i / 64] |= std::uint64_t{1} << (i % 64);
        any = true;
      }
    }
    if (any) all.emplace_back(std::move(m), c);
  }
  std::sort(all.begin(), all.end());
  MaskSet out;
  for (auto& [m, c] : all) {
    if (!out.masks.empty() && out.masks.back() == m) continue;
    out.masks.push_back(std::move(m));
    out.owner.push_back(c);
  }
  return out;
}

bool search_cover(const MaskSet& ms, std::size_t n, Mask& covered, int budget,
                  std::vector<std::size_t>& picked) {
  std::size_t first_open = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!test_bit(covered, i)) {
      first_open = i;
      break;
    }
  }
  if (first_open == n) return true;
  if (budget == 0) return false;
  for (std::size_t m = 0; m < ms.masks.size(); ++m) {
    if (!test_bit(ms.masks[m], first_open)) continue;
    Mask next = covered;
    for (std::size_t w = 0; w < next.size(); ++w) next[w] |= ms.masks[m][w];
    picked.push_back(ms.owner[m]);
    if (search_cover(ms, n, next, budget - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

std::optional<std::vector<std::size_t>> feasible_at(const Eigen::MatrixXd& distance, int k,
                                                    double r) {
  const auto n = static_cast<std::size_t>(distance.cols());
  const MaskSet ms = masks_at(distance, r);
  if (k >= 1) {
    for (std::size_t m = 0; m < ms.masks.size(); ++m) {
      if (covers_all(ms.masks[m], n)) return std::vector<std::size_t>{ms.owner[m]};
    }
  }
  Mask covered((n + 63) / 64, 0);
  std::vector<std::size_t> picked;
  if (search_cover(ms, n, covered, k, picked)) return picked;
  return std::nullopt;
}

std::vector<Point> classical_candidates(std::span<const Point> points) {
  std::vector<Point> out(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      out.push_back((points[i] + points[j]) / 2);
      for (std::size_t l = j + 1; l < points.size(); ++l) {
        const Vector2 a = points[i].head<2>();
        const Vector2 b = points[j].head<2>() - a;
        const Vector2 c = points[l].head<2>() - a;
        const double d = 2 * (b.x() * c.y() - b.y() * c.x());
        if (std::abs(d) <= 1e-12 * std::max(1.0, b.squaredNorm() * c.squaredNorm())) continue;
        const double bb = b.squaredNorm();
        const double cc = c.squaredNorm();
        const Vector2 center(a.x() + (c.y() * bb - b.y() * cc) / d,
                             a.y() + (b.x() * cc - c.x() * bb) / d);
        out.push_back(center);
      }
    }
  }
  return out;
}

std::vector<Point> grid_candidates(std::span<const Point> points, int k, double epsilon) {
  const auto seeds = farthest_point_seeds(points, k);
  double r2 = 0;
  for (const auto& p : points) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s : seeds) best = std::min(best, (p - points[s]).norm());
    r2 = std::max(r2, best);
  }
  std::vector<Point> out;
  for (std::size_t s : seeds) out.push_back(points[s]);
  if (r2 == 0) return out;
  const double h = epsilon * r2 / (2.0 * std::sqrt(2.0));
  Vector2 lo = points.front().head<2>();
  Vector2 hi = lo;
  for (const auto& p : points) {
    lo = lo.cwiseMin(p.head<2>());
    hi = hi.cwiseMax(p.head<2>());
  }
  lo.array() -= r2;
  hi.array() += r2;
  const auto nx = static_cast<long>(std::ceil((hi.x() - lo.x()) / h));
  const auto ny = static_cast<long>(std::ceil((hi.y() - lo.y()) / h));
  for (long ix = 0; ix <= nx; ++ix) {
    for (long iy = 0; iy <= ny; ++iy) {
      const Vector2 g(lo.x() + ix * h, lo.y() + iy * h);
      // Optimal centers lie within r2 of some input point.
      const bool near = std::any_of(points.begin(), points.end(), [&](const Point& p) {
        return (p.head<2>() - g).norm() <= r2 + h;
      });
      if (near) out.push_back(g);
    }
  }
  return out;
}

inline constexpr std::size_t kExactCandidateLimit = 40000;

}  // namespace

std::optional<DiscreteCover> discrete_k_cover(const Eigen::MatrixXd& distance, int k,
                                              std::span<const double> radii) {
  if (radii.empty()) return std::nullopt;
  auto top = feasible_at(distance, k, radii.back());
  if (!top) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = radii.size() - 1;
  DiscreteCover best{radii[hi], std::move(*top)};
  if (auto bottom = feasible_at(distance, k, radii.front())) {
    return DiscreteCover{radii.front(), std::move(*bottom)};
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto f = feasible_at(distance, k, radii[mid])) {
      hi = mid;
      best = {radii[mid], std::move(*f)};
    } else {
      lo = mid;
    }
  }
  return best;
}

std::vector<std::size_t> farthest_point_seeds(std::span<const Point> points, int k) {
  std::vector<std::size_t> seeds;
  if (points.empty() || k <= 0) return seeds;
  std::vector<double> nearest(points.size(), std::numeric_limits<double>::infinity());
  std::size_t next = 0;
  while (seeds.size() < static_cast<std::size_t>(k) && seeds.size() < points.size()) {
    const std::size_t current = next;
    seeds.push_back(current);
    double far = -1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      nearest[i] = std::min(nearest[i], (points[i] - points[current]).norm());
      if (nearest[i] > far) {
        far = nearest[i];
        next = i;
      }
    }
    if (far <= 0) break;
  }
  return seeds;
}

Solution kcenter_points(std::span<const Point> points, int k, double epsilon, KCenterMode mode) {
  if (points.empty()) throw InputError("kcenter_points needs at least one point");
  if (k <= 0) throw InputError("k must be at least 1");
  if (!(epsilon > 0)) throw InputError("epsilon must be positive");
  for (const auto& p : points) {
    if (p.size() != 2) throw InputError("kcenter_points needs planar points");
  }
  Solution sol;
  sol.algorithm = "kcenter-points";
  if (static_cast<std::size_t>(k) >= points.size()) {
    sol.centers.assign(points.begin(), points.end());
    return sol;
  }

  if (mode == KCenterMode::automatic) {
    const double n = static_cast<double>(points.size());
    mode = n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6 <= kExactCandidateLimit
               ? KCenterMode::exact_candidates
               : KCenterMode::grid;
  }
  const auto candidates = mode == KCenterMode::exact_candidates
                              ? classical_candidates(points)
                              : grid_candidates(points, k, epsilon);

  Eigen::MatrixXd distance(candidates.size(), points.size());
  std::vector<double> radii;
  radii.reserve(candidates.size() * points.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double d = (candidates[c] - points[i]).norm();
      distance(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) = d;
      radii.push_back(d);
    }
  }
  radii = sorted_unique(std::move(radii), 0.0);
  const auto found = discrete_k_cover(distance, k, radii);
  if (!found) throw std::logic_error("no candidate cover found");
  for (std::size_t c : found->chosen) sol.centers.push_back(candidates[c]);
  double r = 0;
  for (const auto& p : points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sol.centers) best = std::min(best, (p - s).norm());
    r = std::max(r, best);
  }
  sol.radius = r;
  return sol;
}

Solution solve_unit_disks_small_k(std::span<const Disk> disks, int k, const FptasConfig& config) {
  if (!(config.epsilon > 0 && config.epsilon <= 1)) throw InputError("epsilon must be in (0, 1]");
  if (!(config.gamma >= 1)) throw InputError("gamma must be at least 1");
  if (k <= 0) throw InputError("k must be at least 1");
  for (const auto& d : disks) {
    validate(Object{d});
    if (d.center.size() != 2) throw InputError("fptas needs planar disks");
    if (std::abs(d.radius - 1.0) > kTolerance) throw InputError("fptas needs unit disks");
  }
  require_disjoint(disks);

  Solution sol;
  if (static_cast<std::size_t>(k) >= disks.size()) {
    sol.algorithm = "fptas-exact";
    for (const auto& d : disks) sol.centers.push_back(d.center);
    return sol;
  }

  const double n = static_cast<double>(disks.size());
  if (n <= config.gamma * k / (config.epsilon * config.epsilon)) {
    const auto cands = canonical_candidates(disks);
    Eigen::MatrixXd distance(cands.points.size(), disks.size());
    for (std::size_t c = 0; c < cands.points.size(); ++c) {
      for (std::size_t i = 0; i < disks.size(); ++i) {
        distance(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) =
            dist_point_object(cands.points[c].point, disks[i]);
      }
    }
    // Candidate radii are computed along bisectors; allow rounding noise.
    std::vector<double> radii;
    for (double r : cands.radii) radii.push_back(r + 1e-12 * std::max(1.0, r));
    const auto found = discrete_k_cover(distance, k, radii);
    if (!found) throw std::logic_error("no canonical cover found");
    sol.algorithm = "fptas-exact";
    for (std::size_t c : found->chosen) sol.centers.push_back(cands.points[c].point);
  } else {
    std::vector<Point> centers;
    for (const auto& d : disks) centers.push_back(d.center);
    sol = kcenter_points(centers, k, config.epsilon / 3, config.mode);
    sol.algorithm = "fptas-kcenter";
  }
  sol.radius = cover_radius(disks, sol.centers);
  return sol;
}

}  // namespace kcn
