#include "kcn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kcn/canonical.hpp"

namespace kcn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exhaustive branching: the first uncovered object must be reached by one of
// the chosen candidates.
bool cover_search(const Eigen::MatrixXd& dist, double limit, int budget,
                  std::vector<int>& covered, std::vector<std::size_t>& chosen) {
  const auto n = static_cast<std::size_t>(dist.cols());
  std::size_t open = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i] == 0) {
      open = i;
      break;
    }
  }
  if (open == n) return true;
  if (budget == 0) return false;
  for (Eigen::Index p = 0; p < dist.rows(); ++p) {
    if (dist(p, static_cast<Eigen::Index>(open)) > limit) continue;
    for (std::size_t i = 0; i < n; ++i) covered[i] += dist(p, static_cast<Eigen::Index>(i)) <= limit;
    chosen.push_back(static_cast<std::size_t>(p));
    if (cover_search(dist, limit, budget - 1, covered, chosen)) return true;
    chosen.pop_back();
    for (std::size_t i = 0; i < n; ++i) covered[i] -= dist(p, static_cast<Eigen::Index>(i)) <= limit;
  }
  return false;
}

double objective(const Object& obj, const Point& x, Point* grad) {
  if (const auto* b = std::get_if<Ball>(&obj)) {
    const Point v = x - b->center;
    const double n = v.norm();
    if (grad) *grad = n > 0 ? Point(v / n) : Point(Point::Zero(x.size()));
    return n - b->radius;
  }
  const double d = dist_point_object<double>(x, obj);
  if (grad) {
    if (d <= 0) {
      *grad = Point::Zero(x.size());
    } else {
      // Unit vector away from the nearest point of the object.
      Point q;
      if (const auto* s = std::get_if<Segment>(&obj)) {
        const Point ab = s->q - s->p;
        const double len2 = ab.squaredNorm();
        const double t = len2 > 0 ? std::clamp((x - s->p).dot(ab) / len2, 0.0, 1.0) : 0.0;
        q = s->p + t * ab;
      } else {
        const auto& iv = std::get<Interval>(obj);
        q = Point::Constant(1, std::clamp(x[0], iv.lo, iv.hi));
      }
      *grad = (x - q) / d;
    }
  }
  return d;
}

double group_value(std::span<const Object> objects, const Point& x, Point* grad) {
  double best = -kInf;
  Point g;
  for (const auto& obj : objects) {
    const double v = objective(obj, x, grad ? &g : nullptr);
    if (v > best) {
      best = v;
      if (grad) *grad = g;
    }
  }
  return best;
}

struct Anchor {
  Point center;
  double radius;
};

// A ball containing every object; the minimizer lies in their convex hull.
Anchor enclosing(std::span<const Object> objects) {
  std::vector<Point> pts;
  double extent = 0;
  for (const auto& obj : objects) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, Ball>) {
            pts.push_back(o.center);
            extent = std::max(extent, o.radius);
          } else if constexpr (std::is_same_v<T, Segment>) {
            pts.push_back(o.p);
            pts.push_back(o.q);
          } else {
            pts.push_back(Point::Constant(1, o.lo));
            pts.push_back(Point::Constant(1, o.hi));
          }
        },
        obj);
  }
  Point mean = Point::Zero(pts.front().size());
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  double reach = 0;
  for (const auto& p : pts) reach = std::max(reach, (p - mean).norm());
  return {mean, 2 * (reach + extent) + 1};
}

struct Partition {
  double value = kInf;
  std::vector<unsigned> groups;
};

// Best split of `all` into at most k groups given per-group values.
Partition best_partition(const std::vector<double>& group, unsigned all, int k) {
  std::vector<std::vector<double>> best(static_cast<std::size_t>(k) + 1,
                                        std::vector<double>(all + 1, kInf));
  std::vector<std::vector<unsigned>> pick(static_cast<std::size_t>(k) + 1,
                                          std::vector<unsigned>(all + 1, 0));
  for (int j = 0; j <= k; ++j) best[static_cast<std::size_t>(j)][0] = -kInf;
  for (unsigned mask = 1; mask <= all; ++mask) {
    best[1][mask] = group[mask];
    pick[1][mask] = mask;
  }
  for (std::size_t j = 2; j <= static_cast<std::size_t>(k); ++j) {
    for (unsigned mask = 1; mask <= all; ++mask) {
      const unsigned low = mask & (~mask + 1);
      for (unsigned sub = mask; sub != 0; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        const double v = std::max(group[sub], best[j - 1][mask ^ sub]);
        if (v < best[j][mask]) {
          best[j][mask] = v;
          pick[j][mask] = sub;
        }
      }
    }
  }
  Partition out;
  out.value = best[static_cast<std::size_t>(k)][all];
  unsigned rest = all;
  for (std::size_t j = static_cast<std::size_t>(k); rest != 0; --j) {
    const unsigned sub = pick[j][rest];
    out.groups.push_back(sub);
    rest ^= sub;
  }
  return out;
}

std::vector<Object> subset(std::span<const Object> objects, unsigned mask) {
  std::vector<Object> out;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (mask >> i & 1u) out.push_back(objects[i]);
  }
  return out;
}

Solution trivial(std::span<const Object> objects) {
  Solution sol;
  for (const auto& obj : objects) {
    sol.centers.push_back(std::visit(
        [](const auto& o) -> Point {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, Ball>) return o.center;
          else if constexpr (std::is_same_v<T, Segment>) return o.p;
          else return Point::Constant(1, o.lo);
        },
        obj));
  }
  return sol;
}

template <typename OneCenter>
Solution partition_solve(std::span<const Object> objects, int k, OneCenter&& solve_group,
                         const char* name) {
  if (k <= 0) throw InputError("k must be at least 1");
  for (const auto& obj : objects) validate(obj);
  if (objects.size() <= static_cast<std::size_t>(k)) {
    Solution sol = trivial(objects);
    sol.algorithm = name;
    return sol;
  }
  const unsigned all = (1u << objects.size()) - 1;
  std::vector<double> value(all + 1, kInf);
  std::vector<Point> center(all + 1);
  for (unsigned mask = 1; mask <= all; ++mask) {
    center[mask] = solve_group(mask, &value[mask]);
  }
  const auto part = best_partition(value, all, k);
  Solution sol;
  sol.algorithm = name;
  for (unsigned g : part.groups) sol.centers.push_back(center[g]);
  sol.radius = cover_radius(objects, sol.centers);
  return sol;
}

}  // namespace

Solution brute_force_opt(std::span<const Disk> disks, int k) {
  if (k <= 0) throw InputError("k must be at least 1");
  Solution sol;
  sol.algorithm = "brute-force";
  if (disks.size() <= static_cast<std::size_t>(k)) {
    for (const auto& d : disks) sol.centers.push_back(d.center);
    return sol;
  }
  const auto sets = canonical_candidates(disks);
  const double work = std::pow(static_cast<double>(sets.points.size()), k);
  if (work > kOracleGuard)
    throw InputError("oracle guard exceeded: |P|^k = " + std::to_string(work) +
                     "; use fewer disks or a smaller k");
  const auto rows = static_cast<Eigen::Index>(sets.points.size());
  const auto cols = static_cast<Eigen::Index>(disks.size());
  Eigen::MatrixXd dist(rows, cols);
  for (Eigen::Index p = 0; p < rows; ++p)
    for (Eigen::Index i = 0; i < cols; ++i)
      dist(p, i) = dist_point_object<double>(sets.points[static_cast<std::size_t>(p)].point,
                                             disks[static_cast<std::size_t>(i)]);

  auto attempt = [&](double r, std::vector<std::size_t>& chosen) {
    std::vector<int> covered(disks.size(), 0);
    chosen.clear();
    return cover_search(dist, r + 1e-10 * std::max(1.0, r), k, covered, chosen);
  };
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  std::size_t lo = 0;
  std::size_t hi = sets.radii.size() - 1;
  if (!attempt(sets.radii[hi], best))
    throw std::logic_error("canonical radii contain no feasible value");
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (attempt(sets.radii[mid], chosen)) {
      hi = mid;
      best = chosen;
    } else {
      lo = mid + 1;
    }
  }
  for (std::size_t p : best) sol.centers.push_back(sets.points[p].point);
  sol.radius = cover_radius(disks, sol.centers);
  return sol;
}

Solution brute_force_opt_1d(std::span<const Interval> intervals, int k) {
  if (k <= 0) throw InputError("k must be at least 1");
  for (const auto& iv : intervals) validate(Object{iv});
  Solution sol;
  sol.algorithm = "brute-force-1d";
  if (intervals.empty()) return sol;

  std::vector<double> ends;
  for (const auto& iv : intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::vector<double> candidates{0.0};
  for (double a : ends)
    for (double b : ends)
      if (a > b) candidates.push_back((a - b) / 2);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Right-to-left: the uncovered interval with the largest left end gets a
  // center r to the left of that end.
  auto mirror = [&](double r) {
    std::vector<char> done(intervals.size(), 0);
    std::vector<double> centers;
    while (true) {
      double alpha = -kInf;
      for (std::size_t i = 0; i < intervals.size(); ++i)
        if (!done[i]) alpha = std::max(alpha, intervals[i].lo);
      if (alpha == -kInf) break;
      centers.push_back(alpha - r);
      const double reach = alpha - 2 * r - 1e-12 * std::max(1.0, std::abs(alpha) + 2 * r);
      for (std::size_t i = 0; i < intervals.size(); ++i)
        if (intervals[i].hi >= reach) done[i] = 1;
    }
    return centers;
  };
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mirror(candidates[mid]).size() <= static_cast<std::size_t>(k)) hi = mid;
    else lo = mid + 1;
  }
  for (double c : mirror(candidates[lo])) sol.centers.push_back(Point::Constant(1, c));
  sol.radius = cover_radius(to_objects(intervals), sol.centers);
  return sol;
}

Solution brute_force_opt(const Instance& inst) {
  validate(inst);
  if (inst.objects.empty()) throw InputError("instance has no objects");
  if (std::holds_alternative<Interval>(inst.objects.front()))
    return brute_force_opt_1d(intervals_of(inst), inst.k);
  if (inst.dimension == 2 && std::holds_alternative<Ball>(inst.objects.front())) {
    const auto balls = balls_of(inst);
    return brute_force_opt(balls, inst.k);
  }
  return partition_opt(inst.objects, inst.k);
}

Point one_center(std::span<const Object> objects, double* value) {
  if (objects.empty()) throw InputError("one_center needs at least one object");
  const auto anchor = enclosing(objects);
  const Eigen::Index d = anchor.center.size();
  Point x = anchor.center;
  Point g;
  Point best_x = x;
  double best = group_value(objects, x, nullptr);
  double lower = -kInf;

  if (d == 1) {
    double lo = x[0] - anchor.radius;
    double hi = x[0] + anchor.radius;
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      x[0] = (lo + hi) / 2;
      const double v = group_value(objects, x, &g);
      if (v < best) {
        best = v;
        best_x = x;
      }
      if (g[0] > 0) hi = x[0];
      else if (g[0] < 0) lo = x[0];
      else break;
    }
  } else {
    const auto dd = static_cast<double>(d);
    Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(d, d) * anchor.radius * anchor.radius;
    for (int it = 0; it < 20000; ++it) {
      const double v = group_value(objects, x, &g);
      if (v < best) {
        best = v;
        best_x = x;
      }
      const Eigen::VectorXd pg = shape * g;
      const double width = std::sqrt(std::max(0.0, g.dot(pg)));
      if (width == 0) break;
      // Every point of the ellipsoid, the minimizer included, is >= v - width.
      lower = std::max(lower, v - width);
      if (best - lower <= 1e-13 * std::max(1.0, std::abs(best))) break;
      const Eigen::VectorXd step = pg / width;
      x -= step / (dd + 1);
      shape = dd * dd / (dd * dd - 1) * (shape - 2 / (dd + 1) * step * step.transpose());
      shape = (shape + shape.transpose()).eval() / 2;
    }
  }
  if (value) *value = best;
  return best_x;
}

Solution partition_opt(std::span<const Object> objects, int k) {
  if (objects.size() > 14) throw InputError("partition oracle is limited to 14 objects");
  return partition_solve(
      objects, k,
      [&](unsigned mask, double* v) {
        const auto group = subset(objects, mask);
        Point c = one_center(group, v);
        *v = std::max(0.0, *v);
        return c;
      },
      "partition-oracle");
}

Solution grid_opt(std::span<const Object> objects, int k, double step) {
  if (objects.size() > 4) throw InputError("grid oracle is limited to 4 objects");
  if (!(step > 0)) throw InputError("grid step must be positive");
  for (const auto& obj : objects)
    if (dimension(obj) != 2) throw InputError("grid oracle works in the plane");
  double xmin = kInf, ymin = kInf, xmax = -kInf, ymax = -kInf;
  auto extend = [&](const Point& p, double pad) {
    xmin = std::min(xmin, p[0] - pad);
    xmax = std::max(xmax, p[0] + pad);
    ymin = std::min(ymin, p[1] - pad);
    ymax = std::max(ymax, p[1] + pad);
  };
  for (const auto& obj : objects) {
    if (const auto* b = std::get_if<Ball>(&obj)) extend(b->center, b->radius);
    else if (const auto* s = std::get_if<Segment>(&obj)) {
      extend(s->p, 0);
      extend(s->q, 0);
    }
  }
  const auto nx = static_cast<std::size_t>(std::ceil((xmax - xmin) / step)) + 1;
  const auto ny = static_cast<std::size_t>(std::ceil((ymax - ymin) / step)) + 1;
  if (static_cast<double>(nx) * static_cast<double>(ny) > 4e7)
    throw InputError("grid oracle: step too small for the bounding box");

  const unsigned all = (1u << objects.size()) - 1;
  std::vector<double> value(all + 1, kInf);
  std::vector<Point> center(all + 1, Point::Zero(2));
  std::vector<double> d(objects.size());
  Point p(2);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      p << xmin + step * static_cast<double>(ix), ymin + step * static_cast<double>(iy);
      for (std::size_t i = 0; i < objects.size(); ++i) d[i] = dist_point_object<double>(p, objects[i]);
      for (unsigned mask = 1; mask <= all; ++mask) {
        double worst = 0;
        for (std::size_t i = 0; i < objects.size(); ++i)
          if (mask >> i & 1u) worst = std::max(worst, d[i]);
        if (worst < value[mask]) {
          value[mask] = worst;
          center[mask] = p;
        }
      }
    }
  }
  return partition_solve(
      objects, k,
      [&](unsigned mask, double* v) {
        *v = value[mask];
        return center[mask];
      },
      "grid-oracle");
}

}  // namespace kcn
