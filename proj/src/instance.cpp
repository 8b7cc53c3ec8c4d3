#include "kcn/instance.hpp"

#include <limits>
#include <string>

namespace kcn {

void validate(const Instance& inst) {
  if (inst.k < 0) throw InputError("k must be non-negative");
  if (inst.dimension < 1) throw InputError("dimension must be positive");
  for (const auto& obj : inst.objects) {
    validate(obj);
    if (dimension(obj) != inst.dimension)
      throw InputError("object dimension " + std::to_string(dimension(obj)) +
                       " does not match instance dimension " + std::to_string(inst.dimension));
  }
}

namespace {

template <typename Obj>
double cover_radius_impl(std::span<const Obj> objects, std::span<const Point> centers) {
  if (objects.empty()) return 0;
  if (centers.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (const auto& obj : objects) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : centers) best = std::min(best, dist_point_object<double>(s, obj));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double cover_radius(std::span<const Object> objects, std::span<const Point> centers) {
  return cover_radius_impl(objects, centers);
}

double cover_radius(std::span<const Ball> balls, std::span<const Point> centers) {
  return cover_radius_impl(balls, centers);
}

void require_disjoint(std::span<const Ball> balls) {
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      if (dist_objects(balls[i], balls[j]) <= 0.0)
        throw InputError("objects " + std::to_string(i) + " and " + std::to_string(j) +
                         " intersect");
    }
  }
}

std::vector<Ball> balls_of(const Instance& inst) {
  std::vector<Ball> out;
  out.reserve(inst.objects.size());
  for (const auto& obj : inst.objects) {
    const auto* b = std::get_if<Ball>(&obj);
    if (b == nullptr) throw InputError("expected only disks or balls in this instance");
    out.push_back(*b);
  }
  return out;
}

std::vector<Interval> intervals_of(const Instance& inst) {
  std::vector<Interval> out;
  out.reserve(inst.objects.size());
  for (const auto& obj : inst.objects) {
    const auto* iv = std::get_if<Interval>(&obj);
    if (iv == nullptr) throw InputError("expected only intervals in this instance");
    out.push_back(*iv);
  }
  return out;
}

std::vector<Object> to_objects(std::span<const Ball> balls) {
  return {balls.begin(), balls.end()};
}

std::vector<Object> to_objects(std::span<const Interval> intervals) {
  return {intervals.begin(), intervals.end()};
}

}  // namespace kcn
