#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kcn/geometry.hpp"

namespace kcn {

/// Objects to be touched, the center budget and the ambient dimension.
struct Instance {
  Eigen::Index dimension = 2;
  int k = 1;
  std::vector<Object> objects;
};

/// Throws InputError on mixed dimensions, invalid objects or k < 0.
void validate(const Instance& inst);

struct Solution {
  std::vector<Point> centers;
  double radius = 0;
  std::string algorithm;
  std::size_t decider_calls = 0;
};

/// max over objects of the distance to the nearest center; +inf when there
/// are objects but no centers.
double cover_radius(std::span<const Object> objects, std::span<const Point> centers);
double cover_radius(std::span<const Ball> balls, std::span<const Point> centers);

/// Throws InputError unless every pair of balls is at positive distance.
void require_disjoint(std::span<const Ball> balls);

/// Extracts balls from an instance; throws InputError on any other object.
std::vector<Ball> balls_of(const Instance& inst);
std::vector<Interval> intervals_of(const Instance& inst);

std::vector<Object> to_objects(std::span<const Ball> balls);
std::vector<Object> to_objects(std::span<const Interval> intervals);

}  // namespace kcn
