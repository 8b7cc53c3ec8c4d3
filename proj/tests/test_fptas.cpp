#include <doctest.h>

#include <cmath>
#include <random>

#include "kcn/fptas.hpp"
#include "kcn/generators.hpp"
#include "kcn/oracle.hpp"

using namespace kcn;

namespace {

// Exact planar point 1-center for tiny sets: best over points, pair
// midpoints and triple circumcenters.
double point_one_center(std::span<const Point> pts) {
  std::vector<Point> cands(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      cands.push_back((pts[i] + pts[j]) / 2);
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const Eigen::Vector2d a = pts[i], b = pts[j], c = pts[l];
        const double d = 2 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) + c.x() * (a.y() - b.y()));
        if (std::abs(d) < 1e-12) continue;
        const double ux = (a.squaredNorm() * (b.y() - c.y()) + b.squaredNorm() * (c.y() - a.y()) +
                           c.squaredNorm() * (a.y() - b.y())) / d;
        const double uy = (a.squaredNorm() * (c.x() - b.x()) + b.squaredNorm() * (a.x() - c.x()) +
                           c.squaredNorm() * (b.x() - a.x())) / d;
        cands.push_back(make_point({ux, uy}));
      }
    }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) {
    double worst = 0;
    for (const auto& p : pts) worst = std::max(worst, (p - c).norm());
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace

TEST_CASE("point k-center examples") {
  const std::vector<Point> square{make_point({0, 0}), make_point({1, 0}), make_point({1, 1}),
                                  make_point({0, 1})};
  const double half_diag = std::sqrt(2.0) / 2;
  for (auto mode : {KCenterMode::exact_candidates, KCenterMode::grid}) {
    const auto sol = kcenter_points(square, 1, 0.1, mode);
    CHECK(sol.radius >= half_diag - 1e-12);
    CHECK(sol.radius <= 1.1 * half_diag + 1e-12);
  }
  CHECK(kcenter_points(square, 4, 0.1).radius == 0.0);
  CHECK(kcenter_points(square, 9, 0.1).radius == 0.0);

  std::vector<Point> clusters;
  const std::vector<std::array<double, 2>> shape{{0, 0}, {0.8, 0.1}, {0.3, 0.7}};
  for (double shift : {0.0, 100.0})
    for (const auto& [x, y] : shape) clusters.push_back(make_point({x + shift, y}));
  const double per_cluster = point_one_center(std::span<const Point>(clusters.data(), 3));
  for (auto mode : {KCenterMode::exact_candidates, KCenterMode::grid}) {
    const auto sol = kcenter_points(clusters, 2, 0.2, mode);
    CHECK(sol.radius <= 1.2 * per_cluster + 1e-12);
    CHECK(sol.centers.size() == 2);
  }
}

TEST_CASE("farthest point seeds") {
  const std::vector<Point> pts{make_point({0, 0}), make_point({1, 0}), make_point({10, 0}),
                               make_point({5, 0})};
  const auto seeds = farthest_point_seeds(pts, 3);
  CHECK(seeds == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("discrete k-cover picks the smallest feasible radius") {
  Eigen::MatrixXd dist(3, 2);
  dist << 0, 5, 5, 0, 2, 2;
  const std::vector<double> radii{0, 1, 2, 5};
  const auto one = discrete_k_cover(dist, 1, radii);
  REQUIRE(one);
  CHECK(one->radius == 2.0);
  CHECK(one->chosen == std::vector<std::size_t>{2});
  const auto two = discrete_k_cover(dist, 2, radii);
  REQUIRE(two);
  CHECK(two->radius == 0.0);
  const std::vector<double> small{0, 1};
  CHECK_FALSE(discrete_k_cover(dist, 1, small));
}

TEST_CASE("unit disk FPTAS examples") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  const auto sol = solve_unit_disks_small_k(d, 1, FptasConfig{0.5});
  CHECK(sol.algorithm == "fptas-exact");
  CHECK(sol.radius == doctest::Approx(1.0));
  CHECK(solve_unit_disks_small_k(d, 2, FptasConfig{0.5}).radius == 0.0);
  CHECK_THROWS_AS(solve_unit_disks_small_k(std::vector<Disk>{make_disk(0, 0, 2)}, 1, {}), InputError);
  CHECK_THROWS_AS(solve_unit_disks_small_k(d, 1, FptasConfig{1.5}), InputError);
  CHECK_THROWS_AS(solve_unit_disks_small_k(d, 1, FptasConfig{0.0}), InputError);
}

TEST_CASE("large branch on a coarse grid") {
  std::vector<Disk> grid;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 6; ++j) grid.push_back(make_disk(3.0 * i, 3.0 * j, 1));
  const FptasConfig cfg{0.9};
  const auto sol = solve_unit_disks_small_k(grid, 1, cfg);
  CHECK(sol.algorithm == "fptas-kcenter");
  // Every disk is touched from the grid's middle; the corner disks decide.
  const double opt = std::hypot(13.5, 7.5) - 1;
  CHECK(sol.radius >= opt - 1e-9);
  CHECK(sol.radius <= 1.9 * opt);
}

TEST_CASE("sandwich: disk radius <= point radius <= disk radius + 1") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_unit_disks(6, seed);
    std::vector<Point> centers;
    for (const auto& x : d) centers.push_back(x.center);
    const std::vector<Point> s{make_point({5, 5}), make_point({15, 12})};
    double point_radius = 0;
    for (const auto& c : centers) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : s) best = std::min(best, (c - p).norm());
      point_radius = std::max(point_radius, best);
    }
    const double disk_radius = cover_radius(d, s);
    CHECK(disk_radius <= point_radius + 1e-12);
    CHECK(point_radius <= disk_radius + 1 + 1e-12);
  }
}

TEST_CASE("packing: a radius 2/eps ball meets at most 16/eps^2 disjoint unit disks") {
  for (double eps : {0.25, 0.5, 1.0}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const double reach = 2 / eps;
      // Greedy random packing of the box around the query ball.
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(0, 2 * reach + 4);
      std::vector<Disk> d;
      for (int t = 0; t < 20000; ++t) {
        const Disk c = make_disk(u(rng), u(rng), 1);
        if (std::all_of(d.begin(), d.end(), [&](const Disk& o) { return dist_objects(o, c) > 0; }))
          d.push_back(c);
      }
      const Point mid = make_point({reach + 2, reach + 2});
      std::size_t meet = 0;
      for (const auto& x : d) meet += dist_point_object<double>(mid, Object{x}) <= reach;
      CHECK(static_cast<double>(meet) <= 16 / (eps * eps));
    }
  }
}

TEST_CASE("small branch is exactly optimal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_unit_disks(5, seed, 12);
    const int k = 1 + static_cast<int>(seed % 2);
    const auto sol = solve_unit_disks_small_k(d, k, FptasConfig{0.5});
    CHECK(sol.algorithm == "fptas-exact");
    CHECK(sol.radius == doctest::Approx(brute_force_opt(d, k).radius).epsilon(1e-9));
  }
}
