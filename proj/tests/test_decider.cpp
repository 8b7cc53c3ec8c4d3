#include <doctest.h>

#include <cmath>
#include <random>

#include "kcn/decider.hpp"
#include "kcn/generators.hpp"
#include "kcn/instance.hpp"
#include "kcn/oracle.hpp"

using namespace kcn;

namespace {

void check_cover(std::span<const Ball> balls, int k, double r, const DeciderVerdict& v) {
  REQUIRE(v.feasible());
  const auto& cover = *v.cover;
  CHECK(cover.centers.size() <= static_cast<std::size_t>(k));
  CHECK(cover.part_sizes[0] + cover.part_sizes[1] + cover.part_sizes[2] == cover.centers.size());
  CHECK(cover_radius(balls, cover.centers) <= kDeciderFactor * r + 1e-9);
}

}  // namespace

TEST_CASE("constants") {
  CHECK(kDeciderFactor == doctest::Approx(8.464101615));
  CHECK(kLargeDiskFactor == doctest::Approx(6.464101615));
  CHECK(kPackingFactor == doctest::Approx(0.154700538));
}

TEST_CASE("single small disk is swept") {
  const std::vector<Disk> d{make_disk(0, 0, 1)};
  const auto v = decide(d, 1, 0.5);
  check_cover(d, 1, 0.5, v);
  CHECK(v.cover->part_sizes[0] == 1);
  CHECK(v.cover->centers[0].isApprox(make_point({0, 0})));
}

TEST_CASE("far apart disks with one center are infeasible") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(100, 0, 1)};
  const auto v = decide(d, 1, 1.0);
  CHECK_FALSE(v.feasible());
  CHECK(v.centers_needed == 2);
  CHECK(brute_force_opt(d, 1).radius == doctest::Approx(49.0));
}

TEST_CASE("large disk bypasses the sweep") {
  const std::vector<Disk> d{make_disk(0, 0, 100), make_disk(200, 0, 1)};
  const auto v = decide(d, 2, 1.0);
  check_cover(d, 2, 1.0, v);
  CHECK(v.cover->part_sizes[0] == 1);
  CHECK(v.cover->part_sizes[1] == 1);
  CHECK(v.cover->part(0)[0].isApprox(make_point({200, 0})));
  CHECK(v.cover->part(1)[0].isApprox(make_point({0, 0})));
  CHECK(cover_radius(d, v.cover->centers) == 0.0);
}

TEST_CASE("paired large disks use the gap midpoint") {
  const std::vector<Disk> d{make_disk(0, 0, 10), make_disk(21, 0, 10), make_disk(100, 0, 10)};
  const auto v = decide(d, 2, 1.0);
  check_cover(d, 2, 1.0, v);
  CHECK(v.cover->part_sizes[1] == 1);
  CHECK(v.cover->part_sizes[2] == 1);
  CHECK(v.cover->part(2)[0].isApprox(make_point({10.5, 0})));
}

TEST_CASE("input errors") {
  const std::vector<Disk> d{make_disk(0, 0, 1)};
  CHECK_THROWS_AS(decide(d, 1, 0.0), InputError);
  CHECK_THROWS_AS(decide(d, 1, -1.0), InputError);
  CHECK_THROWS_AS(decide(d, -1, 1.0), InputError);
}

TEST_CASE("packing never admits three disjoint disks") {
  const double r = 1.0;
  // Nearly touching triple: the centroid is just beyond the threshold.
  const double delta = 1e-3;
  const double rho = 2 * r * (1 + delta) / std::sqrt(3.0);
  std::vector<Disk> triple;
  for (int i = 0; i < 3; ++i) {
    const double a = 2 * M_PI * i / 3;
    triple.push_back(make_disk(rho * std::cos(a), rho * std::sin(a), r));
  }
  CHECK_FALSE(packing_admits_three(triple, make_point({0, 0}), r));
  const std::vector<Disk> two(triple.begin(), triple.begin() + 2);
  CHECK_FALSE(packing_admits_three(two, make_point({0, 0}), r));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(-3, 3);
  std::uniform_real_distribution<double> extra(0, 2);
  for (int t = 0; t < 20000; ++t) {
    std::vector<Disk> d;
    while (d.size() < 3) {
      const Disk c = make_disk(pos(rng), pos(rng), r + extra(rng));
      bool ok = true;
      for (const auto& o : d) ok = ok && dist_objects(o, c) > 0;
      if (ok) d.push_back(c);
    }
    CHECK_FALSE(packing_admits_three(d, make_point({pos(rng) / 3, pos(rng) / 3}), r));
  }
}

TEST_CASE("decider contract on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto d = random_disks(2 + seed % 6, seed);
    const int k = 1 + static_cast<int>(seed % 3);
    if (static_cast<std::size_t>(k) >= d.size()) continue;
    const double opt = brute_force_opt(d, k).radius;
    for (double f : {1.0, 1.1, 2.0, 5.0}) {
      const auto v = decide(d, k, f * opt);
      check_cover(d, k, f * opt, v);
    }
    CHECK_FALSE(decide(d, k, 0.99 * opt / kDeciderFactor).feasible());
  }
}

TEST_CASE("decider works on balls in three dimensions") {
  const auto b = random_balls(6, 3, 4);
  const double opt = partition_opt(to_objects(b), 2).radius;
  check_cover(b, 2, opt, decide(b, 2, opt));
}
