#include <doctest.h>

#include <cmath>

#include "kcn/canonical.hpp"
#include "kcn/decider.hpp"
#include "kcn/generators.hpp"
#include "kcn/optimizer.hpp"
#include "kcn/oracle.hpp"

using namespace kcn;

TEST_CASE("k = n gives radius zero") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  const auto sol = solve_disks(d, 2);
  CHECK(sol.radius == 0.0);
  CHECK(sol.centers.size() == 2);
  CHECK(solve_balls_dd(d, 5, 0.1).radius == 0.0);
}

TEST_CASE("two unit disks, one center") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  const auto sol = solve_disks(d, 1);
  CHECK(sol.centers.size() == 1);
  CHECK(sol.radius >= 1.0 - 1e-9);
  CHECK(sol.radius <= kDeciderFactor * 1.0 + 1e-9);
  CHECK(sol.algorithm == "disks");
}

TEST_CASE("errors") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  CHECK_THROWS_AS(solve_disks(d, 0), InputError);
  CHECK_THROWS_AS(solve_balls_dd(d, 1, 0.0), InputError);
  CHECK_THROWS_AS(solve_disks(std::vector<Disk>{make_disk(0, 0, 1), make_disk(1, 0, 1)}, 1),
                  InputError);
}

TEST_CASE("ratio, reported radius and probe invariants on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = random_disks(3 + seed % 4, seed);
    const int k = 1 + static_cast<int>(seed % 2);
    const double opt = brute_force_opt(d, k).radius;
    double last_infeasible = 0;
    double first_feasible = std::numeric_limits<double>::infinity();
    std::size_t probes = 0;
    const auto sol = solve_disks(d, k, [&](double r, bool ok) {
      ++probes;
      if (ok) first_feasible = std::min(first_feasible, r);
      else last_infeasible = std::max(last_infeasible, r);
    });
    CHECK(sol.centers.size() <= static_cast<std::size_t>(k));
    CHECK(std::abs(sol.radius - cover_radius(d, sol.centers)) <= 1e-9);
    CHECK(sol.radius >= opt - 1e-9);
    CHECK(sol.radius <= kDeciderFactor * opt + 1e-9);
    CHECK(last_infeasible < first_feasible);
    CHECK(sol.decider_calls == probes);
    const auto radii = canonical_candidates(d).radii;
    CHECK(static_cast<double>(probes) <= std::ceil(std::log2(static_cast<double>(radii.size()))) + 2);
  }
}

TEST_CASE("balls in three dimensions") {
  const std::vector<Ball> b{Ball{make_point({0, 0, 0}), 1}, Ball{make_point({6, 0, 0}), 1}};
  const auto sol = solve_balls_dd(b, 1, 0.1);
  CHECK(partition_opt(to_objects(b), 1).radius == doctest::Approx(2.0));
  CHECK(sol.radius >= 2.0 - 1e-9);
  CHECK(sol.radius <= (kDeciderFactor + 0.1) * 2.0 + 1e-9);
  CHECK(sol.algorithm == "balls");
}

TEST_CASE("candidate radii bracket the optimum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = random_balls(5, 3, seed);
    const int k = 1 + static_cast<int>(seed % 2);
    const double opt = partition_opt(to_objects(b), k).radius;
    const auto radii = ball_candidate_radii(b);
    CHECK(std::is_sorted(radii.begin(), radii.end()));
    const bool bracket = std::any_of(radii.begin(), radii.end(), [&](double x) {
      return x >= opt - 1e-9 && x <= kDeciderFactor * opt + 1e-9;
    });
    CHECK(bracket);
    const auto sol = solve_balls_dd(b, k, 0.25);
    CHECK(sol.radius <= (kDeciderFactor + 0.25) * opt + 1e-9);
    CHECK(sol.radius >= opt - 1e-9);
  }
}
