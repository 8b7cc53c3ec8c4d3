#include <doctest.h>

#include <cmath>
#include <random>

#include "kcn/canonical.hpp"
#include "kcn/generators.hpp"
#include "kcn/oracle.hpp"
#include "kcn/size_ptas.hpp"

using namespace kcn;

namespace {

std::vector<Point> points_of(const CandidateSets& s) {
  std::vector<Point> out;
  for (const auto& c : s.points) out.push_back(c.point);
  return out;
}

bool hits_all(std::span<const InflatedRegion> regions, std::span<const Point> h) {
  return std::all_of(regions.begin(), regions.end(), [&](const InflatedRegion& reg) {
    return std::any_of(h.begin(), h.end(), [&](const Point& p) { return reg.contains(p); });
  });
}

}  // namespace

TEST_CASE("local search on hand-made regions") {
  const std::vector<Disk> one{make_disk(0, 0, 1)};
  const auto r1 = inflate(to_objects(one), 0.5);
  const std::vector<Point> inside{make_point({0.2, 0})};
  CHECK(hitting_set_local_search(r1, inside, 3).size() == 1);

  const std::vector<Disk> apart{make_disk(0, 0, 1), make_disk(10, 0, 1)};
  const auto r2 = inflate(to_objects(apart), 1.0);
  const std::vector<Point> both{make_point({0, 0}), make_point({10, 0}), make_point({5, 0})};
  CHECK(hitting_set_local_search(r2, both, 3).size() == 2);

  // Five regions around q = (0,0), each with a private candidate first.
  std::vector<Disk> petals;
  std::vector<Point> cands;
  for (int i = 0; i < 5; ++i) {
    const double a = 2 * M_PI * i / 5;
    petals.push_back(make_disk(3 * std::cos(a), 3 * std::sin(a), 1));
    cands.push_back(petals.back().center);
  }
  cands.push_back(make_point({0, 0}));
  const auto star = inflate(to_objects(petals), 2.0 + 1e-9);
  const std::vector<std::size_t> all_private{0, 1, 2, 3, 4};
  const auto h = local_search_hitting_set(star, cands, 3, all_private);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == 5);
}

TEST_CASE("unhittable region is named") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(10, 0, 1)};
  const auto regions = inflate(to_objects(d), 0.5);
  const std::vector<Point> cands{make_point({0, 0})};
  CHECK_THROWS_WITH_AS(hitting_set_local_search(regions, cands, 2),
                       doctest::Contains("1"), InputError);
}

TEST_CASE("local search never grows the greedy set and stays a hitting set") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = random_disks(6, seed);
    const auto cands = points_of(canonical_candidates(d));
    const double r = 1.0 + static_cast<double>(seed % 5);
    const auto regions = inflate(to_objects(d), r);
    const auto greedy = greedy_hitting_set(regions, cands);
    const auto local = local_search_hitting_set(regions, cands, 2, greedy);
    CHECK(local.size() <= greedy.size());
    std::vector<Point> h;
    for (auto i : local) h.push_back(cands[i]);
    CHECK(hits_all(regions, h));
  }
}

TEST_CASE("a set covers at r iff it hits every inflated region") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 20);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_disks(5, seed);
    std::vector<Point> s{make_point({u(rng), u(rng)}), make_point({u(rng), u(rng)})};
    const double r = u(rng) / 2;
    CHECK(hits_all(inflate(to_objects(d), r), s) == (cover_radius(d, s) <= r));
  }
}

TEST_CASE("perturbation") {
  // Inflated disks at r = 0.1 touch exactly.
  const std::vector<Disk> tangent{make_disk(0, 0, 1), make_disk(2.2, 0, 1), make_disk(9, 0, 1)};
  const double alpha = inflation_perturbation(tangent, 0.1);
  // Smallest positive gap between inflated disks: 9 - 2.2 - 2 * 1.1 = 4.6.
  CHECK(alpha == doctest::Approx(4.6 / 4));
  const std::vector<Disk> loose{make_disk(0, 0, 1), make_disk(5, 0, 1)};
  CHECK(inflation_perturbation(loose, 0.1) == 0.0);
}

TEST_CASE("solve_size examples") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(2.2, 0, 1)};
  const auto sol = solve_size(d, 1, 0.5);
  CHECK(sol.centers.size() <= 1);
  CHECK(sol.radius <= 0.1 + 1e-9);
  CHECK(solve_size(d, 2, 0.5).radius == 0.0);
  CHECK_THROWS_AS(solve_size(d, 1, 0.0), InputError);
  CHECK_THROWS_AS(solve_size(d, 0, 0.5), InputError);
}

TEST_CASE("size and radius bounds on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = random_disks(5, seed);
    const int k = 2;
    const double eps = 0.34;
    const auto sol = solve_size(d, k, eps);
    CHECK(static_cast<double>(sol.centers.size()) <= (1 + eps) * k);
    CHECK(sol.radius <= brute_force_opt(d, k).radius + 1e-9);
    CHECK(std::abs(sol.radius - cover_radius(d, sol.centers)) <= 1e-12);
  }
}
