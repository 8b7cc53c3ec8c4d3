#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kcn/canonical.hpp"
#include "kcn/generators.hpp"
#include "kcn/oracle.hpp"

using namespace kcn;

namespace {

bool has_point(const CandidateSets& s, double x, double y) {
  return std::any_of(s.points.begin(), s.points.end(), [&](const CandidatePoint& c) {
    return std::abs(c.point[0] - x) < 1e-9 && std::abs(c.point[1] - y) < 1e-9;
  });
}

bool has_radius(const CandidateSets& s, double r, double tol = 1e-9) {
  return std::any_of(s.radii.begin(), s.radii.end(), [&](double v) { return std::abs(v - r) <= tol; });
}

}  // namespace

TEST_CASE("single disk") {
  const std::vector<Disk> d{make_disk(0, 0, 1)};
  const auto s = canonical_candidates(d);
  CHECK(has_point(s, 0, 0));
  CHECK(s.radii == std::vector<double>{0.0});
}

TEST_CASE("two disks contribute the bisector vertex") {
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  const auto s = canonical_candidates(d);
  CHECK(has_point(s, 2, 0));
  CHECK(has_radius(s, 1.0));
  CHECK(brute_force_opt(d, 1).radius == doctest::Approx(1.0));
}

TEST_CASE("equilateral triple contributes the centroid event") {
  const double h = 3 * std::sqrt(3.0);
  const std::vector<Disk> d{make_disk(0, 0, 1), make_disk(6, 0, 1), make_disk(3, h, 1)};
  const auto s = canonical_candidates(d);
  CHECK(has_radius(s, 2 * std::sqrt(3.0) - 1));
  CHECK(has_point(s, 3, std::sqrt(3.0)));
  CHECK(brute_force_opt(d, 1).radius == doctest::Approx(2 * std::sqrt(3.0) - 1));
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(canonical_candidates(std::vector<Disk>{}), InputError);
  CHECK_THROWS_AS(canonical_candidates(std::vector<Disk>{make_disk(0, 0, 1), make_disk(1, 0, 1)}),
                  InputError);
  const std::vector<Ball> spatial{Ball{make_point({0, 0, 0}), 1}};
  CHECK_THROWS_AS(canonical_candidates(spatial), InputError);
}

TEST_CASE("structural invariants on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const auto d = random_disks(n, seed);
    const auto s = canonical_candidates(d);
    REQUIRE(!s.radii.empty());
    CHECK(s.radii.front() == 0.0);
    CHECK(std::is_sorted(s.radii.begin(), s.radii.end()));
    CHECK(std::adjacent_find(s.radii.begin(), s.radii.end()) == s.radii.end());
    const double n3 = static_cast<double>(n * n * n);
    CHECK(static_cast<double>(s.points.size()) <= 8 * n3 + 1);
    CHECK(static_cast<double>(s.radii.size()) <= 8 * n3 + 1);
    for (std::size_t i = 0; i < n; ++i) CHECK(has_point(s, d[i].center[0], d[i].center[1]));

    for (const auto& c : s.points) {
      if (c.provenance == Provenance::object_point) continue;
      // Bisector points are equidistant to both defining disks.
      const double da = dist_point_object<double>(c.point, d[c.first]);
      const double db = dist_point_object<double>(c.point, d[c.second]);
      CHECK(std::abs(da - db) <= 1e-9 * std::max(1.0, da));
      CHECK(std::abs(da - c.distance) <= 1e-9 * std::max(1.0, da));
      CHECK(has_radius(s, c.distance, 1e-12 * std::max(1.0, c.distance)));
    }
  }
}

TEST_CASE("every event-free sub-arc has a minimum no farther than its ends") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto d = random_disks(5, seed);
    const auto s = canonical_candidates(d);
    const double window = radius_upper_bound(d) + kTolerance;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const auto bis = disk_bisector(d[i], d[j], i, j);
        std::vector<double> cuts;
        for (std::size_t t = 0; t < d.size(); ++t) {
          if (t == i || t == j) continue;
          for (const auto& e : equidistant_point_on_bisector(bis, d[t], window)) cuts.push_back(e.u);
        }
        std::sort(cuts.begin(), cuts.end());
        // Parameters of the candidate points lying on this bisector; a point
        // shared by several bisectors is kept once, under any of them.
        std::vector<double> minima;
        for (const auto& c : s.points) {
          const double di = dist_point_object<double>(c.point, d[i]);
          const double dj = dist_point_object<double>(c.point, d[j]);
          if (std::abs(di - dj) > 1e-9 * std::max(1.0, di)) continue;
          const double off = (c.point.head<2>() - bis.origin).dot(bis.normal);
          minima.push_back(std::asinh(off / bis.b));
        }
        const double inf = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a <= cuts.size(); ++a) {
          const double lo = a == 0 ? -inf : cuts[a - 1];
          const double hi = a == cuts.size() ? inf : cuts[a];
          if (hi - lo < 1e-9) continue;
          const double ends = std::min(std::isinf(lo) ? inf : bis.distance_at(lo),
                                       std::isinf(hi) ? inf : bis.distance_at(hi));
          const bool found = std::any_of(minima.begin(), minima.end(), [&](double u) {
            return u >= lo - 1e-9 && u <= hi + 1e-9 && bis.distance_at(u) <= ends + 1e-9;
          });
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("sorted_unique merges close values") {
  const auto v = sorted_unique({3.0, 1.0, 1.0 + 1e-13, 2.0, 3.0 + 1e-10}, 1e-12);
  CHECK(v == std::vector<double>{1.0, 2.0, 3.0, 3.0 + 1e-10});
}

TEST_CASE("provenance names") {
  CHECK(std::string(to_string(Provenance::object_point)) == "object-point");
  CHECK(std::string(to_string(Provenance::bisector_event)) == "bisector-event");
  CHECK(std::string(to_string(Provenance::interval_minimum)) == "interval-minimum");
}
