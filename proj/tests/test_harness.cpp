#include <doctest.h>

#include <cmath>

#include "kcn/decider.hpp"
#include "kcn/generators.hpp"
#include "kcn/io.hpp"
#include "kcn/oracle.hpp"
#include "kcn/svg.hpp"

using namespace kcn;

TEST_CASE("brute force examples") {
  const std::vector<Disk> two{make_disk(0, 0, 1), make_disk(4, 0, 1)};
  CHECK(brute_force_opt(two, 1).radius == doctest::Approx(1.0));
  CHECK(grid_opt(to_objects(two), 1, 0.01).radius == doctest::Approx(1.0).epsilon(0.02));
  CHECK(brute_force_opt(two, 2).radius == 0.0);
  const std::vector<Interval> iv{{0, 1}, {2, 3}, {10, 11}};
  CHECK(brute_force_opt_1d(iv, 2).radius == doctest::Approx(0.5));
  CHECK(brute_force_opt_1d(iv, 3).radius == 0.0);
  CHECK_THROWS_AS(brute_force_opt(two, 0), InputError);
}

TEST_CASE("oracle guard") {
  const auto d = random_disks(14, 2, DiskOptions{12, 0.2, 0.8, 0.05});
  CHECK_THROWS_WITH_AS(brute_force_opt(d, 6), doctest::Contains("guard"), InputError);
}

TEST_CASE("canonical oracle agrees with the dense grid for n <= 3") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_disks(2 + seed % 2, seed, DiskOptions{8, 0.3, 1.2, 0.1});
    const double step = 0.02;
    for (int k = 1; k < static_cast<int>(d.size()); ++k) {
      const double exact = brute_force_opt(d, k).radius;
      const double grid = grid_opt(to_objects(d), k, step).radius;
      CHECK(grid >= exact - 1e-9);
      CHECK(grid - exact <= 2 * step);
    }
  }
}

TEST_CASE("partition oracle agrees with the canonical oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = random_disks(2 + seed % 5, seed);
    const int k = 1 + static_cast<int>(seed % 3);
    CHECK(std::abs(partition_opt(to_objects(d), k).radius - brute_force_opt(d, k).radius) <= 1e-9);
  }
}

TEST_CASE("one_center on segments and intervals") {
  const std::vector<Object> segs{Segment{make_point({0, 0}), make_point({0, 2})},
                                 Segment{make_point({4, 0}), make_point({4, 2})}};
  double v = 0;
  one_center(segs, &v);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  const std::vector<Object> iv{Interval{0, 1}, Interval{5, 6}};
  one_center(iv, &v);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("random generators are seeded and disjoint") {
  const auto a = random_disks(25, 42);
  const auto b = random_disks(25, 42);
  REQUIRE(a.size() == 25);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].center == b[i].center);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(dist_objects(a[i], a[j]) >= 0.05);
  for (const auto& d : random_unit_disks(30, 1)) CHECK(d.radius == 1.0);
  const auto balls = random_balls(10, 4, 3);
  for (const auto& x : balls) CHECK(x.center.size() == 4);
  CHECK_THROWS_AS(random_disks(500, 1, DiskOptions{5, 1, 1, 0.1}), InputError);
  for (const auto& iv : random_intervals(50, 9)) CHECK(iv.lo <= iv.hi);
}

TEST_CASE("segment gadget") {
  GadgetParams p;
  p.graph = named_graph("triangle");
  p.eps_shrink = 0.01;
  p.k = 2;
  const auto g = gen_vc_segments(p);
  REQUIRE(g.segments.size() == 3);
  CHECK(g.k == 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      // Ends shrunk by eps at a corner of angle t are 2 eps sin(t / 2) apart.
      const double d = dist_objects(Object{g.segments[i]}, Object{g.segments[j]});
      CHECK(d == doctest::Approx(2 * 0.01 * std::sin(M_PI / 6)));
    }

  p.graph = named_graph("edge");
  const auto single = gen_vc_segments(p);
  REQUIRE(single.segments.size() == 1);
  CHECK((single.segments[0].q - single.segments[0].p).norm() == doctest::Approx(14 - 0.02));

  p.graph = named_graph("path");
  const auto path = gen_vc_segments(p);
  const double d = dist_objects(Object{path.segments[0]}, Object{path.segments[1]});
  CHECK(d > 0);
  CHECK(d <= 2 * p.eps_shrink);

  p.eps_shrink = 8;
  CHECK_THROWS_AS(gen_vc_segments(p), InputError);
}

TEST_CASE("disk gadget constants") {
  CHECK(kChainGap == doctest::Approx(0.30940107675850));
  CHECK(std::abs(kChainStep - 2 - kChainGap) <= 1e-15);
  CHECK(kTripleCrossDistance == doctest::Approx(2.16333076527));
}

TEST_CASE("disk gadget on a single edge") {
  GadgetParams p;
  p.graph = named_graph("edge");
  p.k = 1;
  p.edge_disks = {3};
  const auto g = gen_vc_disks(p);
  REQUIRE(g.disks.size() == 3);
  CHECK(g.kappa == p.k + 1);
  for (std::size_t i = 0; i + 1 < 3; ++i)
    CHECK(std::abs(dist_objects(g.disks[i], g.disks[i + 1]) - kChainGap) <= 1e-9);
  CHECK(std::abs(g.disks[1].center[1] - g.disks[0].center[1]) <= 1e-12);
  CHECK(std::abs(g.disks[2].center[1] - g.disks[0].center[1]) <= 1e-12);
}

TEST_CASE("disk gadget on a star") {
  GadgetParams p;
  p.graph = named_graph("star");
  p.delta_sep = 1e-4;
  p.edge_disks = {5, 5, 5};
  const auto g = gen_vc_disks(p);
  CHECK(g.disks.size() == 15);
  REQUIRE(g.triples.size() == 1);
  const auto& t = g.triples[0];
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(dist_objects(g.disks[t[i]], g.disks[t[(i + 1) % 3]]) == doctest::Approx(1e-4));
  double cross = std::numeric_limits<double>::infinity();
  for (const auto& chain : g.chains)
    for (std::size_t member : t)
      if (member != chain.front()) cross = std::min(cross, dist_objects(g.disks[member], g.disks[chain[1]]));
  CHECK(cross >= kTripleCrossDistance - 1e-3);
  CHECK(std::abs(cross - kTripleCrossDistance) <= 1e-3);
}

TEST_CASE("disk gadget input errors") {
  GadgetParams p;
  p.graph.positions = {{0, 0}, {20, 0}, {-20, 0}, {0, 20}, {0, -20}};
  p.graph.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK_THROWS_WITH_AS(gen_vc_disks(p), doctest::Contains("degree"), InputError);
  p.graph = named_graph("edge");
  p.edge_disks = {4};
  CHECK_THROWS_AS(gen_vc_disks(p), InputError);
  p.edge_disks = {0};
  p.delta_sep = 0;
  CHECK_THROWS_AS(gen_vc_disks(p), InputError);
  CHECK_THROWS_AS(named_graph("petersen"), InputError);
}

TEST_CASE("gadget instances are covered at the threshold radius") {
  const std::vector<std::pair<std::string, int>> graphs{
      {"edge", 1}, {"path", 1}, {"star", 1}, {"triangle", 2}, {"square", 2}, {"k4", 3}};
  for (const auto& [name, cover] : graphs) {
    GadgetParams p;
    p.graph = named_graph(name);
    p.k = cover;
    p.delta_sep = 1e-7;
    const auto g = gen_vc_disks(p);
    CHECK(g.kappa == cover + static_cast<int>(g.disks.size() - p.graph.edges.size()) / 2);
    const auto v = decide(g.disks, g.kappa, kPackingFactor + 1e-6);
    CHECK_MESSAGE(v.feasible(), name);
  }
}

TEST_CASE("instance JSON round trip is byte-identical") {
  Instance inst;
  inst.dimension = 2;
  inst.k = 3;
  inst.objects = {make_disk(0.1, 2.5, 1), Segment{make_point({0, 0}), make_point({1, 1e-7})}};
  const std::string first = dump(to_json(inst));
  const std::string second = dump(to_json(instance_from_json(Json::parse(first))));
  CHECK(first == second);
  CHECK(first.find("\"type\": \"disk\"") != std::string::npos);

  Instance line;
  line.dimension = 1;
  line.objects = {Interval{0, 1}, Interval{2.25, 3}};
  const std::string l1 = dump(to_json(line));
  CHECK(l1 == dump(to_json(instance_from_json(Json::parse(l1)))));

  Solution sol{{make_point({1, 2}), make_point({3.5, -1})}, 0.75, "disks", 4};
  const std::string s1 = dump(to_json(sol));
  CHECK(s1 == dump(to_json(solution_from_json(Json::parse(s1)))));
}

TEST_CASE("malformed instances are input errors") {
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"k": 1})")), InputError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"objects": [{"type": "blob"}]})")), InputError);
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(R"({"objects": [{"type": "disk", "center": [0], "radius": 1}]})")),
      InputError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(
                      R"({"dimension": 3, "objects": [{"type": "disk", "center": [0, 0], "radius": 1}]})")),
                  InputError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(
                      R"({"objects": [{"type": "interval", "lo": 2, "hi": 1}]})")),
                  InputError);
}

TEST_CASE("svg rendering") {
  Instance inst;
  inst.objects = {make_disk(0, 0, 1), make_disk(4, 0, 1)};
  Solution sol{{make_point({2, 0})}, 1.0, "disks", 1};
  const auto svg = render_svg(inst, &sol);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 3);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
