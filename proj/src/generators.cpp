#include "kcn/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

namespace kcn {

std::vector<Ball> random_balls(std::size_t n, int dim, std::uint64_t seed, const DiskOptions& opt) {
  if (dim < 1) throw InputError("dimension must be positive");
  if (!(opt.min_radius > 0) || opt.max_radius < opt.min_radius)
    throw InputError("radius range must satisfy 0 < min_radius <= max_radius");
  if (!(opt.min_gap > 0)) throw InputError("min_gap must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, opt.box);
  std::uniform_real_distribution<double> radius(opt.min_radius, opt.max_radius);
  std::vector<Ball> out;
  const std::size_t budget = 20000 * std::max<std::size_t>(n, 1);
  for (std::size_t attempt = 0; out.size() < n; ++attempt) {
    if (attempt == budget)
      throw InputError("could not place " + std::to_string(n) + " disjoint balls; enlarge the box");
    Ball b{Point(dim), radius(rng)};
    for (int i = 0; i < dim; ++i) b.center[i] = coord(rng);
    const bool clear = std::all_of(out.begin(), out.end(), [&](const Ball& o) {
      return (o.center - b.center).norm() - o.radius - b.radius >= opt.min_gap;
    });
    if (clear) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Disk> random_disks(std::size_t n, std::uint64_t seed, const DiskOptions& opt) {
  return random_balls(n, 2, seed, opt);
}

std::vector<Disk> random_unit_disks(std::size_t n, std::uint64_t seed, double box,
                                    double min_gap) {
  return random_balls(n, 2, seed, DiskOptions{box, 1.0, 1.0, min_gap});
}

std::vector<Interval> random_intervals(std::size_t n, std::uint64_t seed, double span,
                                       double max_length) {
  if (!(span >= 0) || !(max_length >= 0)) throw InputError("span and max_length must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> left(0.0, span);
  std::uniform_real_distribution<double> length(0.0, max_length);
  std::vector<Interval> out(n);
  for (auto& iv : out) {
    iv.lo = left(rng);
    iv.hi = iv.lo + length(rng);
  }
  return out;
}

std::size_t PlanarGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

PlanarGraph named_graph(const std::string& name) {
  auto polar = [](double radius, double degrees) {
    const double a = degrees * std::numbers::pi / 180;
    return Vector2(radius * std::cos(a), radius * std::sin(a));
  };
  PlanarGraph g;
  if (name == "edge") {
    g.positions = {{0, 0}, {14, 0}};
    g.edges = {{0, 1}};
  } else if (name == "path") {
    g.positions = {{0, 0}, {16, 0}, {28, 10}};
    g.edges = {{0, 1}, {1, 2}};
  } else if (name == "star") {
    g.positions = {{0, 0}, polar(16, 90), polar(16, 210), polar(16, 330)};
    g.edges = {{0, 1}, {0, 2}, {0, 3}};
  } else if (name == "triangle") {
    g.positions = {{0, 0}, {20, 0}, {10, 10 * std::sqrt(3.0)}};
    g.edges = {{0, 1}, {1, 2}, {2, 0}};
  } else if (name == "k4") {
    g.positions = {{0, 0}, polar(30, 90), polar(30, 210), polar(30, 330)};
    g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  } else if (name == "square") {
    g.positions = {{0, 0}, {18, 0}, {18, 18}, {0, 18}};
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  } else {
    throw InputError("unknown graph \"" + name + "\"");
  }
  return g;
}

namespace {

void check_graph(const PlanarGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u >= g.positions.size() || v >= g.positions.size())
      throw InputError("edge " + std::to_string(e) + " refers to a missing vertex");
    if (u == v) throw InputError("edge " + std::to_string(e) + " is a loop");
    if ((g.positions[u] - g.positions[v]).norm() <= 0)
      throw InputError("edge " + std::to_string(e) + " has zero length");
    for (std::size_t f = 0; f < e; ++f) {
      const auto [a, b] = g.edges[f];
      if ((a == u && b == v) || (a == v && b == u))
        throw InputError("edge " + std::to_string(e) + " duplicates edge " + std::to_string(f));
    }
  }
}

Point lift(const Vector2& v) { return make_point({v.x(), v.y()}); }

double segment_gap(const Vector2& p1, const Vector2& q1, const Vector2& p2, const Vector2& q2) {
  return detail::segment_segment_distance<double>(lift(p1), lift(q1), lift(p2), lift(q2));
}

}  // namespace

SegmentGadget gen_vc_segments(const GadgetParams& params) {
  const auto& g = params.graph;
  check_graph(g);
  if (g.edges.empty()) throw InputError("graph has no edges");
  const double eps = params.eps_shrink;
  if (!(eps > 0)) throw InputError("eps_shrink must be positive");

  double min_length = std::numeric_limits<double>::infinity();
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    min_length = std::min(min_length, (g.positions[u] - g.positions[v]).norm());
    for (std::size_t f = 0; f < e; ++f) {
      const auto [a, b] = g.edges[f];
      if (a == u || a == v || b == u || b == v) continue;
      d = std::min(d, segment_gap(g.positions[u], g.positions[v], g.positions[a], g.positions[b]));
    }
  }
  if (!(eps < min_length / 2)) throw InputError("eps_shrink must be below half the shortest edge");
  if (!(eps < d / 2))
    throw InputError("eps_shrink must be below half the distance between non-adjacent edges");

  SegmentGadget out;
  out.k = params.k;
  for (const auto& [u, v] : g.edges) {
    const Vector2 dir = (g.positions[v] - g.positions[u]).normalized();
    out.segments.push_back(
        Segment{lift(g.positions[u] + eps * dir), lift(g.positions[v] - eps * dir)});
  }
  for (std::size_t i = 0; i < out.segments.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(dist_objects(Object{out.segments[i]}, Object{out.segments[j]}) > 0))
        throw InputError("segments " + std::to_string(j) + " and " + std::to_string(i) +
                         " still touch; the embedding is not planar");
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;
// Consecutive step directions of a chain differ by at most this; a 26 degree
// bend already brings disks i and i+2 within 2.5 of each other.
constexpr double kMaxTurn = 22.0 * kPi / 180.0;
constexpr double kFarApart = 2.5;

double wrap(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a <= -kPi) a += 2 * kPi;
  return a;
}

Vector2 heading(double a) { return {std::cos(a), std::sin(a)}; }

struct EndSpec {
  Vector2 pos;
  std::optional<double> out;  // direction of the first step into the edge
};

// Step directions h0 + (h1 - h0) t + alpha sin(pi t) + beta sin(2 pi t) with
// t = i / (m - 1), so the first and last steps are exactly h0 and h1.
std::vector<double> profile(double h0, double h1, std::size_t m, double alpha, double beta) {
  std::vector<double> phi(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = m == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(m - 1);
    phi[i] = h0 + (h1 - h0) * t + alpha * std::sin(kPi * t) + beta * std::sin(2 * kPi * t);
  }
  return phi;
}

Vector2 walk(const std::vector<double>& phi) {
  Vector2 s = Vector2::Zero();
  for (double a : phi) s += kChainStep * heading(a);
  return s;
}

double max_turn(const std::vector<double>& phi) {
  double worst = 0;
  for (std::size_t i = 1; i < phi.size(); ++i) worst = std::max(worst, std::abs(phi[i] - phi[i - 1]));
  return worst;
}

std::optional<std::vector<double>> close_chain(const Vector2& gap, double h0, double h1,
                                               std::size_t m) {
  if (m <= 2) {
    auto phi = profile(h0, h1, m, 0, 0);
    if ((walk(phi) - gap).norm() < 1e-10 && max_turn(phi) <= kMaxTurn) return phi;
    return std::nullopt;
  }
  std::optional<std::vector<double>> best;
  for (double a0 : {0.0, 0.3, -0.3, 0.7, -0.7, 1.2, -1.2}) {
    for (double b0 : {0.0, 0.4, -0.4}) {
      double alpha = a0;
      double beta = b0;
      Vector2 res = walk(profile(h0, h1, m, alpha, beta)) - gap;
      for (int it = 0; it < 100 && res.norm() > 1e-13; ++it) {
        const auto phi = profile(h0, h1, m, alpha, beta);
        Eigen::Matrix2d jac = Eigen::Matrix2d::Zero();
        for (std::size_t i = 0; i < m; ++i) {
          const double t = static_cast<double>(i) / static_cast<double>(m - 1);
          const Vector2 perp = kChainStep * Vector2(-std::sin(phi[i]), std::cos(phi[i]));
          jac.col(0) += perp * std::sin(kPi * t);
          jac.col(1) += perp * std::sin(2 * kPi * t);
        }
        if (std::abs(jac.determinant()) < 1e-12) break;
        const Eigen::Vector2d delta = jac.partialPivLu().solve(-res);
        double scale = 1;
        for (; scale > 1e-4; scale /= 2) {
          const Vector2 trial =
              walk(profile(h0, h1, m, alpha + scale * delta[0], beta + scale * delta[1])) - gap;
          if (trial.norm() < res.norm()) {
            alpha += scale * delta[0];
            beta += scale * delta[1];
            res = trial;
            break;
          }
        }
        if (scale <= 1e-4) break;
      }
      if (res.norm() > 1e-10) continue;
      auto phi = profile(h0, h1, m, alpha, beta);
      if (max_turn(phi) > kMaxTurn) continue;
      if (!best || max_turn(phi) < max_turn(*best)) best = std::move(phi);
    }
  }
  return best;
}

std::vector<Vector2> centers_from(const Vector2& start, const std::vector<double>& phi) {
  std::vector<Vector2> out{start};
  for (double a : phi) out.push_back(out.back() + kChainStep * heading(a));
  return out;
}

// Heads for `target`, turning at most kMaxTurn per step after the first two
// disks, until an even number of steps ends within one step of it.
std::vector<Vector2> pursue(const Vector2& start, double h0, const Vector2& target,
                            std::optional<std::size_t> steps) {
  std::vector<Vector2> out{start};
  double h = h0;
  for (std::size_t i = 0;; ++i) {
    if (steps ? i == *steps : (i % 2 == 0 && i > 0 && (target - out.back()).norm() <= kChainStep))
      break;
    if (i > 4000) throw InputError("chain toward a degree-1 vertex does not converge");
    if (i >= 1) {
      const Vector2 to = target - out.back();
      const double want = std::atan2(to.y(), to.x());
      h += std::clamp(wrap(want - h), -kMaxTurn / 2, kMaxTurn / 2);
    }
    out.push_back(out.back() + kChainStep * heading(h));
  }
  return out;
}

// Non-consecutive disks of one chain stay more than kFarApart apart.
bool spread_out(const std::vector<Vector2>& centers) {
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 2; j < centers.size(); ++j)
      if ((centers[i] - centers[j]).norm() - 2 <= kFarApart) return false;
  return true;
}

std::vector<Vector2> build_chain(const EndSpec& a, const EndSpec& b, int requested) {
  std::optional<std::size_t> steps;
  if (requested > 0) steps = static_cast<std::size_t>(requested - 1);
  const Vector2 gap = b.pos - a.pos;
  if (!a.out && !b.out) {
    const Vector2 dir = gap.normalized();
    const std::size_t m =
        steps ? *steps
              : std::max<std::size_t>(2, 2 * static_cast<std::size_t>(std::lround(gap.norm() / kChainStep / 2)));
    std::vector<Vector2> out;
    for (std::size_t i = 0; i <= m; ++i) out.push_back(a.pos + static_cast<double>(i) * kChainStep * dir);
    return out;
  }
  if (!b.out) return pursue(a.pos, *a.out, b.pos, steps);
  if (!a.out) {
    auto rev = pursue(b.pos, *b.out, a.pos, steps);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  const double h0 = *a.out;
  // Of the turns ending in the arrival heading, take the one whose mean
  // heading is closest to the chord.
  const double chord = h0 + wrap(std::atan2(gap.y(), gap.x()) - h0);
  const double arrive = h0 + wrap(*b.out + kPi - h0);
  double h1 = arrive;
  for (double alt : {arrive - 2 * kPi, arrive + 2 * kPi})
    if (std::abs((h0 + alt) / 2 - chord) < std::abs((h0 + h1) / 2 - chord)) h1 = alt;
  auto attempt = [&](std::size_t m) -> std::optional<std::vector<Vector2>> {
    if (auto phi = close_chain(gap, h0, h1, m)) {
      auto centers = centers_from(a.pos, *phi);
      if (spread_out(centers)) return centers;
    }
    return std::nullopt;
  };
  if (steps) {
    if (auto centers = attempt(*steps)) return *centers;
    throw InputError("no chain with " + std::to_string(requested) +
                     " disks meets the bend constraint on this edge");
  }
  std::size_t m = 2 * static_cast<std::size_t>(std::ceil(gap.norm() / kChainStep / 2));
  m = std::max<std::size_t>(m, 2);
  for (std::size_t tries = 0; tries < 60; ++tries, m += 2) {
    if (auto centers = attempt(m)) return *centers;
  }
  throw InputError("bend constraint unsatisfiable on this edge; spread the embedding out");
}

}  // namespace

DiskGadget gen_vc_disks(const GadgetParams& params) {
  const auto& g = params.graph;
  check_graph(g);
  if (g.edges.empty()) throw InputError("graph has no edges");
  if (!(params.delta_sep > 0)) throw InputError("delta_sep must be positive");
  if (!params.edge_disks.empty() && params.edge_disks.size() != g.edges.size())
    throw InputError("edge_disks needs one entry per edge");
  for (int ne : params.edge_disks)
    if (ne != 0 && (ne < 3 || ne % 2 == 0)) throw InputError("disk counts must be odd and >= 3");

  const std::size_t nv = g.positions.size();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    incident[g.edges[e].second].push_back(e);
  }
  // ends[e][0] at the first vertex of edge e, ends[e][1] at the second.
  std::vector<std::array<EndSpec, 2>> ends(g.edges.size());
  auto slot = [&](std::size_t e, std::size_t v) -> EndSpec& {
    return ends[e][g.edges[e].first == v ? 0 : 1];
  };
  auto direction = [&](std::size_t e, std::size_t v) {
    const std::size_t w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    return Vector2((g.positions[w] - g.positions[v]).normalized());
  };

  DiskGadget out;
  std::vector<std::array<std::size_t, 3>> triple_edges;
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& inc = incident[v];
    const Vector2 at = g.positions[v];
    if (inc.size() > 3) throw InputError("vertex " + std::to_string(v) + " has degree > 3");
    if (inc.size() == 1) {
      slot(inc[0], v) = EndSpec{at, std::nullopt};
    } else if (inc.size() == 2) {
      Vector2 w = direction(inc[0], v) - direction(inc[1], v);
      if (w.norm() < 1e-9) throw InputError("overlapping edges at vertex " + std::to_string(v));
      w.normalize();
      slot(inc[0], v) = EndSpec{at + kChainStep / 2 * w, std::atan2(w.y(), w.x())};
      slot(inc[1], v) = EndSpec{at - kChainStep / 2 * w, std::atan2(-w.y(), -w.x())};
    } else if (inc.size() == 3) {
      std::array<std::size_t, 3> order{inc[0], inc[1], inc[2]};
      auto angle = [&](std::size_t e) {
        const Vector2 d = direction(e, v);
        return std::atan2(d.y(), d.x());
      };
      std::sort(order.begin(), order.end(), [&](auto x, auto y) { return angle(x) < angle(y); });
      // Rotation of the equilateral triple closest to the edge directions.
      Vector2 mean = Vector2::Zero();
      for (std::size_t i = 0; i < 3; ++i) mean += heading(angle(order[i]) - 2 * kPi * i / 3.0);
      const double theta = std::atan2(mean.y(), mean.x());
      const double circumradius = (2 + params.delta_sep) / std::sqrt(3.0);
      for (std::size_t i = 0; i < 3; ++i) {
        const double a = theta + 2 * kPi * i / 3.0;
        slot(order[i], v) = EndSpec{at + circumradius * heading(a), a};
      }
      triple_edges.push_back(order);
      out.triple_vertices.push_back(v);
    }
  }

  std::vector<int> vertex_of_disk;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int requested = params.edge_disks.empty() ? 0 : params.edge_disks[e];
    const auto centers = build_chain(ends[e][0], ends[e][1], requested);
    std::vector<std::size_t> chain;
    for (const auto& c : centers) {
      chain.push_back(out.disks.size());
      out.disks.push_back(Disk{lift(c), 1.0});
    }
    out.chains.push_back(std::move(chain));
  }
  for (std::size_t t = 0; t < triple_edges.size(); ++t) {
    const std::size_t v = out.triple_vertices[t];
    std::array<std::size_t, 3> members{};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t e = triple_edges[t][i];
      members[i] = g.edges[e].first == v ? out.chains[e].front() : out.chains[e].back();
    }
    out.triples.push_back(members);
  }

  // Classify every pair and check the spacing the reduction relies on.
  const std::size_t n = out.disks.size();
  std::vector<std::size_t> edge_of(n);
  std::vector<std::size_t> pos_of(n);
  for (std::size_t e = 0; e < out.chains.size(); ++e)
    for (std::size_t i = 0; i < out.chains[e].size(); ++i) {
      edge_of[out.chains[e][i]] = e;
      pos_of[out.chains[e][i]] = i;
    }
  auto end_vertex = [&](std::size_t disk) -> std::optional<std::size_t> {
    const auto e = edge_of[disk];
    if (pos_of[disk] == 0) return g.edges[e].first;
    if (pos_of[disk] + 1 == out.chains[e].size()) return g.edges[e].second;
    return std::nullopt;
  };
  std::vector<std::optional<std::size_t>> triple_vertex(n);
  for (std::size_t t = 0; t < out.triples.size(); ++t)
    for (std::size_t d : out.triples[t]) triple_vertex[d] = out.triple_vertices[t];
  auto describe = [&](std::size_t d) {
    return std::to_string(d) + " (edge " + std::to_string(edge_of[d]) + ", position " +
           std::to_string(pos_of[d]) + ")";
  };
  auto touches = [&](std::size_t e, std::size_t v) {
    return g.edges[e].first == v || g.edges[e].second == v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dist_objects(out.disks[i], out.disks[j]);
      if (!(d > 0)) throw InputError("gadget disks " + std::to_string(i) + " and " +
                                     std::to_string(j) + " overlap");
      const bool same_edge = edge_of[i] == edge_of[j];
      if (same_edge && pos_of[j] == pos_of[i] + 1) continue;
      const auto vi = end_vertex(i);
      const auto vj = end_vertex(j);
      if (!same_edge && vi && vj && *vi == *vj) continue;  // vertex neighbours
      double need = kFarApart;
      bool strict = true;
      for (const auto& [t, other] : {std::pair{i, j}, std::pair{j, i}}) {
        if (triple_vertex[t] && !same_edge && touches(edge_of[other], *triple_vertex[t])) {
          need = kTripleCrossDistance - 1e-3;
          strict = false;
        }
      }
      if (strict ? !(d > need) : !(d >= need))
        throw InputError("gadget disks " + describe(i) + " and " + describe(j) + " are " +
                         std::to_string(d) + " apart; need " + std::to_string(need) +
                         ". Spread the embedding out or change the disk counts");
    }
  }

  const int edges = static_cast<int>(g.edges.size());
  out.kappa = params.k + (static_cast<int>(n) - edges) / 2;
  return out;
}

}  // namespace kcn
