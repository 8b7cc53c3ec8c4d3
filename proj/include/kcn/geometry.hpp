#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace kcn {

/// Raised for malformed inputs and violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Absolute tolerance for equality decisions on distances.
inline constexpr double kTolerance = 1e-9;

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Vector2T = Eigen::Matrix<Scalar, 2, 1>;

/// Closed Euclidean ball. A disk is a ball whose center has two coordinates.
template <typename Scalar>
struct BallT {
  PointT<Scalar> center;
  Scalar radius = 0;
};

template <typename Scalar>
struct SegmentT {
  PointT<Scalar> p;
  PointT<Scalar> q;
};

/// Closed interval of the real line.
template <typename Scalar>
struct IntervalT {
  Scalar lo = 0;
  Scalar hi = 0;
};

template <typename Scalar>
using ObjectT = std::variant<BallT<Scalar>, SegmentT<Scalar>, IntervalT<Scalar>>;

using Point = PointT<double>;
using Vector2 = Vector2T<double>;
using Ball = BallT<double>;
using Disk = BallT<double>;
using Segment = SegmentT<double>;
using Interval = IntervalT<double>;
using Object = ObjectT<double>;

inline Point make_point(std::initializer_list<double> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

inline Disk make_disk(double x, double y, double radius) {
  return Disk{make_point({x, y}), radius};
}

template <typename Scalar>
Eigen::Index dimension(const ObjectT<Scalar>& obj) {
  return std::visit(
      [](const auto& o) -> Eigen::Index {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, BallT<Scalar>>) {
          return o.center.size();
        } else if constexpr (std::is_same_v<T, SegmentT<Scalar>>) {
          return o.p.size();
        } else {
          return 1;
        }
      },
      obj);
}

/// Throws InputError if the object breaks its own invariants.
template <typename Scalar>
void validate(const ObjectT<Scalar>& obj) {
  std::visit(
      [](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, BallT<Scalar>>) {
          if (o.center.size() == 0) throw InputError("ball with empty center");
          if (!o.center.allFinite() || !std::isfinite(o.radius))
            throw InputError("ball with non-finite data");
          if (o.radius < 0) throw InputError("ball with negative radius");
        } else if constexpr (std::is_same_v<T, SegmentT<Scalar>>) {
          if (o.p.size() == 0 || o.p.size() != o.q.size())
            throw InputError("segment endpoints of mismatched dimension");
          if (!o.p.allFinite() || !o.q.allFinite())
            throw InputError("segment with non-finite data");
          if (o.p == o.q) throw InputError("degenerate segment (p == q)");
        } else {
          if (!std::isfinite(o.lo) || !std::isfinite(o.hi))
            throw InputError("interval with non-finite data");
          if (o.lo > o.hi) throw InputError("interval with lo > hi");
        }
      },
      obj);
}

namespace detail {

// Every supported object is a (possibly degenerate) segment inflated by a
// radius. Distances reduce to segment-segment distances.
template <typename Scalar>
struct Capsule {
  PointT<Scalar> a;
  PointT<Scalar> b;
  Scalar radius;
};

template <typename Scalar>
Capsule<Scalar> as_capsule(const ObjectT<Scalar>& obj) {
  return std::visit(
      [](const auto& o) -> Capsule<Scalar> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, BallT<Scalar>>) {
          return {o.center, o.center, o.radius};
        } else if constexpr (std::is_same_v<T, SegmentT<Scalar>>) {
          return {o.p, o.q, Scalar(0)};
        } else {
          PointT<Scalar> lo(1), hi(1);
          lo[0] = o.lo;
          hi[0] = o.hi;
          return {lo, hi, Scalar(0)};
        }
      },
      obj);
}

template <typename Scalar>
Scalar point_segment_distance(const PointT<Scalar>& s, const PointT<Scalar>& a,
                              const PointT<Scalar>& b) {
  const PointT<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 == Scalar(0)) return (s - a).norm();
  const Scalar t = std::clamp((s - a).dot(ab) / len2, Scalar(0), Scalar(1));
  return (s - (a + t * ab)).norm();
}

// Closest points between segments [p1,q1] and [p2,q2] in any dimension,
// tolerating zero-length segments.
template <typename Scalar>
Scalar segment_segment_distance(const PointT<Scalar>& p1, const PointT<Scalar>& q1,
                                const PointT<Scalar>& p2, const PointT<Scalar>& q2) {
  const PointT<Scalar> d1 = q1 - p1;
  const PointT<Scalar> d2 = q2 - p2;
  const PointT<Scalar> r = p1 - p2;
  const Scalar a = d1.squaredNorm();
  const Scalar e = d2.squaredNorm();
  const Scalar f = d2.dot(r);
  if (a == Scalar(0) && e == Scalar(0)) return r.norm();
  if (a == Scalar(0)) return point_segment_distance<Scalar>(p1, p2, q2);
  if (e == Scalar(0)) return point_segment_distance<Scalar>(p2, p1, q1);
  const Scalar c = d1.dot(r);
  const Scalar b = d1.dot(d2);
  const Scalar denom = a * e - b * b;
  Scalar s = denom > Scalar(0) ? std::clamp((b * f - c * e) / denom, Scalar(0), Scalar(1))
                               : Scalar(0);
  Scalar t = (b * s + f) / e;
  if (t < Scalar(0)) {
    t = 0;
    s = std::clamp(-c / a, Scalar(0), Scalar(1));
  } else if (t > Scalar(1)) {
    t = 1;
    s = std::clamp((b - c) / a, Scalar(0), Scalar(1));
  }
  const Scalar best = ((p1 + s * d1) - (p2 + t * d2)).norm();
  // Parallel and near-parallel pairs: the endpoint distances are exact.
  return std::min({best, point_segment_distance<Scalar>(p1, p2, q2),
                   point_segment_distance<Scalar>(q1, p2, q2),
                   point_segment_distance<Scalar>(p2, p1, q1),
                   point_segment_distance<Scalar>(q2, p1, q1)});
}

}  // namespace detail

/// Set distance between two closed objects; zero iff they intersect.
template <typename Scalar>
Scalar dist_objects(const ObjectT<Scalar>& a, const ObjectT<Scalar>& b) {
  if (dimension(a) != dimension(b)) throw InputError("dimension mismatch between objects");
  // Ball pairs are the hot path.
  if (const auto* ba = std::get_if<BallT<Scalar>>(&a)) {
    if (const auto* bb = std::get_if<BallT<Scalar>>(&b)) {
      return std::max(Scalar(0), (ba->center - bb->center).norm() - ba->radius - bb->radius);
    }
  }
  const auto ca = detail::as_capsule(a);
  const auto cb = detail::as_capsule(b);
  const Scalar core = detail::segment_segment_distance<Scalar>(ca.a, ca.b, cb.a, cb.b);
  return std::max(Scalar(0), core - ca.radius - cb.radius);
}

template <typename Scalar>
Scalar dist_objects(const BallT<Scalar>& a, const BallT<Scalar>& b) {
  if (a.center.size() != b.center.size()) throw InputError("dimension mismatch between objects");
  return std::max(Scalar(0), (a.center - b.center).norm() - a.radius - b.radius);
}

/// Distance from a point to an object; zero iff the point lies in it.
template <typename Scalar>
Scalar dist_point_object(const PointT<Scalar>& s, const ObjectT<Scalar>& c) {
  if (s.size() != dimension(c)) throw InputError("dimension mismatch between point and object");
  if (const auto* ball = std::get_if<BallT<Scalar>>(&c)) {
    return std::max(Scalar(0), (s - ball->center).norm() - ball->radius);
  }
  const auto cap = detail::as_capsule(c);
  return std::max(Scalar(0), detail::point_segment_distance<Scalar>(s, cap.a, cap.b) - cap.radius);
}

template <typename Scalar>
Scalar dist_point_object(const PointT<Scalar>& s, const BallT<Scalar>& ball) {
  if (s.size() != ball.center.size())
    throw InputError("dimension mismatch between point and object");
  return std::max(Scalar(0), (s - ball.center).norm() - ball.radius);
}

/// True iff s lies in the inflated region c + B(r), i.e. B(s, r) meets c.
template <typename Scalar, typename Obj>
bool hits(const PointT<Scalar>& s, const Obj& c, Scalar r, Scalar slack = Scalar(0)) {
  return dist_point_object<Scalar>(s, c) <= r + slack;
}

/// Point of the shortest segment between two disjoint balls, halfway along it.
template <typename Scalar>
PointT<Scalar> gap_midpoint(const BallT<Scalar>& a, const BallT<Scalar>& b) {
  const PointT<Scalar> d = b.center - a.center;
  const Scalar len = d.norm();
  if (len == Scalar(0)) return a.center;
  const Scalar gap = std::max(Scalar(0), len - a.radius - b.radius);
  return a.center + (a.radius + gap / 2) * (d / len);
}

/// Locus of points equidistant to two disjoint planar disks.
///
/// The curve lives in the focal frame of the pair: `origin` is the midpoint of
/// the two centers, `axis` points from the first center to the second and
/// `normal` is `axis` rotated by +90 degrees. With c the half center distance,
/// a the half radius difference and b = sqrt(c^2 - a^2), the point at
/// parameter u is
///
///     origin + side * a * cosh(u) * axis + b * sinh(u) * normal,
///
/// which is the branch wrapped around the smaller disk (side = -1 when the
/// first disk is the smaller one). Equal radii give a = 0 and the curve is the
/// perpendicular bisector line. u = 0 is the vertex, the gap midpoint.
template <typename Scalar>
struct BisectorT {
  enum class Kind { line, hyperbola_branch };

  std::size_t first = 0;
  std::size_t second = 0;
  Kind kind = Kind::line;
  Vector2T<Scalar> origin = Vector2T<Scalar>::Zero();
  Vector2T<Scalar> axis = Vector2T<Scalar>::UnitX();
  Vector2T<Scalar> normal = Vector2T<Scalar>::UnitY();
  Scalar side = 1;
  Scalar a = 0;
  Scalar b = 0;
  Scalar c = 0;
  Scalar mean_radius = 0;

  PointT<Scalar> at(Scalar u) const {
    PointT<Scalar> x = origin + b * std::sinh(u) * normal;
    if (kind == Kind::hyperbola_branch) x += side * a * std::cosh(u) * axis;
    return x;
  }

  /// Common distance from at(u) to both defining disks; grows with |u|.
  Scalar distance_at(Scalar u) const { return c * std::cosh(u) - mean_radius; }

  PointT<Scalar> vertex() const { return at(Scalar(0)); }
};

using Bisector = BisectorT<double>;

template <typename Scalar>
BisectorT<Scalar> disk_bisector(const BallT<Scalar>& da, const BallT<Scalar>& db,
                                std::size_t first = 0, std::size_t second = 1) {
  if (da.center.size() != 2 || db.center.size() != 2)
    throw InputError("disk_bisector requires planar disks");
  if (dist_objects(da, db) <= Scalar(0))
    throw InputError("disk_bisector requires disjoint disks");
  BisectorT<Scalar> bis;
  bis.first = first;
  bis.second = second;
  const Vector2T<Scalar> ca = da.center.template head<2>();
  const Vector2T<Scalar> cb = db.center.template head<2>();
  const Vector2T<Scalar> d = cb - ca;
  bis.c = d.norm() / 2;
  bis.origin = (ca + cb) / 2;
  bis.axis = d.normalized();
  bis.normal = Vector2T<Scalar>(-bis.axis.y(), bis.axis.x());
  bis.mean_radius = (da.radius + db.radius) / 2;
  bis.a = std::abs(da.radius - db.radius) / 2;
  if (da.radius == db.radius) {
    bis.kind = BisectorT<Scalar>::Kind::line;
    bis.a = 0;
    bis.b = bis.c;
  } else {
    bis.kind = BisectorT<Scalar>::Kind::hyperbola_branch;
    bis.side = da.radius < db.radius ? Scalar(-1) : Scalar(1);
    bis.b = std::sqrt((bis.c - bis.a) * (bis.c + bis.a));
  }
  return bis;
}

template <typename Scalar>
struct BisectorEventT {
  Scalar u;
  Scalar distance;
};

using BisectorEvent = BisectorEventT<double>;

/// Parameters u at which the bisector point is as far from `third` as from the
/// defining disks, sorted by u, each with that common distance.
///
/// Squaring |x(u) - c3| = L(u) + r3 cancels every quadratic term in cosh/sinh,
/// leaving A cosh u + B sinh u + C = 0, a quadratic in w = exp(u). Roots whose
/// common distance exceeds `max_distance` are dropped.
template <typename Scalar>
std::vector<BisectorEventT<Scalar>> equidistant_point_on_bisector(
    const BisectorT<Scalar>& bis, const BallT<Scalar>& third,
    Scalar max_distance = std::numeric_limits<Scalar>::infinity()) {
  if (third.center.size() != 2) throw InputError("equidistant_point_on_bisector needs a planar disk");
  const Vector2T<Scalar> delta = bis.origin - third.center.template head<2>();
  const Scalar k = third.radius - bis.mean_radius;
  const Scalar p = bis.kind == BisectorT<Scalar>::Kind::hyperbola_branch
                       ? bis.side * bis.a * delta.dot(bis.axis)
                       : Scalar(0);
  const Scalar q = bis.b * delta.dot(bis.normal);
  const Scalar A = 2 * (p - bis.c * k);
  const Scalar B = 2 * q;
  const Scalar C = delta.squaredNorm() - bis.c * bis.c + bis.a * bis.a - k * k;

  // (A + B) w^2 + 2 C w + (A - B) = 0
  const Scalar qa = A + B;
  const Scalar qb = 2 * C;
  const Scalar qc = A - B;
  const Scalar scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
  std::vector<Scalar> ws;
  if (scale == Scalar(0)) return {};
  if (std::abs(qa) <= scale * Scalar(1e-14)) {
    if (qb != Scalar(0)) ws.push_back(-qc / qb);
  } else {
    const Scalar disc = qb * qb - 4 * qa * qc;
    if (disc >= Scalar(0)) {
      const Scalar sq = std::sqrt(disc);
      const Scalar t = -(qb + std::copysign(sq, qb)) / 2;
      if (t != Scalar(0)) {
        ws.push_back(t / qa);
        ws.push_back(qc / t);
      } else {
        ws.push_back(Scalar(0));
      }
    }
  }

  auto residual = [&](Scalar u) {
    return (bis.at(u) - third.center).norm() - third.radius - bis.distance_at(u);
  };

  std::vector<BisectorEventT<Scalar>> out;
  for (Scalar w : ws) {
    if (!(w > Scalar(0)) || !std::isfinite(w)) continue;
    Scalar u = std::log(w);
    // Squaring admits roots with |x - c3| = -(L + r3); reject them.
    if (bis.c * std::cosh(u) + k < Scalar(0)) continue;
    // A few Newton steps clean up cancellation in the closed form.
    for (int it = 0; it < 4; ++it) {
      const Scalar g = residual(u);
      const Scalar h = Scalar(1e-7) * std::max(Scalar(1), std::abs(u));
      const Scalar dg = (residual(u + h) - residual(u - h)) / (2 * h);
      if (!(std::abs(dg) > Scalar(0))) break;
      const Scalar next = u - g / dg;
      if (!std::isfinite(next) || std::abs(residual(next)) >= std::abs(g)) break;
      u = next;
    }
    const Scalar dist = bis.distance_at(u);
    if (std::abs(residual(u)) > Scalar(1e-9) * std::max(Scalar(1), dist)) continue;
    if (dist > max_distance) continue;
    bool dup = false;
    for (const auto& e : out) dup = dup || std::abs(e.u - u) <= Scalar(1e-12);
    if (!dup) out.push_back({u, dist});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.u < y.u; });
  return out;
}

}  // namespace kcn
