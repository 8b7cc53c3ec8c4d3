#include "kcn/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace kcn {
namespace {

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(double x, double y, double pad = 0) {
    xmin = std::min(xmin, x - pad);
    xmax = std::max(xmax, x + pad);
    ymin = std::min(ymin, y - pad);
    ymax = std::max(ymax, y + pad);
  }
};

double coord(const Point& p, Eigen::Index i) { return i < p.size() ? p[i] : 0.0; }

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
  Box box;
  for (const auto& obj : inst.objects) {
    if (const auto* b = std::get_if<Ball>(&obj)) box.add(coord(b->center, 0), coord(b->center, 1), b->radius);
    else if (const auto* s = std::get_if<Segment>(&obj)) {
      box.add(coord(s->p, 0), coord(s->p, 1));
      box.add(coord(s->q, 0), coord(s->q, 1));
    } else {
      const auto& iv = std::get<Interval>(obj);
      box.add(iv.lo, 0);
      box.add(iv.hi, 0);
    }
  }
  const double r = sol ? sol->radius : 0;
  if (sol)
    for (const auto& c : sol->centers) box.add(coord(c, 0), coord(c, 1), r);
  if (!(box.xmax >= box.xmin)) box.add(0, 0, 1);
  const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-9});
  const double pad = 0.05 * span;
  const double scale = 800 / (span + 2 * pad);
  const double width = (box.xmax - box.xmin + 2 * pad) * scale;
  const double height = (box.ymax - box.ymin + 2 * pad) * scale;
  auto X = [&](double x) { return (x - box.xmin + pad) * scale; };
  auto Y = [&](double y) { return (box.ymax + pad - y) * scale; };
  const double stroke = 1.5;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& obj : inst.objects) {
    if (const auto* b = std::get_if<Ball>(&obj)) {
      os << "<circle cx=\"" << X(coord(b->center, 0)) << "\" cy=\"" << Y(coord(b->center, 1))
         << "\" r=\"" << b->radius * scale
         << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"" << stroke
         << "\"/>\n";
    } else if (const auto* s = std::get_if<Segment>(&obj)) {
      os << "<line x1=\"" << X(coord(s->p, 0)) << "\" y1=\"" << Y(coord(s->p, 1)) << "\" x2=\""
         << X(coord(s->q, 0)) << "\" y2=\"" << Y(coord(s->q, 1))
         << "\" stroke=\"#3182bd\" stroke-width=\"3\"/>\n";
    } else {
      const auto& iv = std::get<Interval>(obj);
      os << "<line x1=\"" << X(iv.lo) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(iv.hi) << "\" y2=\""
         << Y(0) << "\" stroke=\"#3182bd\" stroke-width=\"6\" stroke-opacity=\"0.5\"/>\n";
    }
  }
  if (sol) {
    for (const auto& c : sol->centers) {
      const double cx = X(coord(c, 0));
      const double cy = Y(coord(c, 1));
      if (r > 0)
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r * scale
           << "\" fill=\"none\" stroke=\"#e6550d\" stroke-dasharray=\"6 4\" stroke-width=\""
           << stroke << "\"/>\n";
      os << "<path d=\"M" << cx - 5 << ' ' << cy - 5 << " L" << cx + 5 << ' ' << cy + 5 << " M"
         << cx - 5 << ' ' << cy + 5 << " L" << cx + 5 << ' ' << cy - 5
         << "\" stroke=\"#e6550d\" stroke-width=\"2\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kcn
