#include "inthull/cli/svg.hpp"

#include <algorithm>
#include <sstream>

#include "inthull/oracle.hpp"

namespace inthull::cli {

namespace {

struct Box {
  Integer xmin = 0, xmax = 1, ymin = 0, ymax = 1;
};

Box padded_box(const std::optional<PolySet2>& set, const HullResult& hull) {
  std::vector<Point2> pts;
  if (set) pts = set->vertices();
  for (const IntPoint2& p : hull.points) pts.push_back(p.to_point());
  Box box;
  if (pts.empty()) return box;
  Rational xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point2& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  box.xmin = floor(xmin) - 1;
  box.xmax = ceil(xmax) + 1;
  box.ymin = floor(ymin) - 1;
  box.ymax = ceil(ymax) + 1;
  return box;
}

std::string zs(const Integer& z) { return to_string(z); }

std::string num(const Rational& q) {
  std::string s = to_decimal(q, 4);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

// SVG y grows downwards.
std::string xy(const Point2& p) { return num(p.x) + "," + num(-p.y); }

std::string points_attr(const std::vector<Point2>& pts) {
  std::string out;
  for (const Point2& p : pts) {
    if (!out.empty()) out += ' ';
    out += xy(p);
  }
  return out;
}

std::string outline(const std::vector<Point2>& vs, const std::string& attrs) {
  if (vs.size() == 1) {
    return "<circle " + attrs + " cx=\"" + num(vs[0].x) + "\" cy=\"" + num(-vs[0].y) + "\" r=\"0.12\"/>";
  }
  const char* tag = vs.size() == 2 ? "polyline" : "polygon";
  return std::string("<") + tag + " " + attrs + " points=\"" + points_attr(vs) + "\"/>";
}

}  // namespace

std::string render_svg(const std::optional<PolySet2>& set, const HullResult& hull, const Trace* trace) {
  const Box box = padded_box(set, hull);
  const Integer w = box.xmax - box.xmin;
  const Integer h = box.ymax - box.ymin;
  const Integer longest = std::max(w, h);
  const Rational px_per_unit = make_rational(Integer(600), longest);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(px_per_unit * Rational(w))
     << "\" height=\"" << num(px_per_unit * Rational(h)) << "\" viewBox=\"" << zs(box.xmin) << ' '
     << zs(-box.ymax) << ' ' << zs(w) << ' ' << zs(h) << "\">\n";
  os << "<rect x=\"" << zs(box.xmin) << "\" y=\"" << zs(-box.ymax) << "\" width=\""
     << zs(w) << "\" height=\"" << zs(h) << "\" fill=\"white\"/>\n";

  const Integer cells = (w + 1) * (h + 1);
  const bool lattice = cells <= kPlotCellBudget;
  if (lattice) {
    os << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"0.02\">\n";
    for (Integer x = box.xmin; x <= box.xmax; ++x) {
      os << "<line x1=\"" << zs(x) << "\" y1=\"" << zs(-box.ymax) << "\" x2=\"" << zs(x)
         << "\" y2=\"" << zs(-box.ymin) << "\"/>\n";
    }
    for (Integer y = box.ymin; y <= box.ymax; ++y) {
      os << "<line x1=\"" << zs(box.xmin) << "\" y1=\"" << zs(-y) << "\" x2=\""
         << zs(box.xmax) << "\" y2=\"" << zs(-y) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (!hull.empty()) {
    std::vector<Point2> hv;
    for (const IntPoint2& p : hull.points) hv.push_back(p.to_point());
    if (hv.size() >= 3) {
      os << outline(hv, "class=\"hull\" fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"#3182bd\" stroke-width=\"0.04\"")
         << "\n";
    } else if (hv.size() == 2) {
      os << outline(hv, "class=\"hull\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"0.08\"") << "\n";
    }
  }

  if (set) {
    os << outline(set->vertices(), "class=\"set\" fill=\"none\" stroke=\"black\" stroke-width=\"0.04\"") << "\n";
  }

  if (trace) {
    for (const PolySet2& region : trace->regions) {
      os << outline(region.vertices(),
                    "class=\"region\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"0.03\" stroke-dasharray=\"0.1 0.1\"")
         << "\n";
    }
    for (const Segment& s : trace->chords) {
      os << "<line class=\"chord\" x1=\"" << num(s.p.x) << "\" y1=\"" << num(-s.p.y) << "\" x2=\"" << num(s.q.x)
         << "\" y2=\"" << num(-s.q.y) << "\" stroke=\"#de2d26\" stroke-width=\"0.04\" stroke-dasharray=\"0.2 0.1\"/>\n";
    }
  }

  if (lattice) {
    std::vector<IntPoint2> inside;
    if (set) inside = oracle::enumerate_integer_points(*set);
    for (Integer x = box.xmin; x <= box.xmax; ++x) {
      for (Integer y = box.ymin; y <= box.ymax; ++y) {
        const IntPoint2 p{x, y};
        const bool in = std::binary_search(inside.begin(), inside.end(), p);
        os << "<circle class=\"" << (in ? "lattice-in" : "lattice-out") << "\" cx=\"" << zs(x)
           << "\" cy=\"" << zs(-y) << "\" r=\"" << (in ? "0.1" : "0.04") << "\" fill=\""
           << (in ? "black" : "#aaaaaa") << "\"/>\n";
      }
    }
  }

  // Hull vertices on top, so point and segment hulls show as dots.
  for (const IntPoint2& p : hull.points) {
    os << "<circle class=\"hull-vertex\" cx=\"" << zs(p.x) << "\" cy=\"" << zs(-p.y)
       << "\" r=\"0.14\" fill=\"#3182bd\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace inthull::cli
