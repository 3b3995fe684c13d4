#include "pierce/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pierce {

namespace {

struct Style {
  const char* fill;
  const char* stroke;
};

Style style_of(Role r) {
  switch (r) {
    case Role::P:
    case Role::B: return {"black", "black"};
    case Role::G: return {"gray", "black"};
    case Role::R: return {"white", "black"};
  }
  return {"black", "black"};
}

class Canvas {
 public:
  explicit Canvas(double size) : size_(size) { os_ << std::fixed << std::setprecision(2); }

  void line(double x1, double y1, double x2, double y2, const char* stroke, double width, bool dashed = false) {
    os_ << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
        << stroke << "\" stroke-width=\"" << width << "\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  void circle(double cx, double cy, double r, const char* fill, const char* stroke, bool dashed = false) {
    os_ << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill << "\" stroke=\""
        << stroke << "\" stroke-width=\"1.2\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  void title(const std::string& t) { os_ << "  <title>" << t << "</title>\n"; }

  std::string finish() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(0);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size_ << "\" height=\"" << size_
        << "\" viewBox=\"0 0 " << size_ << " " << size_ << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << os_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double size_;
  std::ostringstream os_;
};

std::string render_angle(const AngleConfig& cfg, const std::string& name, const PlotOptions& o) {
  Canvas cv(o.size);
  if (!name.empty()) cv.title(name);
  const double c = o.size / 2, rad = o.size * 0.34, ring = o.size * 0.45, small = o.size * 0.012;
  auto at = [&](const AngleElem& e) {
    double a = 2 * std::numbers::pi * e.turns(o.theta);
    return std::pair{c + rad * std::cos(a), c - rad * std::sin(a)};
  };
  cv.circle(c, c, rad, "none", "black");
  cv.circle(c, c, ring, "none", "silver", true);
  auto chord = [&](const AngleElem& a, const AngleElem& b) {
    auto [x1, y1] = at(a);
    auto [x2, y2] = at(b);
    cv.line(x1, y1, x2, y2, "silver", 0.6);
  };
  if (cfg.bipartite()) {
    for (const auto& b : cfg[Role::B])
      for (const auto& g : cfg[Role::G]) chord(b, g);
  } else {
    const auto& p = cfg[Role::P];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) chord(p[i], p[j]);
  }
  for (const auto& d : cfg.directions) {
    double a = std::numbers::pi * d.turns(o.theta) + std::numbers::pi / 2;
    auto s = style_of(Role::R);
    cv.circle(c + ring * std::cos(a), c - ring * std::sin(a), d.theta_coeff() == 0 ? small : 1.8 * small, s.fill,
              s.stroke);
  }
  for (const auto& [role, pts] : cfg.roles) {
    auto s = style_of(role);
    for (const auto& e : pts) {
      auto [x, y] = at(e);
      cv.circle(x, y, e.theta_coeff() == 0 ? small : 1.8 * small, s.fill, s.stroke);
    }
  }
  return cv.finish();
}

std::string render_planar(const PointConfig<Rational>& cfg, const std::string& name, const PlotOptions& o) {
  std::vector<std::pair<double, double>> finite;
  for (const auto& [role, pts] : cfg.roles())
    for (const auto& p : pts)
      if (!p.at_infinity()) {
        auto [x, y] = p.affine_coords();
        finite.emplace_back(to_double(x), to_double(y));
      }
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  if (!finite.empty()) {
    x0 = x1 = finite[0].first;
    y0 = y1 = finite[0].second;
    for (auto [x, y] : finite) {
      x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  double span = std::max({x1 - x0, y1 - y0, 1.0});
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  const double inner = o.size * 0.36, ring = o.size * 0.45, mid = o.size / 2, small = o.size * 0.014;
  const double scale = 2 * inner / span;
  auto map = [&](double x, double y) { return std::pair{mid + (x - cx) * scale, mid - (y - cy) * scale}; };
  auto place = [&](const ProjPoint<Rational>& p) {
    if (!p.at_infinity()) {
      auto [x, y] = p.affine_coords();
      return map(to_double(x), to_double(y));
    }
    double dx = to_double(p.X()), dy = to_double(p.Y()), len = std::hypot(dx, dy);
    return std::pair{mid + ring * dx / len, mid - ring * dy / len};
  };

  Canvas cv(o.size);
  if (!name.empty()) cv.title(name);
  bool any_infinite = false;
  for (const auto& [role, pts] : cfg.roles())
    for (const auto& p : pts) any_infinite |= p.at_infinity();
  if (any_infinite) cv.circle(mid, mid, ring, "none", "silver", true);

  auto draw_line = [&](const ProjPoint<Rational>& a, const ProjPoint<Rational>& b) {
    if (a.at_infinity() && b.at_infinity()) return;
    const auto& fin = a.at_infinity() ? b : a;
    auto [fx, fy] = fin.affine_coords();
    double px = to_double(fx), py = to_double(fy), dx, dy;
    const auto& other = a.at_infinity() ? a : b;
    if (other.at_infinity()) {
      dx = to_double(other.X()), dy = to_double(other.Y());
    } else {
      auto [ox, oy] = other.affine_coords();
      dx = to_double(ox) - px, dy = to_double(oy) - py;
    }
    double len = std::hypot(dx, dy), far = 4 * span;
    auto [u1, v1] = map(px - far * dx / len, py - far * dy / len);
    auto [u2, v2] = map(px + far * dx / len, py + far * dy / len);
    cv.line(u1, v1, u2, v2, "silver", 0.6);
  };
  if (cfg.has(Role::B)) {
    for (const auto& b : cfg[Role::B])
      for (const auto& g : cfg[Role::G]) draw_line(b, g);
  } else {
    auto p = cfg[Role::P];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) draw_line(p[i], p[j]);
  }
  for (Role role : {Role::R, Role::P, Role::B, Role::G}) {
    auto s = style_of(role);
    for (const auto& p : cfg[role]) {
      auto [x, y] = place(p);
      cv.circle(x, y, small, s.fill, s.stroke);
    }
  }
  return cv.finish();
}

}  // namespace

std::string render_svg(const ConfigDocument& doc, const PlotOptions& opts) {
  const std::string name = doc.name.value_or("");
  if (const auto* a = std::get_if<AngleConfig>(&doc.payload)) {
    if (a->roles.empty() || std::all_of(a->roles.begin(), a->roles.end(), [](const auto& kv) { return kv.second.empty(); })) {
      throw UsageError("nothing to plot: the configuration is empty");
    }
    return render_angle(*a, name, opts);
  }
  if (const auto* p = std::get_if<PointConfig<Rational>>(&doc.payload)) {
    if (p->roles().empty()) throw UsageError("nothing to plot: the configuration is empty");
    return render_planar(*p, name, opts);
  }
  throw UsageError("plot needs a planar configuration over Q or an angle configuration");
}

}  // namespace pierce
