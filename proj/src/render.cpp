#include "motgrp/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "motgrp/error.hpp"

namespace motgrp {

namespace {

using Vec = std::pair<Rational, Rational>;

constexpr std::array<const char*, 8> kPalette = {"#1b6ca8", "#c0392b", "#2e8b57", "#8e44ad",
                                                 "#d35400", "#16a085", "#7f8c8d", "#b7950b"};

const Rational kMargin(20);

class Svg {
 public:
  Svg(Rational width, Rational height, int precision)
      : width_(std::move(width)), height_(std::move(height)), precision_(precision) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width_)
        << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_)
        << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
        << "\" fill=\"#ffffff\"/>\n";
  }

  std::string num(const Rational& v) const { return to_decimal(v, precision_); }

  void polyline(const std::vector<Vec>& pts, std::string_view stroke, std::string_view width) {
    if (pts.size() < 2) return;
    os_ << "<polyline points=\"" << points(pts) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void polygon(const std::vector<Vec>& pts, std::string_view fill) {
    os_ << "<polygon points=\"" << points(pts) << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }

  void line(const Vec& a, const Vec& b, std::string_view stroke, std::string_view width) {
    os_ << "<line x1=\"" << num(a.first) << "\" y1=\"" << num(a.second) << "\" x2=\"" << num(b.first)
        << "\" y2=\"" << num(b.second) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\"/>\n";
  }

  void circle(const Vec& c, const Rational& r, std::string_view fill, std::string_view stroke) {
    os_ << "<circle cx=\"" << num(c.first) << "\" cy=\"" << num(c.second) << "\" r=\"" << num(r)
        << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
  }

  void rect(const Vec& corner, const Rational& w, const Rational& h, std::string_view stroke) {
    os_ << "<rect x=\"" << num(corner.first) << "\" y=\"" << num(corner.second) << "\" width=\""
        << num(w) << "\" height=\"" << num(h) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
  }

  void text(const Vec& at, std::string_view body) {
    os_ << "<text x=\"" << num(at.first) << "\" y=\"" << num(at.second)
        << "\" font-family=\"monospace\" font-size=\"10\">" << body << "</text>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  std::string points(const std::vector<Vec>& pts) const {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += num(pts[i].first) + "," + num(pts[i].second);
    }
    return out;
  }

  Rational width_;
  Rational height_;
  int precision_;
  std::ostringstream os_;
};

// Maps ambient x in [x0, x1] and t in [0, 1] onto the plot area.
struct Plot {
  Rational x0, x1;
  Rational left, top, width, height;

  Rational px(const Rational& x) const { return left + (x - x0) / (x1 - x0) * width; }
  Rational py(const Rational& t) const { return top + (1 - t) * height; }
  Vec at(const Rational& x, const Rational& t) const { return {px(x), py(t)}; }
};

Plot full_plot(const RenderSpec& spec, Rational x0, Rational x1) {
  return {std::move(x0), std::move(x1), kMargin, kMargin, Rational(spec.width) - 2 * kMargin,
          Rational(spec.height) - 2 * kMargin};
}

std::vector<Rational> grid_points(int grid, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  const Integer first = floor(lo * grid);
  for (Integer k = first;; ++k) {
    const Rational x = make_rational(k, Integer(grid));
    if (x > hi) break;
    if (x >= lo) out.push_back(x);
  }
  return out;
}

std::pair<Rational, Rational> window(Ambient a) {
  if (a == Ambient::Line) return {Rational(-1), Rational(2)};
  return {Rational(0), Rational(1)};
}

void draw_worldline(Svg& svg, const Plot& plot, const WorldlineI& w, const RenderSpec& spec) {
  for (const WorldlineComponent& c : w.components()) {
    if (c.is_point()) continue;
    std::vector<Vec> poly;
    for (const auto& v : c.lower.vertices()) poly.push_back(plot.at(v.x, v.t));
    const auto& up = c.upper.vertices();
    for (auto it = up.rbegin(); it != up.rend(); ++it) poly.push_back(plot.at(it->x, it->t));
    svg.polygon(poly, spec.fill);
  }
  for (const WorldlineComponent& c : w.components()) {
    for (const Arc* arc : {&c.lower, &c.upper}) {
      if (c.is_point() && arc == &c.upper) break;
      std::vector<Vec> poly;
      for (const auto& v : arc->vertices()) poly.push_back(plot.at(v.x, v.t));
      svg.polyline(poly, spec.stroke, "2");
    }
  }
}

std::string fraction_label(const Rational& t) { return "t=" + to_string(t); }

}  // namespace

std::string_view to_string(RenderKind k) {
  switch (k) {
    case RenderKind::Movie: return "movie";
    case RenderKind::Flare: return "flare";
    case RenderKind::Worldline: return "worldline";
    case RenderKind::CircleFlare: return "circle-flare";
    case RenderKind::BraidDiagram: return "braid";
  }
  return "?";
}

RenderKind parse_render_kind(std::string_view text) {
  for (RenderKind k : {RenderKind::Movie, RenderKind::Flare, RenderKind::Worldline,
                       RenderKind::CircleFlare, RenderKind::BraidDiagram}) {
    if (to_string(k) == text) return k;
  }
  fail(ErrorKind::UnsupportedKind, "unknown render kind '" + std::string(text) + "'");
}

void RenderSpec::validate() const {
  if (kind == RenderKind::Movie && frames < 2) fail(ErrorKind::InvalidValue, "a movie needs at least 2 frames");
  if (grid < 1) fail(ErrorKind::InvalidValue, "grid density must be at least 1");
  if (width < 64 || height < 64) fail(ErrorKind::InvalidValue, "canvas must be at least 64x64");
  if (precision < 0 || precision > 12) fail(ErrorKind::InvalidValue, "precision must be in 0..12");
}

std::string render_movie(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec) {
  spec.validate();
  if (n && f.ambient() != Ambient::Interval) fail(ErrorKind::AmbientMismatch, "subset of I, flow not on I");
  const Rational panel(40);
  const Rational height = panel * spec.frames + 2 * kMargin;
  Svg svg(spec.width, height, spec.precision);
  const auto [lo, hi] = window(f.ambient());
  const Rational left = kMargin + 40;
  const Rational width = Rational(spec.width) - left - kMargin;
  auto px = [&](const Rational& x) -> Rational { return left + (x - lo) / (hi - lo) * width; };
  const auto xs = grid_points(spec.grid, lo, f.ambient() == Ambient::CircleLift ? hi - make_rational(1, spec.grid) : hi);
  for (int i = 0; i < spec.frames; ++i) {
    const Rational t = make_rational(i, spec.frames - 1);
    // Panel 0 at the bottom.
    const Rational base = height - kMargin - panel * i - panel / 2;
    const PLHomeo h = f.at(t);
    svg.text({kMargin, base + 3}, fraction_label(t));
    svg.line({px(lo), base}, {px(hi), base}, spec.stroke, "1");
    for (const Rational& x : xs) {
      Rational y = h(x);
      if (f.ambient() == Ambient::CircleLift) y = frac(y);
      if (y < lo || y > hi) continue;
      svg.line({px(y), base - 6}, {px(y), base + 6}, spec.stroke, "1");
    }
    if (n) {
      for (const Component1D& c : image(h, n->components())) {
        if (c.is_point()) {
          svg.circle({px(c.lo), base}, 4, spec.fill, spec.stroke);
        } else {
          svg.line({px(c.lo), base}, {px(c.hi), base}, spec.fill, "6");
        }
      }
    }
  }
  return svg.finish();
}

std::string render_movie(const StrandSet& s, const RenderSpec& spec) {
  spec.validate();
  const Rational side(160);
  const Rational gap(10);
  const Rational width = (side + gap) * spec.frames + gap;
  const Rational height = side + 2 * kMargin;
  Svg svg(width, height, spec.precision);
  for (int i = 0; i < spec.frames; ++i) {
    const Rational t = make_rational(i, spec.frames - 1);
    const Rational left = gap + (side + gap) * i;
    svg.rect({left, kMargin}, side, side, spec.stroke);
    svg.text({left, kMargin - 6}, fraction_label(t));
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Point2 p = s.strands()[j].at(t);
      svg.circle({left + p.x * side, kMargin + (1 - p.y) * side}, 4, kPalette[j % kPalette.size()],
                 spec.stroke);
    }
  }
  return svg.finish();
}

std::string render_flare(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec) {
  spec.validate();
  if (f.ambient() != Ambient::Interval) fail(ErrorKind::AmbientMismatch, "flare schematics are drawn on I");
  Svg svg(spec.width, spec.height, spec.precision);
  const Plot plot = full_plot(spec, 0, 1);
  if (n) draw_worldline(svg, plot, worldline(f, *n), spec);
  for (const Rational& t : grid_points(spec.grid, 0, 1)) {
    svg.line(plot.at(0, t), plot.at(1, t), spec.stroke, "0.5");
  }
  for (const Rational& x : grid_points(spec.grid, 0, 1)) {
    std::vector<Vec> poly;
    for (std::size_t i = 0; i < f.key_times().size(); ++i) {
      poly.push_back(plot.at(f.frames()[i](x), f.key_times()[i]));
    }
    svg.polyline(poly, spec.stroke, "0.5");
  }
  svg.rect({plot.left, plot.top}, plot.width, plot.height, spec.stroke);
  return svg.finish();
}

std::string render_circle_flare(const PLFlow& f, const RenderSpec& spec) {
  spec.validate();
  if (f.ambient() != Ambient::CircleLift) fail(ErrorKind::AmbientMismatch, "circle flare needs a circle flow");
  Svg svg(spec.width, spec.height, spec.precision);
  const Rational cx = Rational(spec.width) / 2;
  const Rational cy = Rational(spec.height) / 2;
  const Rational radius = Rational(std::min(spec.width, spec.height)) / 2 - kMargin;
  auto at = [&](const Rational& u, const Rational& t) -> Vec {
    const Rational r = radius * (1 - t / 2);
    const double angle = 2 * std::numbers::pi * frac(u).get_d();
    return {cx + r * Rational(std::cos(angle)), cy - r * Rational(std::sin(angle))};
  };
  for (const Rational& t : grid_points(spec.grid, 0, 1)) {
    svg.circle({cx, cy}, radius * (1 - t / 2), "none", spec.stroke);
  }
  // Between key times a radial curve is linear in (angle, radius), so it is
  // sampled rather than drawn with exact vertices.
  constexpr int kSteps = 16;
  for (const Rational& x : grid_points(spec.grid, 0, 1 - make_rational(1, spec.grid))) {
    std::vector<Vec> poly;
    const auto& ts = f.key_times();
    poly.push_back(at(x, 0));
    for (std::size_t i = 1; i < ts.size(); ++i) {
      for (int k = 1; k <= kSteps; ++k) {
        const Rational t = ts[i - 1] + (ts[i] - ts[i - 1]) * make_rational(k, kSteps);
        poly.push_back(at(f.eval(t, x), t));
      }
    }
    svg.polyline(poly, spec.stroke, "0.5");
  }
  return svg.finish();
}

std::string render_worldline(const WorldlineI& w, const RenderSpec& spec) {
  spec.validate();
  Rational lo = 0;
  Rational hi = 1;
  for (const auto& c : w.components()) {
    for (const Arc* arc : {&c.lower, &c.upper}) {
      for (const auto& v : arc->vertices()) {
        lo = std::min(lo, v.x);
        hi = std::max(hi, v.x);
      }
    }
  }
  Svg svg(spec.width, spec.height, spec.precision);
  const Plot plot = full_plot(spec, lo, hi);
  draw_worldline(svg, plot, w, spec);
  svg.rect({plot.left, plot.top}, plot.width, plot.height, spec.stroke);
  return svg.finish();
}

std::string render_braid_diagram(const StrandSet& s, const RenderSpec& spec) {
  spec.validate();
  std::optional<Extraction> ex;
  try {
    ex = extract(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateProjection) throw;
  }
  const Rational shear = ex ? ex->shear : Rational(0);
  Svg svg(spec.width, spec.height, spec.precision);
  const Plot plot = full_plot(spec, 0, 1 + shear);
  const Rational half_gap = make_rational(1, 60);

  std::vector<Rational> grid;
  for (const Strand& st : s.strands()) grid.insert(grid.end(), st.times.begin(), st.times.end());
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<std::pair<Rational, Rational>> gaps;
    if (ex) {
      for (const CrossingEvent& e : ex->events) {
        const std::size_t behind = e.generator > 0 ? e.right_strand : e.left_strand;
        if (behind == j) gaps.push_back({e.time - half_gap, e.time + half_gap});
      }
    }
    std::vector<Rational> ts = grid;
    for (const auto& [a, b] : gaps) {
      if (a > 0) ts.push_back(a);
      if (b < 1) ts.push_back(b);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    const Strand& st = s.strands()[j];
    auto point = [&](const Rational& t) {
      const Point2 p = st.at(t);
      return plot.at(p.x + shear * p.y, t);
    };
    auto hidden = [&](const Rational& t) {
      return std::any_of(gaps.begin(), gaps.end(), [&](const auto& g) { return g.first < t && t < g.second; });
    };
    const char* colour = kPalette[j % kPalette.size()];
    std::vector<Vec> run;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (hidden((ts[i] + ts[i + 1]) / 2)) {
        svg.polyline(run, colour, "2");
        run.clear();
        continue;
      }
      if (run.empty()) run.push_back(point(ts[i]));
      run.push_back(point(ts[i + 1]));
    }
    svg.polyline(run, colour, "2");
  }
  svg.rect({plot.left, plot.top}, plot.width, plot.height, spec.stroke);
  return svg.finish();
}

std::string render(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec) {
  switch (spec.kind) {
    case RenderKind::Movie: return render_movie(f, n, spec);
    case RenderKind::Flare: return render_flare(f, n, spec);
    case RenderKind::CircleFlare: return render_circle_flare(f, spec);
    case RenderKind::Worldline: {
      if (n) return render_worldline(worldline(f, *n), spec);
      const auto [lo, hi] = window(f.ambient());
      return render_worldline(worldline(f, grid_points(spec.grid, lo, hi)), spec);
    }
    case RenderKind::BraidDiagram: break;
  }
  fail(ErrorKind::UnsupportedKind, "braid diagrams are drawn from strand sets");
}

std::string render(const StrandSet& s, const RenderSpec& spec) {
  switch (spec.kind) {
    case RenderKind::Movie: return render_movie(s, spec);
    case RenderKind::Worldline:
    case RenderKind::BraidDiagram: return render_braid_diagram(s, spec);
    case RenderKind::Flare:
    case RenderKind::CircleFlare: break;
  }
  fail(ErrorKind::UnsupportedKind, std::string(to_string(spec.kind)) + " is drawn from flows, not strand sets");
}

}  // namespace motgrp
