#include "motgrp/pl_homeo.hpp"

#include <algorithm>
#include <sstream>

#include "motgrp/error.hpp"

namespace motgrp {

std::string_view to_string(Ambient a) {
  switch (a) {
    case Ambient::Interval: return "interval";
    case Ambient::Line: return "line";
    case Ambient::CircleLift: return "circle";
  }
  return "interval";
}

Ambient parse_ambient(std::string_view text) {
  if (text == "interval") return Ambient::Interval;
  if (text == "line") return Ambient::Line;
  if (text == "circle") return Ambient::CircleLift;
  fail(ErrorKind::ParseError, "unknown ambient '" + std::string(text) + "'");
}

namespace {

Rational lerp_segment(const Knot& a, const Knot& b, const Rational& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

bool collinear(const Knot& p, const Knot& q, const Knot& r) {
  return (q.y - p.y) * (r.x - q.x) == (r.y - q.y) * (q.x - p.x);
}

// Index i of the segment [knots[i], knots[i+1]] used to evaluate at x,
// extrapolating with the end segments.
std::size_t segment_for(const std::vector<Knot>& knots, const Rational& x) {
  auto it = std::upper_bound(knots.begin(), knots.end(), x,
                             [](const Rational& v, const Knot& k) { return v < k.x; });
  std::size_t i = static_cast<std::size_t>(it - knots.begin());
  if (i == 0) return 0;
  return std::min(i - 1, knots.size() - 2);
}

std::vector<Knot> canonical_knots(Ambient ambient, std::vector<Knot> knots) {
  std::vector<Knot> kept;
  kept.reserve(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i > 0 && i + 1 < knots.size() && collinear(kept.back(), knots[i], knots[i + 1])) continue;
    kept.push_back(knots[i]);
  }
  if (ambient == Ambient::Line) {
    if (kept.size() == 2) {
      const Knot a = kept[0];
      const Knot b = kept[1];
      kept = {Knot{0, lerp_segment(a, b, 0)}, Knot{1, lerp_segment(a, b, 1)}};
    } else {
      const std::size_t m = kept.size();
      const Rational left = kept[1].x - 1;
      const Rational right = kept[m - 2].x + 1;
      kept.front() = Knot{left, lerp_segment(kept[0], kept[1], left)};
      kept.back() = Knot{right, lerp_segment(kept[m - 2], kept[m - 1], right)};
    }
  }
  return kept;
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

PLHomeo PLHomeo::from_knots(Ambient ambient, std::vector<Knot> knots, int degree) {
  if (knots.size() < 2) fail(ErrorKind::InvalidValue, "a PL map needs at least two knots");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].x < knots[i].x)) {
      fail(ErrorKind::InvalidValue, "knot x-coordinates must be strictly increasing");
    }
  }
  const int dir = sgn(knots[1].y - knots[0].y);
  if (dir == 0) fail(ErrorKind::InvalidValue, "PL map is not strictly monotone");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (sgn(knots[i].y - knots[i - 1].y) != dir) {
      fail(ErrorKind::InvalidValue, "PL map is not strictly monotone");
    }
  }
  const Knot& first = knots.front();
  const Knot& last = knots.back();
  switch (ambient) {
    case Ambient::Interval:
      if (first.x != 0 || last.x != 1) {
        fail(ErrorKind::InvalidValue, "interval map must have knots at 0 and 1");
      }
      if (!((first.y == 0 && last.y == 1) || (first.y == 1 && last.y == 0))) {
        fail(ErrorKind::InvalidValue, "interval map must send {0,1} to {0,1}");
      }
      degree = dir;
      break;
    case Ambient::Line:
      degree = dir;
      break;
    case Ambient::CircleLift:
      if (degree != 1 && degree != -1) fail(ErrorKind::InvalidValue, "circle degree must be +-1");
      if (first.x != 0 || last.x != 1) {
        fail(ErrorKind::InvalidValue, "circle lift knots must span [0,1]");
      }
      if (last.y - first.y != degree) {
        fail(ErrorKind::InvalidValue, "circle lift violates f(x+1) = f(x) + degree");
      }
      break;
  }
  return PLHomeo(ambient, canonical_knots(ambient, std::move(knots)), degree);
}

PLHomeo PLHomeo::identity(Ambient ambient) {
  return PLHomeo(ambient, {Knot{0, 0}, Knot{1, 1}}, 1);
}

PLHomeo PLHomeo::translation(Ambient ambient, const Rational& shift) {
  if (ambient == Ambient::Interval) fail(ErrorKind::AmbientMismatch, "no translations of I");
  return PLHomeo(ambient, {Knot{0, shift}, Knot{1, shift + 1}}, 1);
}

bool PLHomeo::is_identity() const { return *this == identity(ambient_); }

Rational PLHomeo::eval_piece(const Rational& x) const {
  const std::size_t i = segment_for(knots_, x);
  return lerp_segment(knots_[i], knots_[i + 1], x);
}

Rational PLHomeo::inverse_piece(const Rational& y) const {
  // Segment search over monotone y-values.
  std::size_t lo = 0;
  std::size_t hi = knots_.size() - 1;
  const bool up = increasing();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const bool right = up ? knots_[mid].y <= y : knots_[mid].y >= y;
    (right ? lo : hi) = mid;
  }
  const Knot& a = knots_[lo];
  const Knot& b = knots_[lo + 1];
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

Rational PLHomeo::operator()(const Rational& x) const {
  switch (ambient_) {
    case Ambient::Interval:
      if (x < 0 || x > 1) fail(ErrorKind::OutOfDomain, "point " + motgrp::to_string(x) + " not in I");
      return eval_piece(x);
    case Ambient::Line:
      return eval_piece(x);
    case Ambient::CircleLift: {
      const Integer k = motgrp::floor(x);
      return eval_piece(x - Rational(k)) + Rational(k * degree_);
    }
  }
  return x;
}

Rational PLHomeo::inverse_at(const Rational& y) const {
  switch (ambient_) {
    case Ambient::Interval:
      if (y < 0 || y > 1) fail(ErrorKind::OutOfDomain, "point " + motgrp::to_string(y) + " not in I");
      return inverse_piece(y);
    case Ambient::Line:
      return inverse_piece(y);
    case Ambient::CircleLift: {
      const Rational& y0 = knots_.front().y;
      if (degree_ > 0) {
        const Integer k = motgrp::floor(y - y0);
        return inverse_piece(y - Rational(k)) + Rational(k);
      }
      const Integer m = motgrp::floor(y0 - y);
      return inverse_piece(y + Rational(m)) + Rational(m);
    }
  }
  return y;
}

PLHomeo PLHomeo::inverse() const {
  if (ambient_ != Ambient::CircleLift) {
    std::vector<Knot> inv;
    inv.reserve(knots_.size());
    for (const Knot& k : knots_) inv.push_back(Knot{k.y, k.x});
    if (!increasing()) std::reverse(inv.begin(), inv.end());
    return from_knots(ambient_, std::move(inv), degree_);
  }
  std::vector<Rational> us{0, 1};
  for (const Knot& k : knots_) us.push_back(frac(k.y));
  sort_unique(us);
  std::vector<Knot> inv;
  for (const Rational& u : us) inv.push_back(Knot{u, inverse_at(u)});
  return from_knots(ambient_, std::move(inv), degree_);
}

std::vector<Rational> PLHomeo::apply(const std::vector<Rational>& xs) const {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const Rational& x : xs) out.push_back((*this)(x));
  return out;
}

std::string PLHomeo::to_string() const {
  std::ostringstream os;
  os << motgrp::to_string(ambient_);
  if (ambient_ == Ambient::CircleLift) os << "(deg " << degree_ << ')';
  os << '[';
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (i) os << ' ';
    os << '(' << motgrp::to_string(knots_[i].x) << ',' << motgrp::to_string(knots_[i].y) << ')';
  }
  os << ']';
  return os.str();
}

PLHomeo compose(const PLHomeo& outer, const PLHomeo& inner) {
  if (outer.ambient() != inner.ambient()) {
    fail(ErrorKind::AmbientMismatch, "composing maps of different ambients");
  }
  const Ambient ambient = inner.ambient();
  const int degree = outer.degree() * inner.degree();
  std::vector<Rational> xs;
  for (const Knot& k : inner.knots()) xs.push_back(k.x);
  if (ambient == Ambient::CircleLift) {
    const Rational f0 = inner.knots().front().y;
    const Rational f1 = inner.knots().back().y;
    const Rational lo = f0 < f1 ? f0 : f1;
    const Rational hi = f0 < f1 ? f1 : f0;
    for (const Knot& k : outer.knots()) {
      const Integer first = -motgrp::floor(k.x - lo);  // ceil(lo - u)
      const Integer last = motgrp::floor(hi - k.x);
      for (Integer j = first; j <= last; ++j) {
        const Rational x = inner.inverse_at(k.x + Rational(j));
        if (x >= 0 && x <= 1) xs.push_back(x);
      }
    }
  } else {
    for (const Knot& k : outer.knots()) xs.push_back(inner.inverse_at(k.x));
  }
  sort_unique(xs);
  if (ambient == Ambient::Line) {
    xs.insert(xs.begin(), xs.front() - 1);
    xs.push_back(xs.back() + 1);
  }
  std::vector<Knot> knots;
  knots.reserve(xs.size());
  for (const Rational& x : xs) knots.push_back(Knot{x, outer(inner(x))});
  return PLHomeo::from_knots(ambient, std::move(knots), degree);
}

PLHomeo interpolate(const PLHomeo& a, const PLHomeo& b, const Rational& lambda) {
  if (a.ambient() != b.ambient()) fail(ErrorKind::AmbientMismatch, "interpolating across ambients");
  if (!a.increasing() || !b.increasing()) {
    fail(ErrorKind::InvalidValue, "interpolation needs orientation-preserving maps");
  }
  std::vector<Rational> xs;
  for (const Knot& k : a.knots()) xs.push_back(k.x);
  for (const Knot& k : b.knots()) xs.push_back(k.x);
  sort_unique(xs);
  if (a.ambient() == Ambient::Line) {
    xs.insert(xs.begin(), xs.front() - 1);
    xs.push_back(xs.back() + 1);
  }
  const Rational mu = 1 - lambda;
  std::vector<Knot> knots;
  knots.reserve(xs.size());
  for (const Rational& x : xs) knots.push_back(Knot{x, mu * a(x) + lambda * b(x)});
  return PLHomeo::from_knots(a.ambient(), std::move(knots), 1);
}

PLHomeo two_segment_map(const Rational& x, const Rational& x_image) {
  if (x <= 0 || x >= 1 || x_image <= 0 || x_image >= 1) {
    fail(ErrorKind::InvalidValue, "two-segment map needs interior points");
  }
  return PLHomeo::from_knots(Ambient::Interval, {Knot{0, 0}, Knot{x, x_image}, Knot{1, 1}});
}

}  // namespace motgrp
