#include "motgrp/worldline.hpp"

#include <algorithm>

#include "motgrp/error.hpp"

namespace motgrp {

namespace {

std::vector<SpaceTimePoint> drop_affine_vertices(std::vector<SpaceTimePoint> v) {
  std::vector<SpaceTimePoint> kept;
  kept.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && i + 1 < v.size()) {
      const SpaceTimePoint& p = kept.back();
      const SpaceTimePoint& q = v[i];
      const SpaceTimePoint& r = v[i + 1];
      if ((q.x - p.x) * (r.t - q.t) == (r.x - q.x) * (q.t - p.t)) continue;
    }
    kept.push_back(v[i]);
  }
  return kept;
}

std::vector<Rational> merged_times(const Arc& a, const Arc& b) {
  std::vector<Rational> ts;
  for (const auto& v : a.vertices()) ts.push_back(v.t);
  for (const auto& v : b.vertices()) ts.push_back(v.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// a(t) < b(t) for all t; both PL, so checking merged vertex times suffices.
bool strictly_below(const Arc& a, const Arc& b) {
  for (const Rational& t : merged_times(a, b)) {
    if (!(a.at(t) < b.at(t))) return false;
  }
  return true;
}

Arc trajectory(const PLFlow& f, const Rational& p) {
  std::vector<SpaceTimePoint> v;
  v.reserve(f.key_times().size());
  for (std::size_t i = 0; i < f.key_times().size(); ++i) {
    v.push_back({f.frames()[i](p), f.key_times()[i]});
  }
  return Arc(std::move(v));
}

// Stacks a on [0,1/2] and b on [1/2,1].
Arc stack(const Arc& a, const Arc& b) {
  std::vector<SpaceTimePoint> v;
  for (const auto& p : a.vertices()) v.push_back({p.x, p.t / 2});
  for (std::size_t i = 1; i < b.vertices().size(); ++i) {
    const auto& p = b.vertices()[i];
    v.push_back({p.x, p.t / 2 + make_rational(1, 2)});
  }
  return Arc(std::move(v));
}

}  // namespace

Arc::Arc(std::vector<SpaceTimePoint> vertices) {
  if (vertices.size() < 2 || vertices.front().t != 0 || vertices.back().t != 1) {
    fail(ErrorKind::InvalidValue, "an arc spans t in [0,1]");
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1].t < vertices[i].t)) {
      fail(ErrorKind::InvalidValue, "arc times must be strictly increasing");
    }
  }
  vertices_ = drop_affine_vertices(std::move(vertices));
}

Arc Arc::vertical(const Rational& x) { return Arc({{x, 0}, {x, 1}}); }

Rational Arc::at(const Rational& t) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                             [](const SpaceTimePoint& p, const Rational& v) { return p.t < v; });
  if (it == vertices_.end()) fail(ErrorKind::OutOfDomain, "time beyond arc");
  if (it->t == t) return it->x;
  if (it == vertices_.begin()) fail(ErrorKind::OutOfDomain, "time before arc");
  const auto& a = *(it - 1);
  const auto& b = *it;
  return a.x + (t - a.t) * (b.x - a.x) / (b.t - a.t);
}

WorldlineI::WorldlineI(Ambient ambient, std::vector<WorldlineComponent> components)
    : ambient_(ambient), components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(),
            [](const WorldlineComponent& a, const WorldlineComponent& b) {
              return a.lower.bottom() < b.lower.bottom();
            });
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (!c.is_point() && !strictly_below(c.lower, c.upper)) {
      fail(ErrorKind::InvalidValue, "band boundaries touch or cross");
    }
    if (i > 0 && !strictly_below(components_[i - 1].upper, c.lower)) {
      fail(ErrorKind::InvalidValue, "worldline components meet");
    }
  }
}

WorldlineI WorldlineI::product(Ambient ambient, const std::vector<Component1D>& n) {
  std::vector<WorldlineComponent> cs;
  for (const auto& c : n) cs.push_back({Arc::vertical(c.lo), Arc::vertical(c.hi)});
  return WorldlineI(ambient, std::move(cs));
}

std::vector<Component1D> WorldlineI::bottom_slice() const {
  std::vector<Component1D> out;
  for (const auto& c : components_) out.push_back(c.bottom());
  return out;
}

std::vector<Component1D> WorldlineI::top_slice() const {
  std::vector<Component1D> out;
  for (const auto& c : components_) out.push_back(c.top());
  std::sort(out.begin(), out.end(),
            [](const Component1D& a, const Component1D& b) { return a.lo < b.lo; });
  return out;
}

WorldlineI worldline(const PLFlow& f, const std::vector<Component1D>& n) {
  std::vector<WorldlineComponent> cs;
  cs.reserve(n.size());
  for (const auto& c : n) {
    if (f.ambient() == Ambient::Interval && (c.lo < 0 || c.hi > 1)) {
      fail(ErrorKind::OutOfDomain, "subset leaves I");
    }
    Arc lower = trajectory(f, c.lo);
    Arc upper = c.is_point() ? lower : trajectory(f, c.hi);
    cs.push_back({std::move(lower), std::move(upper)});
  }
  return WorldlineI(f.ambient(), std::move(cs));
}

WorldlineI worldline(const PLFlow& f, const CompactSubsetI& n) {
  if (f.ambient() != Ambient::Interval) fail(ErrorKind::AmbientMismatch, "subset of I, flow not on I");
  return worldline(f, n.components());
}

WorldlineI worldline(const PLFlow& f, const std::vector<Rational>& points) {
  std::vector<Component1D> n;
  for (const auto& p : points) n.push_back(Component1D::point(p));
  return worldline(f, n);
}

WorldlineI concat_worldlines(const WorldlineI& w1, const WorldlineI& w2) {
  if (w1.ambient() != w2.ambient()) fail(ErrorKind::AmbientMismatch, "worldlines in different M");
  const auto& c1 = w1.components();
  const auto& c2 = w2.components();
  if (c1.size() != c2.size()) fail(ErrorKind::SliceMismatch, "component counts differ");
  std::vector<bool> used(c2.size(), false);
  std::vector<WorldlineComponent> out;
  for (const auto& a : c1) {
    const Component1D top = a.top();
    std::size_t match = c2.size();
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (!used[j] && c2[j].bottom() == top && c2[j].is_point() == a.is_point()) {
        match = j;
        break;
      }
    }
    if (match == c2.size()) fail(ErrorKind::SliceMismatch, "top slice of w1 is not bottom of w2");
    used[match] = true;
    const auto& b = c2[match];
    Arc lower = stack(a.lower, b.lower);
    Arc upper = a.is_point() ? lower : stack(a.upper, b.upper);
    out.push_back({std::move(lower), std::move(upper)});
  }
  return WorldlineI(w1.ambient(), std::move(out));
}

std::vector<Component1D> image(const PLHomeo& h, const std::vector<Component1D>& n) {
  std::vector<Component1D> out;
  out.reserve(n.size());
  for (const auto& c : n) {
    Rational a = h(c.lo);
    Rational b = c.is_point() ? a : h(c.hi);
    if (b < a) std::swap(a, b);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(),
            [](const Component1D& a, const Component1D& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace motgrp
