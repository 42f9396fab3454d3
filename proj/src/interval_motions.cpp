#include "motgrp/interval_motions.hpp"

#include <algorithm>
#include <sstream>

#include "motgrp/error.hpp"
#include "motgrp/random.hpp"
#include "motgrp/worldline.hpp"

namespace motgrp {

CompactSubsetI::CompactSubsetI(std::vector<Component1D> components)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(),
            [](const Component1D& a, const Component1D& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.lo < 0 || c.hi > 1) fail(ErrorKind::InvalidValue, "component outside [0,1]");
    if (c.hi < c.lo) fail(ErrorKind::InvalidValue, "interval with a > b");
    if (i > 0 && !(components_[i - 1].hi < c.lo)) {
      fail(ErrorKind::InvalidValue, "components must be pairwise disjoint");
    }
  }
}

bool CompactSubsetI::contains0() const {
  return !components_.empty() && components_.front().lo == 0;
}

bool CompactSubsetI::contains1() const {
  return !components_.empty() && components_.back().hi == 1;
}

std::vector<Rational> CompactSubsetI::boundary_points() const {
  std::vector<Rational> out;
  for (const auto& c : components_) {
    out.push_back(c.lo);
    if (!c.is_point()) out.push_back(c.hi);
  }
  return out;
}

std::string CompactSubsetI::to_string() const {
  if (components_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << " u ";
    const auto& c = components_[i];
    if (c.is_point()) {
      os << '{' << motgrp::to_string(c.lo) << '}';
    } else {
      os << '[' << motgrp::to_string(c.lo) << ',' << motgrp::to_string(c.hi) << ']';
    }
  }
  return os.str();
}

std::string word_of(const CompactSubsetI& n) {
  std::string w;
  for (const auto& c : n.components()) w.push_back(c.is_point() ? 'a' : 'b');
  return w;
}

int hom_cardinality(const CompactSubsetI& n, const CompactSubsetI& n2) {
  const bool same = word_of(n) == word_of(n2) && n.contains0() == n2.contains0() &&
                    n.contains1() == n2.contains1();
  return same ? 1 : 0;
}

PLFlow canonical_motion(const CompactSubsetI& n, const CompactSubsetI& n2) {
  if (hom_cardinality(n, n2) == 0) {
    fail(ErrorKind::NoMotionExists, word_of(n) + " and " + word_of(n2) +
                                        " are not related by a motion of I");
  }
  const auto from = n.boundary_points();
  const auto to = n2.boundary_points();
  std::vector<Knot> knots{{0, 0}};
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] > 0 && from[i] < 1) knots.push_back({from[i], to[i]});
  }
  knots.push_back({1, 1});
  return PLFlow::two_frame(PLHomeo::from_knots(Ambient::Interval, std::move(knots)));
}

bool is_motion(const PLFlow& f, const CompactSubsetI& n, const CompactSubsetI& n2) {
  if (f.ambient() != Ambient::Interval) return false;
  return image(f.endpoint(), n.components()) == n2.components();
}

bool is_stationary(const PLFlow& f, const CompactSubsetI& n) {
  if (f.ambient() != Ambient::Interval) return false;
  for (const Rational& p : n.boundary_points()) {
    for (const PLHomeo& frame : f.frames()) {
      if (frame(p) != p) return false;
    }
  }
  return true;
}

bool motions_equivalent(const PLFlow& f, const PLFlow& g, const CompactSubsetI& n,
                        const CompactSubsetI& n2) {
  if (!is_motion(f, n, n2) || !is_motion(g, n, n2)) {
    fail(ErrorKind::NotAMotion, "flow does not carry " + n.to_string() + " to " + n2.to_string());
  }
  return true;
}

groupoid::Groupoid<CompactSubsetI, IntervalMotion> interval_motion_groupoid(
    std::vector<CompactSubsetI> objects, std::size_t detours, std::uint64_t seed) {
  using M = IntervalMotion;
  groupoid::Groupoid<CompactSubsetI, M> g;
  g.magmoid.objects = objects;
  g.magmoid.hom = [objects, detours, seed](std::size_t i, std::size_t j) {
    std::vector<M> out;
    if (hom_cardinality(objects[i], objects[j]) == 0) return out;
    const PLFlow base = canonical_motion(objects[i], objects[j]);
    out.push_back({base, i, j});
    random::Engine rng(seed ^ (i * 0x9e3779b9u) ^ (j << 20));
    const PLHomeo id = PLHomeo::identity(Ambient::Interval);
    for (std::size_t d = 0; d < detours; ++d) {
      // Wander through a random frame and return to the identity.
      const PLFlow loop = PLFlow::from_frames(
          Ambient::Interval, {Rational(0), random::rational(rng, make_rational(1, 8), make_rational(7, 8), 8), Rational(1)},
          {id, random::homeo(rng, Ambient::Interval), id});
      out.push_back({star_compose(base, loop), i, j});
    }
    return out;
  };
  g.magmoid.compose = [](const M& f, const M& h) {
    return M{star_compose(f.flow, h.flow), f.source, h.target};
  };
  g.ops.identity = [](std::size_t i) { return M{PLFlow::identity(Ambient::Interval), i, i}; };
  g.ops.inverse = [](std::size_t, std::size_t, const M& f) {
    return M{reverse(f.flow), f.target, f.source};
  };
  return g;
}

groupoid::Congruence<IntervalMotion> interval_motion_congruence(
    const std::vector<CompactSubsetI>& objects) {
  return {[objects](std::size_t i, std::size_t j, const IntervalMotion& f, const IntervalMotion& g) {
    return motions_equivalent(f.flow, g.flow, objects[i], objects[j]);
  }};
}

}  // namespace motgrp
