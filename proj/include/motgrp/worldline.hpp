#ifndef MOTGRP_WORLDLINE_HPP_
#define MOTGRP_WORLDLINE_HPP_

#include <vector>

#include "motgrp/pl_flow.hpp"
#include "motgrp/subset.hpp"

namespace motgrp {

struct SpaceTimePoint {
  Rational x;
  Rational t;

  bool operator==(const SpaceTimePoint&) const = default;
};

// The graph of a PL trajectory t -> x(t) over [0,1], vertices strictly
// increasing in t. Canonical: no vertex where x is affine in t across it.
class Arc {
 public:
  explicit Arc(std::vector<SpaceTimePoint> vertices);
  static Arc vertical(const Rational& x);

  const std::vector<SpaceTimePoint>& vertices() const { return vertices_; }
  const Rational& bottom() const { return vertices_.front().x; }
  const Rational& top() const { return vertices_.back().x; }
  Rational at(const Rational& t) const;

  bool operator==(const Arc&) const = default;

 private:
  std::vector<SpaceTimePoint> vertices_;
};

// The trace of one component: an arc for a point (lower == upper) or a band
// bounded by two arcs for an interval.
struct WorldlineComponent {
  Arc lower;
  Arc upper;

  bool is_point() const { return lower == upper; }
  Component1D bottom() const { return {lower.bottom(), upper.bottom()}; }
  Component1D top() const { return {lower.top(), upper.top()}; }

  bool operator==(const WorldlineComponent&) const = default;
};

// Union over t of f_t(N) x {t} in M x [0,1], as PL arcs and bands.
class WorldlineI {
 public:
  // Sorts components by their bottom slice; throws Error(InvalidValue) if a
  // band is not strictly thick or two components meet at some time.
  WorldlineI(Ambient ambient, std::vector<WorldlineComponent> components);

  // N x [0,1].
  static WorldlineI product(Ambient ambient, const std::vector<Component1D>& n);

  Ambient ambient() const { return ambient_; }
  const std::vector<WorldlineComponent>& components() const { return components_; }
  std::vector<Component1D> bottom_slice() const;
  std::vector<Component1D> top_slice() const;

  bool operator==(const WorldlineI&) const = default;

 private:
  Ambient ambient_;
  std::vector<WorldlineComponent> components_;
};

// Trajectories t -> f_t(p) of every component endpoint; vertices at key
// times. Throws Error(OutOfDomain) for points outside I on the interval.
WorldlineI worldline(const PLFlow& f, const std::vector<Component1D>& n);
WorldlineI worldline(const PLFlow& f, const CompactSubsetI& n);
WorldlineI worldline(const PLFlow& f, const std::vector<Rational>& points);

// w1 on [0,1/2] and w2 on [1/2,1], joined along the shared slice.
// Throws Error(SliceMismatch) unless top(w1) = bottom(w2) exactly.
WorldlineI concat_worldlines(const WorldlineI& w1, const WorldlineI& w2);

// Image f_1(N) of a component list under an orientation-preserving map.
std::vector<Component1D> image(const PLHomeo& h, const std::vector<Component1D>& n);

}  // namespace motgrp

#endif  // MOTGRP_WORLDLINE_HPP_
