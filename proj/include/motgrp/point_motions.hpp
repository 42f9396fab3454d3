#ifndef MOTGRP_POINT_MOTIONS_HPP_
#define MOTGRP_POINT_MOTIONS_HPP_

// Fake motions of finite point configurations in the open unit square.
//
// A StrandSet gives each point a PL trajectory over t in [0,1]; at every
// time the points are pairwise distinct. Braid words are read off the
// projection to the x-axis:
//  - strands are ranked by x; at a transversal coincidence of two
//    x-adjacent strands a generator s_r is emitted, r being the 1-based
//    rank of the left strand;
//  - the strand with the larger y passes in front, and the letter is
//    positive when the left strand (moving right) passes in front.
// Degenerate projections are made generic by the rational shears
// x -> x + e*y, e = 0, 1/101, 1/103, 1/107, ... tried in order.
//
// Not every fake motion comes from an ambient flow. Standard examples:
// f(x, t) = x(1 - t) pushes an interior point of I onto the boundary; a
// string knot pulled tight from both ends becomes unknotted; a punctured
// circle in the plane straightens to an open segment. None of these has a
// flow restricting to it. Point strands in the open square always do, but
// deciding this for general fake motions is not attempted here.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motgrp/braid.hpp"
#include "motgrp/groupoid.hpp"
#include "motgrp/rational.hpp"

namespace motgrp {

struct Point2 {
  Rational x;
  Rational y;

  bool operator==(const Point2&) const = default;
  auto operator<=>(const Point2& o) const {
    if (x != o.x) return x < o.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (y != o.y) return y < o.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

class PointConfig {
 public:
  // Throws Error(InvalidValue) for repeated or non-interior points.
  explicit PointConfig(std::vector<Point2> points);

  const std::vector<Point2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  // Same points regardless of order.
  bool same_set(const PointConfig& other) const;

  bool operator==(const PointConfig&) const = default;

 private:
  std::vector<Point2> points_;
};

struct Strand {
  std::vector<Rational> times;  // 0 = t_0 < ... < t_k = 1
  std::vector<Point2> vertices;

  Point2 at(const Rational& t) const;
  bool operator==(const Strand&) const = default;
};

class StrandSet {
 public:
  // Validates key times, interior vertices and pairwise disjointness at
  // every time (decided exactly per key interval); throws
  // Error(InvalidValue). Redundant vertices (where a strand is affine in t)
  // are dropped.
  explicit StrandSet(std::vector<Strand> strands);

  static StrandSet identity(const PointConfig& config);

  const std::vector<Strand>& strands() const { return strands_; }
  std::size_t size() const { return strands_.size(); }
  PointConfig start() const;
  PointConfig end() const;

  bool operator==(const StrandSet&) const = default;

 private:
  std::vector<Strand> strands_;
};

// True iff the two strands coincide at some t, decided exactly.
bool strands_collide(const Strand& a, const Strand& b);

// f on [0,1/2], then g from f's end points on [1/2,1]. Strand j follows
// strand j of f, then the strand of g starting where it arrived.
// Throws Error(ConfigMismatch) unless end(f) = start(g) as sets.
StrandSet box_compose(const StrandSet& f, const StrandSet& g);

// Strand j run backwards; starts at f's end configuration.
StrandSet reverse_strands(const StrandSet& f);

// Canonical time normalization: drops time intervals where no strand moves,
// removes key times where every strand is affine in t, and respaces the
// remaining key times uniformly.
StrandSet normalize_time(const StrandSet& f);

struct CrossingEvent {
  Rational time;
  std::size_t left_strand = 0;   // index into strands(), left before the crossing
  std::size_t right_strand = 0;
  int generator = 0;             // signed generator index
  Rational x;                    // sheared x at the crossing
};

struct Extraction {
  BraidWord word;
  Rational shear;
  std::vector<CrossingEvent> events;
};

// Crossing events under one shear, or nullopt if the projection is
// degenerate (coincident starts or ends, tangency, coincidence along an
// interval, triple points, interleaved simultaneous crossings).
std::optional<Extraction> extract_with_shear(const StrandSet& f, const Rational& shear);

// The shear sequence tried by braid_word_of.
std::vector<Rational> shear_sequence(std::size_t count);

// First generic shear wins; throws Error(DegenerateProjection) if all fail.
Extraction extract(const StrandSet& f);
BraidWord braid_word_of(const StrandSet& f);

// braid_word_of(f then reverse(g)) is trivial. Throws Error(ConfigMismatch)
// unless f and g share start and end configurations (as sets).
bool strands_equivalent(const StrandSet& f, const StrandSet& g);

// A strand set from k to k2 (strand j ends at k2[j]), built by moving one
// point at a time: every point first to its own parking spot, then each on
// to its target, detouring around stationary points where a straight
// segment would hit one. Returns identity strands when k == k2.
// Throws Error(ConfigMismatch) when the sizes differ.
StrandSet connect_configs(const PointConfig& k, const PointConfig& k2);

// Points at (j+1)/(n+1), 1/2 for j = 0..n-1.
PointConfig row_config(std::size_t n);

// Clockwise half turn of two points about their midpoint along a diamond:
// the left point passes above, so the extracted word is s_1.
StrandSet half_twist(const Point2& left, const Point2& right);

// Fake-motion groupoid over a family of configurations, hom-sets sampled
// from connect_configs composed with random loops built from pure braids.
struct StrandMorphism {
  StrandSet strands;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const StrandMorphism&) const = default;
};

groupoid::Groupoid<PointConfig, StrandMorphism> strand_groupoid(std::vector<PointConfig> objects,
                                                                std::size_t loops,
                                                                std::uint64_t seed);
groupoid::Congruence<StrandMorphism> strand_congruence();

}  // namespace motgrp

#endif  // MOTGRP_POINT_MOTIONS_HPP_
