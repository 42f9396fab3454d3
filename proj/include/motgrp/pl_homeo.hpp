#ifndef MOTGRP_PL_HOMEO_HPP_
#define MOTGRP_PL_HOMEO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "motgrp/rational.hpp"

namespace motgrp {

// One-dimensional ambient spaces. The circle is handled only through lifts
// to the line: a lift f satisfies f(x + 1) = f(x) + degree.
enum class Ambient { Interval, Line, CircleLift };

std::string_view to_string(Ambient a);
Ambient parse_ambient(std::string_view text);

struct Knot {
  Rational x;
  Rational y;

  bool operator==(const Knot&) const = default;
};

// Exact piecewise-linear self-homeomorphism of a 1-D ambient.
//
// Knot layout per ambient:
//  - Interval: first knot at x = 0, last at x = 1; the values at 0 and 1
//    are {0, 1} in either order.
//  - Line: at least two knots; the map continues affinely past the end
//    knots along the first and last segments.
//  - CircleLift: knots span exactly one period, x from 0 to 1, with
//    f(1) = f(0) + degree; evaluation extends periodically.
//
// Values are stored in canonical form (no interior knot collinear with its
// neighbours; line end knots placed one unit beyond the outermost genuine
// breakpoints, or at x = 0 and x = 1 for an affine map), so == decides
// equality of maps.
class PLHomeo {
 public:
  // Validates and canonicalizes; throws Error(InvalidValue).
  // `degree` is only read for CircleLift.
  static PLHomeo from_knots(Ambient ambient, std::vector<Knot> knots, int degree = 1);

  static PLHomeo identity(Ambient ambient);
  // x -> x + shift (Line or CircleLift).
  static PLHomeo translation(Ambient ambient, const Rational& shift);

  Ambient ambient() const { return ambient_; }
  const std::vector<Knot>& knots() const { return knots_; }
  // +1 for orientation preserving, -1 for reversing.
  int degree() const { return degree_; }
  bool increasing() const { return degree_ > 0; }
  bool is_identity() const;

  // Throws Error(OutOfDomain) outside [0,1] on the interval.
  Rational operator()(const Rational& x) const;
  Rational inverse_at(const Rational& y) const;

  PLHomeo inverse() const;

  // Image of a point set, kept in order of the inputs.
  std::vector<Rational> apply(const std::vector<Rational>& xs) const;

  bool operator==(const PLHomeo&) const = default;

  std::string to_string() const;

 private:
  PLHomeo(Ambient ambient, std::vector<Knot> knots, int degree)
      : ambient_(ambient), knots_(std::move(knots)), degree_(degree) {}

  Rational eval_piece(const Rational& x) const;
  Rational inverse_piece(const Rational& y) const;

  Ambient ambient_ = Ambient::Interval;
  std::vector<Knot> knots_;
  int degree_ = 1;
};

// outer o inner; throws Error(AmbientMismatch).
PLHomeo compose(const PLHomeo& outer, const PLHomeo& inner);

// Pointwise (1 - lambda) a + lambda b of two orientation-preserving maps of
// the same ambient. Convex combinations of increasing maps are increasing.
PLHomeo interpolate(const PLHomeo& a, const PLHomeo& b, const Rational& lambda);

// The two-segment map (0,0)-(x, x')-(1,1) of the interval.
PLHomeo two_segment_map(const Rational& x, const Rational& x_image);

}  // namespace motgrp

#endif  // MOTGRP_PL_HOMEO_HPP_
