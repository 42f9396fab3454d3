#ifndef MOTGRP_PL_FLOW_HPP_
#define MOTGRP_PL_FLOW_HPP_

#include <vector>

#include "motgrp/pl_homeo.hpp"
#include "motgrp/rational.hpp"

namespace motgrp {

// A flow t -> f_t of orientation-preserving PL homeomorphisms with f_0 = id,
// stored as key frames at times 0 = t_0 < ... < t_k = 1. Between key times
// the frame is the pointwise linear interpolation
//   f_t = ((t_{i+1} - t) f_{t_i} + (t - t_i) f_{t_{i+1}}) / (t_{i+1} - t_i),
// which is again strictly increasing and PL.
//
// Canonical form: frames are canonical PLHomeos, and a key time whose frame
// equals the interpolation of its neighbours is dropped. So == compares the
// maps (t, x) -> f_t(x), not any homotopy class.
class PLFlow {
 public:
  // Throws Error(InvalidValue) for bad key times, a non-identity first
  // frame, or a frame that is not orientation preserving.
  static PLFlow from_frames(Ambient ambient, std::vector<Rational> key_times,
                            std::vector<PLHomeo> frames);
  static PLFlow identity(Ambient ambient);
  // Frames id at t = 0 and `endpoint` at t = 1.
  static PLFlow two_frame(const PLHomeo& endpoint);

  Ambient ambient() const { return ambient_; }
  const std::vector<Rational>& key_times() const { return times_; }
  const std::vector<PLHomeo>& frames() const { return frames_; }
  const PLHomeo& endpoint() const { return frames_.back(); }

  // The interpolated map f_t; throws Error(OutOfDomain) for t outside [0,1].
  PLHomeo at(const Rational& t) const;

  // f_t(x), exact.
  Rational eval(const Rational& t, const Rational& x) const;

  bool operator==(const PLFlow&) const = default;

 private:
  PLFlow(Ambient ambient, std::vector<Rational> times, std::vector<PLHomeo> frames)
      : ambient_(ambient), times_(std::move(times)), frames_(std::move(frames)) {}

  Ambient ambient_ = Ambient::Interval;
  std::vector<Rational> times_;
  std::vector<PLHomeo> frames_;
};

// g * f: f at double speed, then g (after f's endpoint) at double speed.
// Exact: precomposition by the fixed map f_1 commutes with interpolation.
// Throws Error(AmbientMismatch).
PLFlow star_compose(const PLFlow& f, const PLFlow& g);

// g . f with (g . f)_t = g_t o f_t at every key time of the merged grid,
// interpolated in between. Only the key frames (and hence the endpoint)
// are exact; between key times this approximates the pointwise composite.
PLFlow dot_compose(const PLFlow& f, const PLFlow& g);

// The reverse flow t -> f_{1-t} o f_1^{-1}. Exact, and an involution.
PLFlow reverse(const PLFlow& f);

// Frames f_{t_i}^{-1} at each key time; exact at key times only.
PLFlow pointwise_inverse(const PLFlow& f);

// Coning isotopy f_t(x) = t h(x / t) for x <= t, x otherwise, sampled at
// t = 0, the interior breakpoints of h, and t = 1. Frames are exact at
// those times. Throws Error(NotBoundaryFixing) unless h(0) = 0, h(1) = 1.
PLFlow alexander_flow(const PLHomeo& h);

// Orientation class of a circle map through its lift: +1 or -1.
// Throws Error(AmbientMismatch) for a non-circle map.
int circle_degree(const PLHomeo& lift);

// Integer displacement f_1(p) - p of the lifted trajectory of p.
// Throws Error(NotALoop) if f_1(p) differs from p by a non-integer.
Integer winding_class(const PLFlow& f, const Rational& basepoint);

// n = f_1(0) for a line flow whose endpoint maps Z onto Z preserving order.
// Throws Error(NotZPreserving).
Integer translation_class(const PLFlow& f);

// f_t(x) = x + t * shift on the line or circle lift.
PLFlow translation_flow(Ambient ambient, const Rational& shift);

}  // namespace motgrp

#endif  // MOTGRP_PL_FLOW_HPP_
