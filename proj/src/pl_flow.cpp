#include "motgrp/pl_flow.hpp"

#include <algorithm>

#include "motgrp/error.hpp"

namespace motgrp {

namespace {

// Drops key frames that lie on the time-linear interpolation of the last
// kept frame and the next one.
void drop_redundant_frames(std::vector<Rational>& times, std::vector<PLHomeo>& frames) {
  std::vector<Rational> kt{times.front()};
  std::vector<PLHomeo> kf{frames.front()};
  for (std::size_t i = 1; i + 1 < times.size(); ++i) {
    const Rational lambda = (times[i] - kt.back()) / (times[i + 1] - kt.back());
    if (interpolate(kf.back(), frames[i + 1], lambda) == frames[i]) continue;
    kt.push_back(times[i]);
    kf.push_back(frames[i]);
  }
  kt.push_back(times.back());
  kf.push_back(frames.back());
  times = std::move(kt);
  frames = std::move(kf);
}

std::vector<Rational> merged_grid(const PLFlow& f, const PLFlow& g) {
  std::vector<Rational> ts = f.key_times();
  ts.insert(ts.end(), g.key_times().begin(), g.key_times().end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

void require_same_ambient(const PLFlow& f, const PLFlow& g) {
  if (f.ambient() != g.ambient()) fail(ErrorKind::AmbientMismatch, "flows on different ambients");
}

}  // namespace

PLFlow PLFlow::from_frames(Ambient ambient, std::vector<Rational> key_times,
                           std::vector<PLHomeo> frames) {
  if (key_times.size() < 2 || key_times.size() != frames.size()) {
    fail(ErrorKind::InvalidValue, "a flow needs matching key times and frames (at least two)");
  }
  if (key_times.front() != 0 || key_times.back() != 1) {
    fail(ErrorKind::InvalidValue, "key times must run from 0 to 1");
  }
  for (std::size_t i = 1; i < key_times.size(); ++i) {
    if (!(key_times[i - 1] < key_times[i])) {
      fail(ErrorKind::InvalidValue, "key times must be strictly increasing");
    }
  }
  for (const PLHomeo& h : frames) {
    if (h.ambient() != ambient) fail(ErrorKind::AmbientMismatch, "frame ambient differs from flow");
    if (!h.increasing()) fail(ErrorKind::InvalidValue, "flow frames must preserve orientation");
  }
  if (!frames.front().is_identity()) fail(ErrorKind::InvalidValue, "a flow starts at the identity");
  drop_redundant_frames(key_times, frames);
  return PLFlow(ambient, std::move(key_times), std::move(frames));
}

PLFlow PLFlow::identity(Ambient ambient) {
  const PLHomeo id = PLHomeo::identity(ambient);
  return PLFlow(ambient, {Rational(0), Rational(1)}, {id, id});
}

PLFlow PLFlow::two_frame(const PLHomeo& endpoint) {
  return from_frames(endpoint.ambient(), {Rational(0), Rational(1)},
                     {PLHomeo::identity(endpoint.ambient()), endpoint});
}

PLHomeo PLFlow::at(const Rational& t) const {
  if (t < 0 || t > 1) fail(ErrorKind::OutOfDomain, "time " + to_string(t) + " not in [0,1]");
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times_.begin());
  if (times_[i] == t) return frames_[i];
  const Rational lambda = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
  return interpolate(frames_[i - 1], frames_[i], lambda);
}

Rational PLFlow::eval(const Rational& t, const Rational& x) const {
  if (t < 0 || t > 1) fail(ErrorKind::OutOfDomain, "time " + to_string(t) + " not in [0,1]");
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times_.begin());
  if (times_[i] == t) return frames_[i](x);
  const Rational& t0 = times_[i - 1];
  const Rational& t1 = times_[i];
  return ((t1 - t) * frames_[i - 1](x) + (t - t0) * frames_[i](x)) / (t1 - t0);
}

PLFlow star_compose(const PLFlow& f, const PLFlow& g) {
  require_same_ambient(f, g);
  std::vector<Rational> times;
  std::vector<PLHomeo> frames;
  for (std::size_t i = 0; i < f.key_times().size(); ++i) {
    times.push_back(f.key_times()[i] / 2);
    frames.push_back(f.frames()[i]);
  }
  const PLHomeo& f1 = f.endpoint();
  for (std::size_t j = 1; j < g.key_times().size(); ++j) {
    times.push_back(make_rational(1, 2) + g.key_times()[j] / 2);
    frames.push_back(compose(g.frames()[j], f1));
  }
  return PLFlow::from_frames(f.ambient(), std::move(times), std::move(frames));
}

PLFlow dot_compose(const PLFlow& f, const PLFlow& g) {
  require_same_ambient(f, g);
  std::vector<Rational> times = merged_grid(f, g);
  std::vector<PLHomeo> frames;
  frames.reserve(times.size());
  for (const Rational& t : times) frames.push_back(compose(g.at(t), f.at(t)));
  return PLFlow::from_frames(f.ambient(), std::move(times), std::move(frames));
}

PLFlow reverse(const PLFlow& f) {
  const PLHomeo f1_inv = f.endpoint().inverse();
  std::vector<Rational> times;
  std::vector<PLHomeo> frames;
  for (std::size_t i = f.key_times().size(); i-- > 0;) {
    times.push_back(1 - f.key_times()[i]);
    frames.push_back(compose(f.frames()[i], f1_inv));
  }
  return PLFlow::from_frames(f.ambient(), std::move(times), std::move(frames));
}

PLFlow pointwise_inverse(const PLFlow& f) {
  std::vector<PLHomeo> frames;
  frames.reserve(f.frames().size());
  for (const PLHomeo& h : f.frames()) frames.push_back(h.inverse());
  return PLFlow::from_frames(f.ambient(), f.key_times(), std::move(frames));
}

PLFlow alexander_flow(const PLHomeo& h) {
  if (h.ambient() != Ambient::Interval) fail(ErrorKind::AmbientMismatch, "Alexander trick on I only");
  if (!h.increasing()) fail(ErrorKind::NotBoundaryFixing, "map must fix 0 and 1");
  std::vector<Rational> times{0};
  for (const Knot& k : h.knots()) {
    if (k.x > 0) times.push_back(k.x);
  }
  std::vector<PLHomeo> frames{PLHomeo::identity(Ambient::Interval)};
  for (std::size_t i = 1; i < times.size(); ++i) {
    const Rational& t = times[i];
    // On [0, t] the frame is h scaled by t; [t, 1] is fixed.
    std::vector<Knot> knots;
    for (const Knot& k : h.knots()) knots.push_back(Knot{t * k.x, t * k.y});
    if (t < 1) knots.push_back(Knot{1, 1});
    frames.push_back(PLHomeo::from_knots(Ambient::Interval, std::move(knots)));
  }
  return PLFlow::from_frames(Ambient::Interval, std::move(times), std::move(frames));
}

int circle_degree(const PLHomeo& lift) {
  if (lift.ambient() != Ambient::CircleLift) fail(ErrorKind::AmbientMismatch, "not a circle lift");
  return lift.degree();
}

Integer translation_class(const PLFlow& f) {
  if (f.ambient() != Ambient::Line) fail(ErrorKind::AmbientMismatch, "translation class needs R");
  const PLHomeo& h = f.endpoint();
  const auto& knots = h.knots();
  // Both affine tails must have slope 1, and integers in the window must go
  // to consecutive integers; together this forces h(Z) = Z in order.
  auto slope = [](const Knot& a, const Knot& b) -> Rational { return (b.y - a.y) / (b.x - a.x); };
  if (slope(knots[0], knots[1]) != 1 || slope(knots[knots.size() - 2], knots.back()) != 1) {
    fail(ErrorKind::NotZPreserving, "endpoint tails are not unit translations");
  }
  const Integer lo = floor(knots.front().x) - 1;
  const Integer hi = floor(knots.back().x) + 1;
  Rational prev = h(Rational(lo));
  if (!is_integer(prev)) fail(ErrorKind::NotZPreserving, "endpoint moves an integer off Z");
  for (Integer k = lo + 1; k <= hi; ++k) {
    const Rational cur = h(Rational(k));
    if (cur - prev != 1) fail(ErrorKind::NotZPreserving, "endpoint does not preserve Z");
    prev = cur;
  }
  return h(Rational(0)).get_num();
}

Integer winding_class(const PLFlow& f, const Rational& basepoint) {
  if (f.ambient() != Ambient::CircleLift) fail(ErrorKind::AmbientMismatch, "winding needs S^1");
  const Rational shift = f.endpoint()(basepoint) - basepoint;
  if (!is_integer(shift)) fail(ErrorKind::NotALoop, "endpoint does not fix the basepoint on S^1");
  return shift.get_num();
}

PLFlow translation_flow(Ambient ambient, const Rational& shift) {
  return PLFlow::two_frame(PLHomeo::translation(ambient, shift));
}

}  // namespace motgrp
