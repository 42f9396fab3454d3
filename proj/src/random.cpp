#include "motgrp/random.hpp"

#include <algorithm>

namespace motgrp::random {

Rational rational(Engine& rng, const Rational& lo, const Rational& hi, long denominator) {
  const Rational span = (hi - lo) * denominator;
  const long steps = floor(span).get_si();
  const long k = std::uniform_int_distribution<long>(0, steps)(rng);
  return lo + make_rational(k, denominator);
}

std::vector<Rational> sorted_distinct(Engine& rng, std::size_t count, const Rational& lo,
                                      const Rational& hi, long denominator) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = rational(rng, lo, hi, denominator);
    if (r == lo || r == hi) continue;
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PLHomeo homeo(Engine& rng, Ambient ambient, std::size_t max_breaks) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_breaks)(rng);
  std::vector<Knot> knots;
  switch (ambient) {
    case Ambient::Interval: {
      const auto xs = sorted_distinct(rng, k, 0, 1);
      const auto ys = sorted_distinct(rng, k, 0, 1);
      knots.push_back({0, 0});
      for (std::size_t i = 0; i < k; ++i) knots.push_back({xs[i], ys[i]});
      knots.push_back({1, 1});
      break;
    }
    case Ambient::Line: {
      const auto xs = sorted_distinct(rng, k + 2, -3, 3, 16);
      const auto ys = sorted_distinct(rng, k + 2, -4, 4, 16);
      for (std::size_t i = 0; i < k + 2; ++i) knots.push_back({xs[i], ys[i]});
      break;
    }
    case Ambient::CircleLift: {
      const Rational y0 = rational(rng, -1, 1, 16);
      const auto xs = sorted_distinct(rng, k, 0, 1);
      const auto ys = sorted_distinct(rng, k, y0, y0 + 1);
      knots.push_back({0, y0});
      for (std::size_t i = 0; i < k; ++i) knots.push_back({xs[i], ys[i]});
      knots.push_back({1, y0 + 1});
      break;
    }
  }
  return PLHomeo::from_knots(ambient, std::move(knots), 1);
}

PLFlow flow(Engine& rng, Ambient ambient, std::size_t max_frames, std::size_t max_breaks) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_frames)(rng);
  std::vector<Rational> times{0};
  for (const Rational& t : sorted_distinct(rng, k - 1, 0, 1, 16)) times.push_back(t);
  times.push_back(1);
  std::vector<PLHomeo> frames{PLHomeo::identity(ambient)};
  for (std::size_t i = 0; i < k; ++i) frames.push_back(homeo(rng, ambient, max_breaks));
  return PLFlow::from_frames(ambient, std::move(times), std::move(frames));
}

CompactSubsetI compact_subset(Engine& rng, std::size_t max_components, bool allow_boundary) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_components)(rng);
  // 2k distinct cut points; component i uses cuts 2i, 2i+1 as an interval or
  // just cut 2i as a point, so components never meet.
  auto cuts = sorted_distinct(rng, 2 * k, 0, 1, 128);
  std::vector<Component1D> cs;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::bernoulli_distribution(0.5)(rng)) {
      cs.push_back(Component1D::point(cuts[2 * i]));
    } else {
      cs.push_back(Component1D::interval(cuts[2 * i], cuts[2 * i + 1]));
    }
  }
  if (allow_boundary && k > 0) {
    std::bernoulli_distribution coin(0.25);
    if (coin(rng)) cs.front().lo = 0;
    if (coin(rng)) cs.back().hi = 1;
  }
  return CompactSubsetI(std::move(cs));
}

PointConfig config(Engine& rng, std::size_t n, long denominator) {
  std::vector<Point2> pts;
  while (pts.size() < n) {
    const Point2 p{rational(rng, make_rational(1, denominator), make_rational(denominator - 1, denominator), denominator),
                   rational(rng, make_rational(1, denominator), make_rational(denominator - 1, denominator), denominator)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointConfig(std::move(pts));
}

StrandSet strands(Engine& rng, const PointConfig& start, std::size_t steps, long denominator) {
  const std::size_t n = start.size();
  std::vector<Point2> pos = start.points();
  std::vector<Strand> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {{0}, {pos[j]}};
  for (std::size_t s = 1; s <= steps; ++s) {
    std::vector<Point2> next = pos;
    for (int attempt = 0; attempt < 32; ++attempt) {
      const std::vector<Point2> cand = config(rng, n, denominator).points();
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = a + 1; b < n && ok; ++b) {
          ok = !strands_collide({{0, 1}, {pos[a], cand[a]}}, {{0, 1}, {pos[b], cand[b]}});
        }
      }
      if (ok) {
        next = cand;
        break;
      }
    }
    const Rational t = make_rational(static_cast<long>(s), static_cast<long>(steps));
    for (std::size_t j = 0; j < n; ++j) {
      out[j].times.push_back(t);
      out[j].vertices.push_back(next[j]);
    }
    pos = std::move(next);
  }
  if (steps == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      out[j].times.push_back(1);
      out[j].vertices.push_back(pos[j]);
    }
  }
  return StrandSet(std::move(out));
}

}  // namespace motgrp::random
