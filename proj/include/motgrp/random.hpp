#ifndef MOTGRP_RANDOM_HPP_
#define MOTGRP_RANDOM_HPP_

// Seeded generators of random exact objects, used by the sampled axiom
// checks and by the property tests.

#include <random>
#include <vector>

#include "motgrp/pl_flow.hpp"
#include "motgrp/point_motions.hpp"
#include "motgrp/subset.hpp"

namespace motgrp::random {

using Engine = std::mt19937_64;

// Uniform on {lo + k / denominator : k integer} within [lo, hi].
Rational rational(Engine& rng, const Rational& lo, const Rational& hi, long denominator = 64);

// `count` distinct sorted rationals strictly between lo and hi.
std::vector<Rational> sorted_distinct(Engine& rng, std::size_t count, const Rational& lo,
                                      const Rational& hi, long denominator = 64);

// Orientation-preserving map with up to max_breaks interior breakpoints.
PLHomeo homeo(Engine& rng, Ambient ambient, std::size_t max_breaks = 3);

// Flow with up to max_frames key frames after the identity.
PLFlow flow(Engine& rng, Ambient ambient, std::size_t max_frames = 3, std::size_t max_breaks = 3);

// Compact subset of I with up to max_components components; when
// allow_boundary is set, 0 and/or 1 may belong to it.
CompactSubsetI compact_subset(Engine& rng, std::size_t max_components, bool allow_boundary = true);

// n distinct points in (0,1)^2 with coordinates k / denominator.
PointConfig config(Engine& rng, std::size_t n, long denominator = 32);

// Strand set starting at `start`: `steps` uniformly timed straight moves of
// all points at once to random lattice positions; a step that would make
// two points meet is redrawn, and left stationary if every redraw fails.
StrandSet strands(Engine& rng, const PointConfig& start, std::size_t steps, long denominator = 32);

}  // namespace motgrp::random

#endif  // MOTGRP_RANDOM_HPP_
