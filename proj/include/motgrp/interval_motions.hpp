#ifndef MOTGRP_INTERVAL_MOTIONS_HPP_
#define MOTGRP_INTERVAL_MOTIONS_HPP_

// Motions of compact finite-component subsets of I = [0,1].
//
// A subset is described by its word over {a, b} (a per point, b per closed
// interval, in ambient order) and by which of 0, 1 it contains. There is
// exactly one motion class N -> N' when both agree, and none otherwise.

#include <cstddef>
#include <string>
#include <vector>

#include "motgrp/groupoid.hpp"
#include "motgrp/pl_flow.hpp"
#include "motgrp/subset.hpp"

namespace motgrp {

std::string word_of(const CompactSubsetI& n);

// 1 iff word_of agrees and N, N' meet {0,1} in the same points; else 0.
int hom_cardinality(const CompactSubsetI& n, const CompactSubsetI& n2);

// Two-frame flow whose endpoint is the order-matching PL map taking the
// component endpoints of n to those of n2 (0 and 1 fixed).
// Throws Error(NoMotionExists) when hom_cardinality is 0.
PLFlow canonical_motion(const CompactSubsetI& n, const CompactSubsetI& n2);

// f_1(n) = n2 exactly. False for flows not on the interval.
bool is_motion(const PLFlow& f, const CompactSubsetI& n, const CompactSubsetI& n2);

// Every endpoint of every component of n has constant trajectory. With PL
// trajectories this is decided by the values at the key times.
bool is_stationary(const PLFlow& f, const CompactSubsetI& n);

// Any two motions N -> N' of compact finite-component subsets of I are
// equivalent, so this returns true once both are verified to be motions.
// Throws Error(NotAMotion).
bool motions_equivalent(const PLFlow& f, const PLFlow& g, const CompactSubsetI& n,
                        const CompactSubsetI& n2);

// A motion between members of a fixed object family.
struct IntervalMotion {
  PLFlow flow;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const IntervalMotion&) const = default;
};

// Motion magmoid over `objects`: hom(i,j) holds the canonical motion plus
// `detours` further motions (canonical motion star-composed with loops that
// wander and come back), composition is star_compose, identity the
// identity flow, inverse the reverse flow.
groupoid::Groupoid<CompactSubsetI, IntervalMotion> interval_motion_groupoid(
    std::vector<CompactSubsetI> objects, std::size_t detours, std::uint64_t seed);

groupoid::Congruence<IntervalMotion> interval_motion_congruence(
    const std::vector<CompactSubsetI>& objects);

}  // namespace motgrp

#endif  // MOTGRP_INTERVAL_MOTIONS_HPP_
