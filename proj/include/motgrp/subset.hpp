#ifndef MOTGRP_SUBSET_HPP_
#define MOTGRP_SUBSET_HPP_

#include <string>
#include <vector>

#include "motgrp/rational.hpp"

namespace motgrp {

// A point (lo == hi) or a closed interval [lo, hi] of a 1-D ambient.
struct Component1D {
  Rational lo;
  Rational hi;

  static Component1D point(const Rational& x) { return {x, x}; }
  static Component1D interval(const Rational& a, const Rational& b) { return {a, b}; }
  bool is_point() const { return lo == hi; }

  bool operator==(const Component1D&) const = default;
};

// Compact subset of I = [0,1] with finitely many components: a sorted list
// of pairwise disjoint points and closed intervals.
class CompactSubsetI {
 public:
  // Sorts the components; throws Error(InvalidValue) if any lies outside
  // [0,1], an interval is degenerate, or two components meet.
  explicit CompactSubsetI(std::vector<Component1D> components);
  CompactSubsetI() = default;

  const std::vector<Component1D>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool contains0() const;
  bool contains1() const;

  // Component endpoints in ambient order, each point listed once.
  std::vector<Rational> boundary_points() const;

  bool operator==(const CompactSubsetI&) const = default;

  std::string to_string() const;

 private:
  std::vector<Component1D> components_;
};

}  // namespace motgrp

#endif  // MOTGRP_SUBSET_HPP_
