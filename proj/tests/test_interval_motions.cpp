#include <doctest.h>

#include "motgrp/error.hpp"
#include "motgrp/interval_motions.hpp"
#include "motgrp/random.hpp"
#include "motgrp/worldline.hpp"

using namespace motgrp;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
Component1D pt(long p, long d) { return Component1D::point(q(p, d)); }
Component1D iv(long a, long b, long d) { return Component1D::interval(q(a, d), q(b, d)); }

// Independent classifier: one letter per component, plus boundary contact.
std::tuple<std::string, bool, bool> signature(const CompactSubsetI& n) {
  std::string w;
  bool zero = false;
  bool one = false;
  for (const auto& c : n.components()) {
    w += c.lo == c.hi ? 'a' : 'b';
    zero = zero || c.lo == 0;
    one = one || c.hi == 1;
  }
  return {w, zero, one};
}

PLFlow out_and_back(const Rational& from, const Rational& to) {
  const PLHomeo id = PLHomeo::identity(Ambient::Interval);
  const PLHomeo move = PLHomeo::from_knots(Ambient::Interval, {{0, 0}, {from, to}, {1, 1}});
  return PLFlow::from_frames(Ambient::Interval, {0, q(1, 2), 1}, {id, move, id});
}

}  // namespace

TEST_CASE("words") {
  CHECK(word_of(CompactSubsetI()) == "");
  CHECK(word_of(CompactSubsetI({pt(1, 4), iv(3, 4, 8)})) == "ab");
  CHECK(word_of(CompactSubsetI({iv(1, 2, 8), pt(1, 2), iv(5, 6, 8)})) == "bab");
  CHECK_THROWS_AS(CompactSubsetI({iv(1, 4, 8), pt(3, 8)}), Error);
}

TEST_CASE("hom-set cardinality") {
  const CompactSubsetI ab({pt(1, 8), iv(1, 3, 4)});
  const CompactSubsetI ba({iv(1, 4, 8), pt(3, 4)});
  CHECK(hom_cardinality(ab, ab) == 1);
  CHECK(hom_cardinality(ab, ba) == 0);
  CHECK(hom_cardinality(CompactSubsetI({pt(0, 1), pt(1, 2)}), CompactSubsetI({pt(1, 4), pt(1, 2)})) == 0);
  CHECK(hom_cardinality(CompactSubsetI({pt(0, 1), pt(1, 2)}), CompactSubsetI({pt(0, 1), pt(3, 4)})) == 1);

  random::Engine rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = random::compact_subset(rng, 3);
    const auto n2 = random::compact_subset(rng, 3);
    CHECK(hom_cardinality(n, n2) == (signature(n) == signature(n2) ? 1 : 0));
  }
}

TEST_CASE("canonical motions") {
  const CompactSubsetI n({pt(1, 4)});
  CHECK(canonical_motion(n, n) == PLFlow::identity(Ambient::Interval));
  CHECK(canonical_motion(n, CompactSubsetI({pt(3, 4)})).endpoint() ==
        PLHomeo::from_knots(Ambient::Interval, {{0, 0}, {q(1, 4), q(3, 4)}, {1, 1}}));
  const PLHomeo e = canonical_motion(CompactSubsetI({iv(2, 4, 8)}), CompactSubsetI({iv(5, 6, 8)})).endpoint();
  CHECK(e(q(1, 4)) == q(5, 8));
  CHECK(e(q(1, 2)) == q(3, 4));
  CHECK_THROWS_AS(canonical_motion(n, CompactSubsetI({iv(1, 2, 4)})), Error);

  random::Engine rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random::compact_subset(rng, 4);
    auto b = CompactSubsetI(image(random::homeo(rng, Ambient::Interval, 4), a.components()));
    REQUIRE(hom_cardinality(a, b) == 1);
    CHECK(is_motion(canonical_motion(a, b), a, b));
  }
}

TEST_CASE("is_motion") {
  const CompactSubsetI n({pt(1, 4)});
  CHECK(is_motion(PLFlow::identity(Ambient::Interval), n, n));
  CHECK_FALSE(is_motion(PLFlow::identity(Ambient::Interval), n, CompactSubsetI({pt(1, 2)})));
  CHECK_FALSE(is_motion(PLFlow::identity(Ambient::Line), n, n));
}

TEST_CASE("word_of is invariant under every flow") {
  random::Engine rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = random::compact_subset(rng, 4);
    const PLFlow f = random::flow(rng, Ambient::Interval);
    CHECK(word_of(CompactSubsetI(image(f.endpoint(), n.components()))) == word_of(n));
  }
}

TEST_CASE("no random flow realizes an empty hom-set") {
  random::Engine rng(14);
  int searched = 0;
  while (searched < 1000) {
    const auto n = random::compact_subset(rng, 3);
    const auto n2 = random::compact_subset(rng, 3);
    if (hom_cardinality(n, n2) == 1) continue;
    ++searched;
    CHECK_FALSE(is_motion(random::flow(rng, Ambient::Interval), n, n2));
  }
}

TEST_CASE("stationary motions") {
  const CompactSubsetI n({pt(1, 8), iv(1, 3, 4)});
  CHECK(is_stationary(PLFlow::identity(Ambient::Interval), n));
  const CompactSubsetI quarter({pt(1, 4)});
  const PLFlow wander = out_and_back(q(1, 4), q(1, 2));
  REQUIRE(is_motion(wander, quarter, quarter));
  CHECK_FALSE(is_stationary(wander, quarter));
  CHECK_FALSE(worldline(wander, quarter) == WorldlineI::product(Ambient::Interval, quarter.components()));
  // Moves the inside of [1/4,3/4] but keeps both ends fixed.
  const PLFlow wiggle = out_and_back(q(1, 2), q(5, 8));
  const PLHomeo mid = PLHomeo::from_knots(Ambient::Interval, {{0, 0}, {q(1, 4), q(1, 4)}, {q(1, 2), q(5, 8)},
                                                              {q(3, 4), q(3, 4)}, {1, 1}});
  const PLHomeo id = PLHomeo::identity(Ambient::Interval);
  const PLFlow inner = PLFlow::from_frames(Ambient::Interval, {0, q(1, 2), 1}, {id, mid, id});
  const CompactSubsetI band({iv(1, 3, 4)});
  CHECK(is_stationary(inner, band));
  CHECK(worldline(inner, band) == WorldlineI::product(Ambient::Interval, band.components()));
  CHECK_FALSE(is_stationary(wiggle, CompactSubsetI({pt(1, 2)})));
}

TEST_CASE("motion equivalence") {
  const CompactSubsetI n({pt(1, 4)});
  const CompactSubsetI n2({pt(3, 4)});
  const PLFlow c = canonical_motion(n, n2);
  CHECK(motions_equivalent(c, c, n, n2));
  const PLFlow detour = star_compose(c, out_and_back(q(3, 4), q(1, 8)));
  REQUIRE(detour.key_times().size() == 4);
  CHECK(motions_equivalent(c, detour, n, n2));
  try {
    motions_equivalent(c, c, n, CompactSubsetI({pt(1, 2)}));
    FAIL("expected NotAMotion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAMotion);
  }
}

TEST_CASE("motion groupoid quotient satisfies the groupoid axioms") {
  std::vector<CompactSubsetI> objects{CompactSubsetI({pt(1, 8), iv(1, 3, 4)}),
                                      CompactSubsetI({pt(1, 16), iv(1, 7, 8)}),
                                      CompactSubsetI({pt(1, 2), iv(5, 6, 8)}),
                                      CompactSubsetI({pt(0, 1), pt(1, 2)})};
  const auto g = interval_motion_groupoid(objects, 3, 99);
  groupoid::SamplePolicy policy;
  policy.random_samples = 64;
  const auto quo = groupoid::quotient(g.magmoid, interval_motion_congruence(objects), g.ops, policy);
  CHECK(quo.is_groupoid());
  CHECK(quo.axiom_report().ok());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      CHECK(quo.class_count(i, j) == static_cast<std::size_t>(hom_cardinality(objects[i], objects[j])));
    }
  }
}
