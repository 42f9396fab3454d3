// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "../support/b3_oracle.hpp"
#include "motgrp/braid.hpp"
#include "motgrp/error.hpp"
#include "motgrp/interval_motions.hpp"
#include "motgrp/point_motions.hpp"
#include "motgrp/random.hpp"
#include "motgrp/render.hpp"
#include "motgrp/worldline.hpp"

using namespace motgrp;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Word over {a, b} plus boundary contact, computed from the components.
std::tuple<std::string, bool, bool> signature(const CompactSubsetI& n) {
  std::string w;
  for (const auto& c : n.components()) w += c.lo == c.hi ? 'a' : 'b';
  const auto& cs = n.components();
  return {w, !cs.empty() && cs.front().lo == 0, !cs.empty() && cs.back().hi == 1};
}

// Boundary points of n together with 0 and 1, sorted and distinct.
std::vector<Rational> anchors(const CompactSubsetI& n) {
  std::vector<Rational> p{0};
  for (const Rational& x : n.boundary_points()) {
    if (x != p.back()) p.push_back(x);
  }
  if (p.back() != 1) p.push_back(1);
  return p;
}

// Increasing map of I fixing every anchor, bent at random inside the gaps.
PLHomeo fixing(random::Engine& rng, const std::vector<Rational>& fixed) {
  std::vector<Knot> knots;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    knots.push_back({fixed[i], fixed[i]});
    const Rational& a = fixed[i];
    const Rational& b = fixed[i + 1];
    if (coin(rng)) {
      const Rational x = a + (b - a) * random::rational(rng, q(1, 8), q(7, 8), 8);
      const Rational y = a + (b - a) * random::rational(rng, q(1, 8), q(7, 8), 8);
      knots.push_back({x, y});
    }
  }
  knots.push_back({1, 1});
  return PLHomeo::from_knots(Ambient::Interval, std::move(knots));
}

// Z-preserving PL map of the line with translation number `shift`.
PLHomeo z_preserving(random::Engine& rng, long shift) {
  std::vector<Knot> knots;
  for (long k = -2; k <= 2; ++k) {
    knots.push_back({k, k + shift});
    if (k < 2) {
      knots.push_back({k + random::rational(rng, q(1, 8), q(7, 8), 8),
                       k + shift + random::rational(rng, q(1, 8), q(7, 8), 8)});
    }
  }
  // Unit-slope tails.
  knots.insert(knots.begin(), {-3, -3 + shift});
  knots.push_back({3, 3 + shift});
  return PLHomeo::from_knots(Ambient::Line, std::move(knots));
}

PLHomeo reflection() { return PLHomeo::from_knots(Ambient::CircleLift, {{0, 0}, {1, -1}}, -1); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

StrandSet full_twist() {
  const Point2 l{q(1, 4), q(1, 2)};
  const Point2 r{q(3, 4), q(1, 2)};
  return box_compose(half_twist(l, r), half_twist(l, r));
}

// 1
void interval_classification() {
  random::Engine rng(101);
  int positive = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = random::compact_subset(rng, 4);
    // Half the pairs are images of n, so both answers occur often.
    const auto n2 = trial % 2 == 0 ? random::compact_subset(rng, 4)
                                   : CompactSubsetI(image(random::homeo(rng, Ambient::Interval, 4), n.components()));
    const int k = hom_cardinality(n, n2);
    expect(k == (signature(n) == signature(n2) ? 1 : 0), "hom_cardinality disagrees with the word criterion");
    if (k == 1) {
      ++positive;
      expect(is_motion(canonical_motion(n, n2), n, n2), "canonical motion misses its target");
    }
  }
  expect(positive >= 250, "too few nonempty hom-sets sampled");
}

// 2
void worldline_concatenation() {
  random::Engine rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const PLFlow f = random::flow(rng, Ambient::Interval);
    const PLFlow g = random::flow(rng, Ambient::Interval);
    const auto n = random::compact_subset(rng, 4);
    const WorldlineI joined = concat_worldlines(worldline(f, n), worldline(g, image(f.endpoint(), n.components())));
    expect(worldline(star_compose(f, g), n) == joined, "worldline of g*f is not the concatenation");
  }
}

// 3
void flow_algebra() {
  random::Engine rng(103);
  const Ambient ambients[] = {Ambient::Interval, Ambient::Line, Ambient::CircleLift};
  for (int trial = 0; trial < 200; ++trial) {
    const Ambient a = ambients[trial % 3];
    const PLFlow f = random::flow(rng, a);
    const PLFlow g = random::flow(rng, a);
    expect(reverse(reverse(f)) == f, "reverse is not an involution");
    expect(star_compose(f, g).endpoint() == compose(g.endpoint(), f.endpoint()), "(g*f)_1 != g_1 o f_1");
    const PLFlow cancel = dot_compose(f, pointwise_inverse(f));
    for (const PLHomeo& h : cancel.frames()) expect(h.is_identity(), "f^-1 . f has a non-identity frame");
  }
}

// 4
void braid_word_problem() {
  expect(normal_form(BraidWord(3, {1, 2, 1})) == normal_form(BraidWord(3, {2, 1, 2})), "braid relation");
  expect(normal_form(BraidWord(4, {1, 3})) == normal_form(BraidWord(4, {3, 1})), "far commutation in B4");
  expect(!(normal_form(BraidWord(4, {1, 2})) == normal_form(BraidWord(4, {2, 1}))), "s1 s2 = s2 s1 in B4");

  testing::B3RewritingOracle oracle;
  std::map<std::string, std::size_t> class_by_nf;
  std::map<std::size_t, std::string> nf_by_class;
  for (int len = 0; len <= 6; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << (2 * len)); ++code) {
      const auto letters = testing::B3RewritingOracle::decode(len, code);
      const std::string nf = normal_form(BraidWord(3, letters)).to_string();
      const std::size_t cls = oracle.class_of(letters);
      expect(class_by_nf.emplace(nf, cls).first->second == cls, "normal form merges oracle classes");
      expect(nf_by_class.emplace(cls, nf).first->second == nf, "normal form splits an oracle class");
    }
  }

  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> letters;
    for (int i = 0; i < trial % 15; ++i) letters.push_back(std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
    const BraidWord w(2, letters);
    const GarsideNormalForm nf = normal_form(w);
    expect(nf.factors.empty() && nf.delta_power == w.exponent_sum(), "B2 class is not the exponent sum");
  }
}

// 5
void full_twist_kernel() {
  const StrandSet twist = full_twist();
  const BraidWord w = braid_word_of(twist);
  expect(normal_form(w) == normal_form(BraidWord(2, {1, 1})), "full twist is not s1^2");
  expect(!is_trivial(w), "full twist is trivial");
  expect(permutation_of(w).is_identity(), "full twist permutes the points");
  expect(twist.end() == twist.start(), "full twist does not return to its start");
}

// 6
void extraction_homomorphism() {
  random::Engine rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const StrandSet f = random::strands(rng, random::config(rng, n), 2);
    const StrandSet g = random::strands(rng, f.end(), 2);
    expect(normal_form(braid_word_of(box_compose(f, g))) ==
               normal_form(compose(braid_word_of(f), braid_word_of(g))),
           "extraction is not a homomorphism");
  }
}

// 7
void integer_classes() {
  for (long n = -3; n <= 3; ++n) {
    expect(translation_class(translation_flow(Ambient::Line, n)) == n, "x + tn has the wrong class");
  }
  random::Engine rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const long a = std::uniform_int_distribution<long>(-3, 3)(rng);
    const long b = std::uniform_int_distribution<long>(-3, 3)(rng);
    const PLFlow f = PLFlow::two_frame(z_preserving(rng, a));
    const PLFlow g = PLFlow::two_frame(z_preserving(rng, b));
    expect(translation_class(f) == a && translation_class(g) == b, "translation class of a bent map");
    expect(translation_class(star_compose(f, g)) == a + b, "translation class is not additive");
  }
  for (long k = -2; k <= 2; ++k) {
    const PLFlow spin = translation_flow(Ambient::CircleLift, k);
    for (const Rational& p : {q(0), q(1, 3), q(5, 7)}) {
      expect(winding_class(spin, p) == k, "k-fold rotation has the wrong winding class");
    }
  }
}

// 8
void circle_mapping_classes() {
  random::Engine rng(108);
  auto lift = [&] {
    const PLHomeo h = random::homeo(rng, Ambient::CircleLift, 3);
    return std::bernoulli_distribution(0.5)(rng) ? compose(h, reflection()) : h;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const PLHomeo a = lift();
    const PLHomeo b = lift();
    expect(circle_degree(compose(a, b)) == circle_degree(a) * circle_degree(b), "degree is not multiplicative");
  }
  expect(circle_degree(reflection()) == -1, "reflection has degree +1");
  expect(circle_degree(compose(reflection(), reflection())) == 1, "two reflections do not compose to +1");
}

// 9
void alexander_trick() {
  random::Engine rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    const PLHomeo h = random::homeo(rng, Ambient::Interval, 5);
    const PLFlow f = alexander_flow(h);
    expect(f.frames().front().is_identity() && f.key_times().front() == 0, "coning flow does not start at id");
    expect(f.endpoint() == h, "coning flow does not end at h");
  }
}

// 10
void stationary_product() {
  random::Engine rng(110);
  const PLHomeo id = PLHomeo::identity(Ambient::Interval);
  int stationary = 0;
  int moving = 0;
  while (stationary < 100 || moving < 100) {
    const auto n = random::compact_subset(rng, 3, false);
    if (n.empty()) continue;
    const auto fixed = anchors(n);
    if (stationary < 100) {
      const PLFlow f = PLFlow::from_frames(Ambient::Interval, {0, q(1, 3), q(2, 3), 1},
                                           {id, fixing(rng, fixed), fixing(rng, fixed), fixing(rng, fixed)});
      expect(is_stationary(f, n), "a flow fixing every boundary point is not stationary");
      expect(worldline(f, n) == WorldlineI::product(Ambient::Interval, n.components()),
             "stationary worldline differs from N x I");
      ++stationary;
    }
    if (moving < 100) {
      // Push one boundary point of n inside its gap and bring it back.
      const std::size_t i = 1 + std::uniform_int_distribution<std::size_t>(0, fixed.size() - 3)(rng);
      std::vector<Knot> knots;
      for (std::size_t k = 0; k < fixed.size(); ++k) knots.push_back({fixed[k], fixed[k]});
      Rational target = fixed[i];
      while (target == fixed[i]) {
        target = fixed[i - 1] + (fixed[i + 1] - fixed[i - 1]) * random::rational(rng, q(1, 8), q(7, 8), 8);
      }
      knots[i].y = target;
      const PLHomeo push = PLHomeo::from_knots(Ambient::Interval, std::move(knots));
      const PLFlow f = PLFlow::from_frames(Ambient::Interval, {0, q(1, 2), 1}, {id, push, id});
      expect(is_motion(f, n, n), "out-and-back flow is not a motion N -> N");
      expect(!is_stationary(f, n), "out-and-back flow is stationary");
      expect(!(worldline(f, n) == WorldlineI::product(Ambient::Interval, n.components())),
             "moving worldline equals N x I");
      ++moving;
    }
  }
}

// 11
void groupoid_axioms() {
  groupoid::SamplePolicy policy;
  policy.random_samples = 64;

  const std::vector<CompactSubsetI> intervals{
      CompactSubsetI({Component1D::point(q(1, 8)), Component1D::interval(q(1, 4), q(3, 4))}),
      CompactSubsetI({Component1D::point(q(1, 16)), Component1D::interval(q(1, 8), q(7, 8))}),
      CompactSubsetI({Component1D::point(q(1, 2)), Component1D::interval(q(5, 8), q(3, 4))}),
      CompactSubsetI({Component1D::point(0), Component1D::point(q(1, 2))})};
  const auto im = interval_motion_groupoid(intervals, 3, 111);
  const auto iq = groupoid::quotient(im.magmoid, interval_motion_congruence(intervals), im.ops, policy);
  expect(iq.is_groupoid() && iq.axiom_report().ok(), "interval motion quotient fails G1-G3");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      expect(im.magmoid.hom(i, j).size() <= 20, "too many sampled morphisms");
      expect(iq.class_count(i, j) == static_cast<std::size_t>(hom_cardinality(intervals[i], intervals[j])),
             "interval quotient has the wrong number of classes");
    }
  }

  const std::vector<PointConfig> configs{row_config(2), PointConfig({{q(1, 4), q(1, 4)}, {q(3, 4), q(3, 4)}}),
                                         PointConfig({{q(3, 8), q(5, 8)}, {q(5, 8), q(1, 8)}})};
  const auto sm = strand_groupoid(configs, 2, 112);
  const auto sq = groupoid::quotient(sm.magmoid, strand_congruence(), sm.ops, policy);
  expect(sq.is_groupoid() && sq.axiom_report().ok(), "strand quotient fails G1-G3");
}

// 12
void non_isotopy_family() {
  const Rational x = q(1, 2);
  std::vector<PLHomeo> maps;
  for (long k = 1; k <= 10; ++k) maps.push_back(two_segment_map(x, q(k, 11)));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    expect(maps[i](x) == q(static_cast<long>(i) + 1, 11), "phi does not send x to x'");
    for (const Knot& k : maps[i].knots()) expect(k.x >= 0 && k.y >= 0, "knot outside I");
    for (std::size_t j = 0; j < i; ++j) expect(!(maps[i] == maps[j]), "two maps of the family coincide");
  }
}

// 13
void golden_pictures() {
  const std::string dir = MOTGRP_GOLDEN_DIR;
  RenderSpec spec;
  spec.kind = RenderKind::Flare;
  expect(render(PLFlow::identity(Ambient::Interval), std::nullopt, spec) == read_file(dir + "/identity_flare.svg"),
         "identity flare differs from the golden file");
  spec.kind = RenderKind::BraidDiagram;
  expect(render(full_twist(), spec) == read_file(dir + "/full_twist_braid.svg"),
         "full twist diagram differs from the golden file");
  const CompactSubsetI n({Component1D::point(q(1, 4))});
  const PLFlow c = canonical_motion(n, CompactSubsetI({Component1D::point(q(3, 4))}));
  spec.kind = RenderKind::Worldline;
  expect(render_worldline(worldline(c, n), spec) == read_file(dir + "/canonical_motion_worldline.svg"),
         "canonical motion worldline differs from the golden file");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"interval motion classification", interval_classification},
      {"worldline concatenation", worldline_concatenation},
      {"flow algebra", flow_algebra},
      {"braid word problem", braid_word_problem},
      {"full twist kernel example", full_twist_kernel},
      {"extraction homomorphism", extraction_homomorphism},
      {"integer classes", integer_classes},
      {"circle mapping classes", circle_mapping_classes},
      {"Alexander trick", alexander_trick},
      {"stationary motions and product worldlines", stationary_product},
      {"groupoid axioms", groupoid_axioms},
      {"non-isotopy family", non_isotopy_family},
      {"rendering determinism", golden_pictures},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (detail.empty() ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << " ("
              << ms.count() << " ms)";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
    failed += detail.empty() ? 0 : 1;
  }
  return failed;
}
