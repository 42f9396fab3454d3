#include <doctest.h>

#include <map>
#include <set>

#include "motgrp/graph_paths.hpp"
#include "motgrp/groupoid.hpp"

using namespace motgrp;
using namespace motgrp::groupoid;

namespace {

// Free group words as letter lists (+1 = a, -1 = a^-1, +2 = b, ...), one
// object, composition by plain concatenation (no reduction).
using Word = std::vector<int>;

Groupoid<int, Word> free_group(const std::vector<int>& generators, std::size_t max_len) {
  std::vector<Word> words{{}};
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int g : generators) {
        for (int s : {g, -g}) {
          Word v = w;
          v.push_back(s);
          next.push_back(v);
        }
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  Groupoid<int, Word> g;
  g.magmoid.objects = {0};
  g.magmoid.hom = [words](std::size_t, std::size_t) { return words; };
  g.magmoid.compose = [](const Word& f, const Word& h) {
    Word r = f;
    r.insert(r.end(), h.begin(), h.end());
    return r;
  };
  g.ops.identity = [](std::size_t) { return Word{}; };
  g.ops.inverse = [](std::size_t, std::size_t, const Word& f) {
    Word r(f.rbegin(), f.rend());
    for (int& l : r) l = -l;
    return r;
  };
  return g;
}

Word freely_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (int l : w) s += l > 0 ? 1 : -1;
  return s;
}

SamplePolicy small_policy() {
  SamplePolicy p;
  p.exhaustive_limit = 4096;
  p.random_samples = 512;
  return p;
}

}  // namespace

TEST_CASE("fundamental groupoid of a 2-cycle graph has integer-indexed hom-sets") {
  auto g = std::make_shared<const Graph>(Graph{2, {{0, 1}, {1, 0}}});
  const auto pg = path_groupoid(g, 4);
  const auto q = quotient(pg.magmoid, homotopy_congruence(), pg.ops, small_policy());
  CHECK(q.is_groupoid());

  // Brute force: all letter sequences of length <= 4 that are paths and have
  // no letter next to its own inverse.
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 0}};
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::vector<int>>> reduced;
  std::vector<std::pair<std::vector<int>, std::pair<std::size_t, std::size_t>>> frontier;
  for (std::size_t v = 0; v < 2; ++v) {
    frontier.push_back({{}, {v, v}});
    reduced[{v, v}].insert(std::vector<int>{});
  }
  for (int len = 1; len <= 4; ++len) {
    decltype(frontier) next;
    for (const auto& [w, ends] : frontier) {
      for (int e = 0; e < 2; ++e) {
        for (bool inv : {false, true}) {
          const int code = inv ? -(e + 1) : e + 1;
          const std::size_t from = inv ? edges[e].second : edges[e].first;
          const std::size_t to = inv ? edges[e].first : edges[e].second;
          if (from != ends.second) continue;
          if (!w.empty() && w.back() == -code) continue;
          auto v = w;
          v.push_back(code);
          reduced[{ends.first, to}].insert(v);
          next.push_back({v, {ends.first, to}});
        }
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK(q.class_count(u, v) == reduced[{u, v}].size());
    }
  }
  // Loops at 0 of length <= 4 wind -2..2 times.
  CHECK(q.class_count(0, 0) == 5);
}

TEST_CASE("total and equality congruences") {
  auto g = std::make_shared<const Graph>(Graph{2, {{0, 1}, {1, 0}}});
  const auto pg = path_groupoid(g, 3);
  const auto total = quotient(pg.magmoid, total_congruence<GraphEdgePath>(), pg.ops, small_policy());
  const auto equal = quotient(pg.magmoid, equality_congruence<GraphEdgePath>(), std::nullopt, small_policy());
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK(total.class_count(u, v) <= 1);
      CHECK(equal.class_count(u, v) == pg.magmoid.hom(u, v).size());
    }
  }
  CHECK(total.is_groupoid());
  CHECK_FALSE(equal.is_groupoid());
}

TEST_CASE("a relation that is not compatible with composition is rejected") {
  const auto g = free_group({1}, 3);
  // "Both trivial in exponent or both not": an equivalence relation, but a
  // and a^-1 are related while a a^-1 and a^-1 a^-1 are not.
  const Congruence<Word> zero_or_not{[](std::size_t, std::size_t, const Word& f, const Word& h) {
    return (exponent_sum(f) == 0) == (exponent_sum(h) == 0);
  }};
  try {
    quotient(g.magmoid, zero_or_not, g.ops, small_policy());
    FAIL("expected a congruence violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CongruenceViolation);
  }
}

TEST_CASE("normal subgroup generated by a^2 in the free group on a") {
  const auto g = free_group({1}, 6);
  const auto c = congruence_from_normal_subgroupoid<int, Word>(
      g, [](std::size_t, std::size_t, const Word& w) { return exponent_sum(w) % 2 == 0; }, small_policy());
  const auto words = g.magmoid.hom(0, 0);
  for (std::size_t i = 0; i < words.size(); i += 3) {
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const bool same_parity = (exponent_sum(words[i]) - exponent_sum(words[j])) % 2 == 0;
      CHECK(c.equiv(0, 0, words[i], words[j]) == same_parity);
    }
  }
  const auto q = quotient(g.magmoid, c, g.ops, small_policy());
  CHECK(q.class_count(0, 0) == 2);
  CHECK(q.is_groupoid());
}

TEST_CASE("identities-only and everything subgroupoids") {
  const auto g = free_group({1}, 4);
  const auto id_only = congruence_from_normal_subgroupoid<int, Word>(
      g, [](std::size_t, std::size_t, const Word& w) { return freely_reduce(w).empty(); }, small_policy());
  const auto all = congruence_from_normal_subgroupoid<int, Word>(
      g, [](std::size_t, std::size_t, const Word&) { return true; }, small_policy());
  const auto words = g.magmoid.hom(0, 0);
  for (const Word& a : words) {
    for (const Word& b : {Word{}, Word{1}, Word{1, -1, 1}, Word{-1, -1}}) {
      CHECK(id_only.equiv(0, 0, a, b) == (freely_reduce(a) == freely_reduce(b)));
      CHECK(all.equiv(0, 0, a, b));
    }
  }
}

TEST_CASE("a non-normal subgroup is detected by conjugation") {
  const auto g = free_group({1, 2}, 3);
  auto only_a = [](std::size_t, std::size_t, const Word& w) {
    for (int l : freely_reduce(w)) {
      if (l != 1 && l != -1) return false;
    }
    return true;
  };
  try {
    congruence_from_normal_subgroupoid<int, Word>(g, only_a, small_policy());
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}

namespace {

GroupAction<int, int> cyclic_action(int order, bool swap) {
  GroupAction<int, int> a;
  for (int k = 0; k < order; ++k) a.elements.push_back(k);
  a.identity = 0;
  a.multiply = [order](int q, int p) { return (q + p) % order; };
  a.act = [swap](int p, int s) { return swap && p % 2 == 1 ? 1 - s : s; };
  return a;
}

}  // namespace

TEST_CASE("Z/2 acting on two points by swapping") {
  const auto g = action_groupoid(cyclic_action(2, true), std::vector<int>{0, 1});
  CHECK(g.magmoid.hom(0, 0).size() == 1);
  CHECK(g.magmoid.hom(0, 1).size() == 1);
  CHECK(g.magmoid.hom(1, 0).size() == 1);
  const auto report = check_groupoid_axioms(g, equality_congruence<ActionMorphism<int>>());
  CHECK(report.ok());
  try {
    congruence_from_normal_subgroupoid<int, ActionMorphism<int>>(
        g, [](std::size_t, std::size_t, const ActionMorphism<int>&) { return true; });
    FAIL("expected NotTotallyDisconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTotallyDisconnected);
  }
}

TEST_CASE("trivial and cyclic actions") {
  GroupAction<int, int> trivial;
  trivial.elements = {0};
  trivial.identity = 0;
  trivial.multiply = [](int, int) { return 0; };
  trivial.act = [](int, int s) { return s; };
  const auto discrete = action_groupoid(trivial, std::vector<int>{0, 1, 2});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(discrete.magmoid.hom(i, j).size() == (i == j ? 1u : 0u));
  }
  const auto z3 = action_groupoid(cyclic_action(3, false), std::vector<int>{0});
  CHECK(z3.magmoid.hom(0, 0).size() == 3);
  CHECK(check_groupoid_axioms(z3, equality_congruence<ActionMorphism<int>>()).ok());
}

TEST_CASE("an incompatible action is rejected") {
  GroupAction<int, int> bad;
  bad.elements = {0, 1, 2};
  bad.identity = 0;
  bad.multiply = [](int q, int p) { return (q + p) % 3; };
  bad.act = [](int p, int s) { return p == 0 ? s : (s + 1) % 3; };
  try {
    action_groupoid(bad, std::vector<int>{0, 1, 2});
    FAIL("expected NotAnAction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnAction);
  }
}
