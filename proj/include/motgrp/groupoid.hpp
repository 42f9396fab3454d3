#ifndef MOTGRP_GROUPOID_HPP_
#define MOTGRP_GROUPOID_HPP_

// Magmoids, congruences, quotients and action groupoids.
//
// Hom-sets are generally infinite, so a magmoid here is a finite family of
// objects together with a *sampler* that yields representatives of each
// hom-set, and a congruence is a decidable equivalence oracle. Every axiom
// check is exhaustive when the number of tuples is at most
// SamplePolicy::exhaustive_limit and randomized (seeded) above it. Passing a
// check means "verified on samples", never a proof.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "motgrp/error.hpp"

namespace motgrp::groupoid {

struct SamplePolicy {
  std::size_t exhaustive_limit = 4096;
  std::size_t random_samples = 2048;
  std::uint64_t seed = 0x6d6f74u;
};

template <class Obj, class Mor>
struct Magmoid {
  std::vector<Obj> objects;
  // Representatives of hom(objects[i], objects[j]).
  std::function<std::vector<Mor>(std::size_t, std::size_t)> hom;
  // For f in hom(i,j) and g in hom(j,k): the composite i -> k, f first.
  std::function<Mor(const Mor&, const Mor&)> compose;
};

template <class Mor>
struct Congruence {
  std::function<bool(std::size_t, std::size_t, const Mor&, const Mor&)> equiv;
};

template <class Mor>
struct GroupoidOps {
  std::function<Mor(std::size_t)> identity;
  // f in hom(i,j) -> inverse in hom(j,i)
  std::function<Mor(std::size_t, std::size_t, const Mor&)> inverse;
};

template <class Obj, class Mor>
struct Groupoid {
  Magmoid<Obj, Mor> magmoid;
  GroupoidOps<Mor> ops;
};

struct AxiomReport {
  bool identity_law = true;
  bool associativity = true;
  bool inverse_law = true;
  std::size_t checks = 0;
  std::string first_failure;

  bool ok() const { return identity_law && associativity && inverse_law; }
};

template <class Mor>
Congruence<Mor> equality_congruence() {
  return {[](std::size_t, std::size_t, const Mor& f, const Mor& g) { return f == g; }};
}

template <class Mor>
Congruence<Mor> total_congruence() {
  return {[](std::size_t, std::size_t, const Mor&, const Mor&) { return true; }};
}

namespace detail {

// Calls fn(idx) for index tuples into ranges of the given sizes: every tuple
// when the product is small, otherwise a seeded random selection.
template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& sizes, const SamplePolicy& policy,
                    std::mt19937_64& rng, Fn&& fn) {
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return;
    if (total > policy.exhaustive_limit) break;
    total *= s;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  if (total <= policy.exhaustive_limit) {
    for (std::size_t n = 0; n < total; ++n) {
      std::size_t rest = n;
      for (std::size_t d = 0; d < sizes.size(); ++d) {
        idx[d] = rest % sizes[d];
        rest /= sizes[d];
      }
      fn(idx);
    }
    return;
  }
  for (std::size_t n = 0; n < policy.random_samples; ++n) {
    for (std::size_t d = 0; d < sizes.size(); ++d) {
      idx[d] = std::uniform_int_distribution<std::size_t>(0, sizes[d] - 1)(rng);
    }
    fn(idx);
  }
}

template <class Mor>
using HomTable = std::vector<std::vector<std::vector<Mor>>>;

template <class Obj, class Mor>
HomTable<Mor> tabulate(const Magmoid<Obj, Mor>& m) {
  const std::size_t n = m.objects.size();
  HomTable<Mor> table(n, std::vector<std::vector<Mor>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = m.hom(i, j);
  }
  return table;
}

template <class Mor>
AxiomReport check_axioms(const HomTable<Mor>& hom,
                         const std::function<Mor(const Mor&, const Mor&)>& compose,
                         const Congruence<Mor>& c, const GroupoidOps<Mor>& ops,
                         const SamplePolicy& policy) {
  AxiomReport report;
  std::mt19937_64 rng(policy.seed ^ 0xa5a5u);
  const std::size_t n = hom.size();
  auto note = [&](bool& flag, const std::string& what) {
    if (flag) report.first_failure = report.first_failure.empty() ? what : report.first_failure;
    flag = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Mor id_i = ops.identity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Mor id_j = ops.identity(j);
      for (const Mor& f : hom[i][j]) {
        ++report.checks;
        if (!c.equiv(i, j, compose(id_i, f), f) || !c.equiv(i, j, compose(f, id_j), f)) {
          note(report.identity_law, "identity law at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
        const Mor inv = ops.inverse(i, j, f);
        if (!c.equiv(i, i, compose(f, inv), id_i) || !c.equiv(j, j, compose(inv, f), id_j)) {
          note(report.inverse_law, "inverse law at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          for_each_tuple({hom[i][j].size(), hom[j][k].size(), hom[k][l].size()}, policy, rng,
                         [&](const std::vector<std::size_t>& t) {
                           ++report.checks;
                           const Mor& f = hom[i][j][t[0]];
                           const Mor& g = hom[j][k][t[1]];
                           const Mor& h = hom[k][l][t[2]];
                           if (!c.equiv(i, l, compose(compose(f, g), h),
                                        compose(f, compose(g, h)))) {
                             note(report.associativity, "associativity");
                           }
                         });
        }
      }
    }
  }
  return report;
}

}  // namespace detail

// A magmoid divided by a verified congruence. Each hom-set's sampled
// representatives are partitioned into classes; the first member of each
// class (in sampler order) is its canonical representative.
template <class Obj, class Mor>
class Quotient {
 public:
  Quotient(Magmoid<Obj, Mor> m, Congruence<Mor> c, detail::HomTable<Mor> hom,
           std::optional<GroupoidOps<Mor>> ops, AxiomReport report)
      : magmoid_(std::move(m)), congruence_(std::move(c)), hom_(std::move(hom)),
        ops_(std::move(ops)), report_(std::move(report)) {
    const std::size_t n = hom_.size();
    classes_.assign(n, std::vector<std::vector<Mor>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const Mor& f : hom_[i][j]) {
          if (!class_index(i, j, f)) classes_[i][j].push_back(f);
        }
      }
    }
  }

  std::size_t object_count() const { return magmoid_.objects.size(); }
  const Obj& object(std::size_t i) const { return magmoid_.objects.at(i); }

  const std::vector<Mor>& representatives(std::size_t i, std::size_t j) const {
    return classes_.at(i).at(j);
  }
  std::size_t class_count(std::size_t i, std::size_t j) const {
    return representatives(i, j).size();
  }

  std::optional<std::size_t> class_index(std::size_t i, std::size_t j, const Mor& f) const {
    const auto& reps = classes_.at(i).at(j);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (congruence_.equiv(i, j, reps[r], f)) return r;
    }
    return std::nullopt;
  }

  bool equivalent(std::size_t i, std::size_t j, const Mor& f, const Mor& g) const {
    return congruence_.equiv(i, j, f, g);
  }

  Mor compose(const Mor& f, const Mor& g) const { return magmoid_.compose(f, g); }

  bool is_groupoid() const { return ops_.has_value(); }

  Mor identity(std::size_t i) const {
    if (!ops_) fail(ErrorKind::InvalidValue, "quotient is not a groupoid");
    return ops_->identity(i);
  }

  Mor inverse(std::size_t i, std::size_t j, const Mor& f) const {
    if (!ops_) fail(ErrorKind::InvalidValue, "quotient is not a groupoid");
    return ops_->inverse(i, j, f);
  }

  const AxiomReport& axiom_report() const { return report_; }

  // Re-runs G1-G3 on the class representatives.
  AxiomReport check_groupoid_axioms(const SamplePolicy& policy = {}) const {
    if (!ops_) fail(ErrorKind::InvalidValue, "quotient is not a groupoid");
    return detail::check_axioms<Mor>(classes_, magmoid_.compose, congruence_, *ops_, policy);
  }

 private:
  Magmoid<Obj, Mor> magmoid_;
  Congruence<Mor> congruence_;
  detail::HomTable<Mor> hom_;
  std::vector<std::vector<std::vector<Mor>>> classes_;
  std::optional<GroupoidOps<Mor>> ops_;
  AxiomReport report_;
};

// Verifies that c is an equivalence relation on every sampled hom-set and is
// compatible with composition, then forms the quotient. When ops are given
// and G1-G3 hold on the classes, the result exposes identity and inverse.
// Throws Error(CongruenceViolation) on a failed sample.
template <class Obj, class Mor>
Quotient<Obj, Mor> quotient(const Magmoid<Obj, Mor>& m, const Congruence<Mor>& c,
                            std::optional<GroupoidOps<std::type_identity_t<Mor>>> ops = std::nullopt,
                            const SamplePolicy& policy = {}) {
  auto hom = detail::tabulate(m);
  const std::size_t n = hom.size();
  std::mt19937_64 rng(policy.seed);
  auto violation = [](const std::string& what) { fail(ErrorKind::CongruenceViolation, what); };

  // Equivalence axioms, and a class partition for the compatibility check.
  std::vector<std::vector<std::vector<std::size_t>>> class_of(
      n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& h = hom[i][j];
      for (const Mor& f : h) {
        if (!c.equiv(i, j, f, f)) violation("relation is not reflexive");
      }
      detail::for_each_tuple({h.size(), h.size(), h.size()}, policy, rng,
                             [&](const std::vector<std::size_t>& t) {
                               const bool ab = c.equiv(i, j, h[t[0]], h[t[1]]);
                               if (ab != c.equiv(i, j, h[t[1]], h[t[0]])) {
                                 violation("relation is not symmetric");
                               }
                               if (ab && c.equiv(i, j, h[t[1]], h[t[2]]) &&
                                   !c.equiv(i, j, h[t[0]], h[t[2]])) {
                                 violation("relation is not transitive");
                               }
                             });
      auto& cls = class_of[i][j];
      std::vector<std::size_t> reps;
      for (std::size_t a = 0; a < h.size(); ++a) {
        std::size_t found = reps.size();
        for (std::size_t r = 0; r < reps.size(); ++r) {
          if (c.equiv(i, j, h[reps[r]], h[a])) {
            found = r;
            break;
          }
        }
        if (found == reps.size()) reps.push_back(a);
        cls.push_back(found);
      }
    }
  }

  auto pick_equivalent = [&](std::size_t i, std::size_t j, std::size_t a) {
    std::vector<std::size_t> same;
    for (std::size_t b = 0; b < class_of[i][j].size(); ++b) {
      if (class_of[i][j][b] == class_of[i][j][a]) same.push_back(b);
    }
    return same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& hf = hom[i][j];
        const auto& hg = hom[j][k];
        detail::for_each_tuple(
            {hf.size(), hg.size()}, policy, rng, [&](const std::vector<std::size_t>& t) {
              const std::size_t f2 = pick_equivalent(i, j, t[0]);
              const std::size_t g2 = pick_equivalent(j, k, t[1]);
              if (!c.equiv(i, k, m.compose(hf[t[0]], hg[t[1]]), m.compose(hf[f2], hg[g2]))) {
                violation("relation is not compatible with composition");
              }
            });
      }
    }
  }

  AxiomReport report;
  if (ops) {
    report = detail::check_axioms<Mor>(hom, m.compose, c, *ops, policy);
    if (!report.ok()) ops.reset();
  }
  return Quotient<Obj, Mor>(m, c, std::move(hom), std::move(ops), std::move(report));
}

// G1-G3 for a groupoid whose morphisms are compared by the given congruence.
template <class Obj, class Mor>
AxiomReport check_groupoid_axioms(const Groupoid<Obj, Mor>& g, const Congruence<Mor>& c,
                                  const SamplePolicy& policy = {}) {
  return detail::check_axioms<Mor>(detail::tabulate(g.magmoid), g.magmoid.compose, c, g.ops,
                                   policy);
}

// f ~ f' iff f followed by inverse(f') lies in h. h must be wide, totally
// disconnected and normal; each is checked on samples (Error NotNormal /
// NotTotallyDisconnected, or CongruenceViolation when h misses an identity).
template <class Obj, class Mor>
Congruence<Mor> congruence_from_normal_subgroupoid(
    const Groupoid<Obj, Mor>& g,
    std::function<bool(std::size_t, std::size_t, const Mor&)> in_h,
    const SamplePolicy& policy = {}) {
  const auto hom = detail::tabulate(g.magmoid);
  const std::size_t n = hom.size();
  std::mt19937_64 rng(policy.seed ^ 0x51u);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_h(i, i, g.ops.identity(i))) {
      fail(ErrorKind::CongruenceViolation, "subgroupoid is not wide at object " +
                                               std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Mor& f : hom[i][j]) {
        if (in_h(i, j, f)) {
          fail(ErrorKind::NotTotallyDisconnected,
               "subgroupoid relates objects " + std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Mor> loops;
    for (const Mor& k : hom[i][i]) {
      if (in_h(i, i, k)) loops.push_back(k);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& hf = hom[i][j];
      detail::for_each_tuple({hf.size(), loops.size()}, policy, rng,
                             [&](const std::vector<std::size_t>& t) {
                               const Mor& f = hf[t[0]];
                               const Mor conj = g.magmoid.compose(
                                   g.magmoid.compose(g.ops.inverse(i, j, f), loops[t[1]]), f);
                               if (!in_h(j, j, conj)) {
                                 fail(ErrorKind::NotNormal, "conjugate escapes subgroupoid at " +
                                                                std::to_string(j));
                               }
                             });
    }
  }
  auto compose = g.magmoid.compose;
  auto inverse = g.ops.inverse;
  return {[compose, inverse, in_h](std::size_t i, std::size_t j, const Mor& f, const Mor& f2) {
    return in_h(i, i, compose(f, inverse(i, j, f2)));
  }};
}

template <class G, class S>
struct GroupAction {
  std::vector<G> elements;
  G identity;
  // multiply(q, p) is the product qp: p acts first.
  std::function<G(const G&, const G&)> multiply;
  std::function<S(const G&, const S&)> act;
};

template <class G>
struct ActionMorphism {
  G element;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const ActionMorphism&) const = default;
};

// Objects are the points of `set`; morphisms are triples (p, s, p.s).
// Throws Error(NotAnAction) if the identity or compatibility axiom fails on
// a sample, or an element has no inverse in `elements`.
template <class G, class S>
Groupoid<S, ActionMorphism<G>> action_groupoid(const GroupAction<G, S>& action,
                                               std::vector<S> set,
                                               const SamplePolicy& policy = {}) {
  std::mt19937_64 rng(policy.seed ^ 0xac7u);
  const auto& el = action.elements;
  auto index_of = [&set](const S& s) -> std::size_t {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] == s) return i;
    }
    fail(ErrorKind::NotAnAction, "action leaves the set");
  };
  for (const S& s : set) {
    if (!(action.act(action.identity, s) == s)) {
      fail(ErrorKind::NotAnAction, "identity does not act trivially");
    }
  }
  detail::for_each_tuple({el.size(), el.size(), set.size()}, policy, rng,
                         [&](const std::vector<std::size_t>& t) {
                           const G& p = el[t[0]];
                           const G& q = el[t[1]];
                           const S& s = set[t[2]];
                           if (!(action.act(q, action.act(p, s)) ==
                                 action.act(action.multiply(q, p), s))) {
                             fail(ErrorKind::NotAnAction, "action is not compatible with product");
                           }
                         });

  // Action table: target index of each (element, point).
  std::vector<std::vector<std::size_t>> image(el.size(), std::vector<std::size_t>(set.size()));
  std::vector<std::size_t> inverse_of(el.size());
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t s = 0; s < set.size(); ++s) image[a][s] = index_of(action.act(el[a], set[s]));
    bool found = false;
    for (std::size_t b = 0; b < el.size() && !found; ++b) {
      if (action.multiply(el[b], el[a]) == action.identity) {
        inverse_of[a] = b;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::NotAnAction, "element without inverse");
  }
  auto element_index = [el](const G& g) {
    for (std::size_t a = 0; a < el.size(); ++a) {
      if (el[a] == g) return a;
    }
    fail(ErrorKind::NotAnAction, "element outside the group");
  };

  using M = ActionMorphism<G>;
  Groupoid<S, M> out;
  out.magmoid.objects = set;
  out.magmoid.hom = [el, image](std::size_t i, std::size_t j) {
    std::vector<M> ms;
    for (std::size_t a = 0; a < el.size(); ++a) {
      if (image[a][i] == j) ms.push_back(M{el[a], i, j});
    }
    return ms;
  };
  out.magmoid.compose = [mul = action.multiply](const M& f, const M& g) {
    if (f.target != g.source) fail(ErrorKind::InvalidValue, "morphisms are not composable");
    return M{mul(g.element, f.element), f.source, g.target};
  };
  out.ops.identity = [e = action.identity](std::size_t i) { return M{e, i, i}; };
  out.ops.inverse = [el, inverse_of, element_index](std::size_t, std::size_t, const M& f) {
    return M{el[inverse_of[element_index(f.element)]], f.target, f.source};
  };
  return out;
}

}  // namespace motgrp::groupoid

#endif  // MOTGRP_GROUPOID_HPP_
