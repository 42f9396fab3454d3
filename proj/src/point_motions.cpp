#include "motgrp/point_motions.hpp"

#include <algorithm>
#include <map>

#include "motgrp/error.hpp"
#include "motgrp/random.hpp"

namespace motgrp {

namespace {

bool interior(const Point2& p) { return p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1; }

Point2 lerp(const Point2& a, const Point2& b, const Rational& s) {
  return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

// Two points moving linearly over the same time interval, with differences
// d0 at the start and d1 at the end, meet iff the difference vanishes at an
// end or d0 and d1 point in opposite directions.
bool difference_vanishes(const Point2& d0, const Point2& d1) {
  const bool zero0 = d0.x == 0 && d0.y == 0;
  const bool zero1 = d1.x == 0 && d1.y == 0;
  if (zero0 || zero1) return true;
  const Rational cross = d0.x * d1.y - d0.y * d1.x;
  const Rational dot = d0.x * d1.x + d0.y * d1.y;
  return cross == 0 && dot < 0;
}

std::vector<Rational> union_times(const std::vector<Strand>& strands) {
  std::vector<Rational> ts;
  for (const Strand& s : strands) ts.insert(ts.end(), s.times.begin(), s.times.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Strand drop_affine(Strand s) {
  Strand out;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (i > 0 && i + 1 < s.times.size()) {
      const Rational& t0 = out.times.back();
      const Point2& p0 = out.vertices.back();
      const Rational s_mid = (s.times[i] - t0) / (s.times[i + 1] - t0);
      if (lerp(p0, s.vertices[i + 1], s_mid) == s.vertices[i]) continue;
    }
    out.times.push_back(s.times[i]);
    out.vertices.push_back(s.vertices[i]);
  }
  return out;
}

Point2 diff(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

// Point c lies on the closed segment [a,b].
bool on_segment(const Point2& a, const Point2& b, const Point2& c) {
  return difference_vanishes(diff(a, c), diff(b, c));
}

}  // namespace

PointConfig::PointConfig(std::vector<Point2> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!interior(points_[i])) fail(ErrorKind::InvalidValue, "configuration point outside (0,1)^2");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) fail(ErrorKind::InvalidValue, "configuration points repeat");
    }
  }
}

bool PointConfig::same_set(const PointConfig& other) const {
  auto a = points_;
  auto b = other.points_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Point2 Strand::at(const Rational& t) const {
  if (t < 0 || t > 1) fail(ErrorKind::OutOfDomain, "strand time outside [0,1]");
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times.begin());
  if (times[k] == t) return vertices[k];
  return lerp(vertices[k - 1], vertices[k], (t - times[k - 1]) / (times[k] - times[k - 1]));
}

bool strands_collide(const Strand& a, const Strand& b) {
  const auto ts = union_times({a, b});
  Point2 prev = diff(a.at(ts.front()), b.at(ts.front()));
  if (prev.x == 0 && prev.y == 0) return true;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const Point2 cur = diff(a.at(ts[i]), b.at(ts[i]));
    if (difference_vanishes(prev, cur)) return true;
    prev = cur;
  }
  return false;
}

StrandSet::StrandSet(std::vector<Strand> strands) {
  if (strands.empty()) fail(ErrorKind::InvalidValue, "a strand set needs at least one strand");
  for (Strand& s : strands) {
    if (s.times.size() < 2 || s.times.size() != s.vertices.size()) {
      fail(ErrorKind::InvalidValue, "strand needs matching times and vertices, at least two");
    }
    if (s.times.front() != 0 || s.times.back() != 1) {
      fail(ErrorKind::InvalidValue, "strand times must run from 0 to 1");
    }
    for (std::size_t i = 1; i < s.times.size(); ++i) {
      if (!(s.times[i - 1] < s.times[i])) fail(ErrorKind::InvalidValue, "strand times must increase");
    }
    for (const Point2& p : s.vertices) {
      if (!interior(p)) fail(ErrorKind::InvalidValue, "strand leaves (0,1)^2");
    }
    strands_.push_back(drop_affine(std::move(s)));
  }
  for (std::size_t i = 0; i < strands_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (strands_collide(strands_[i], strands_[j])) {
        fail(ErrorKind::InvalidValue,
             "strands " + std::to_string(j) + " and " + std::to_string(i) + " meet");
      }
    }
  }
}

StrandSet StrandSet::identity(const PointConfig& config) {
  std::vector<Strand> strands;
  for (const Point2& p : config.points()) strands.push_back({{0, 1}, {p, p}});
  return StrandSet(std::move(strands));
}

PointConfig StrandSet::start() const {
  std::vector<Point2> pts;
  for (const Strand& s : strands_) pts.push_back(s.vertices.front());
  return PointConfig(std::move(pts));
}

PointConfig StrandSet::end() const {
  std::vector<Point2> pts;
  for (const Strand& s : strands_) pts.push_back(s.vertices.back());
  return PointConfig(std::move(pts));
}

StrandSet box_compose(const StrandSet& f, const StrandSet& g) {
  if (f.size() != g.size() || !f.end().same_set(g.start())) {
    fail(ErrorKind::ConfigMismatch, "end of the first strand set is not the start of the second");
  }
  const Rational half = make_rational(1, 2);
  std::vector<Strand> out;
  for (const Strand& a : f.strands()) {
    const auto next = std::find_if(g.strands().begin(), g.strands().end(), [&](const Strand& b) {
      return b.vertices.front() == a.vertices.back();
    });
    Strand s;
    for (std::size_t i = 0; i < a.times.size(); ++i) {
      s.times.push_back(a.times[i] * half);
      s.vertices.push_back(a.vertices[i]);
    }
    for (std::size_t i = 1; i < next->times.size(); ++i) {
      s.times.push_back(half + next->times[i] * half);
      s.vertices.push_back(next->vertices[i]);
    }
    out.push_back(std::move(s));
  }
  return StrandSet(std::move(out));
}

StrandSet reverse_strands(const StrandSet& f) {
  std::vector<Strand> out;
  for (const Strand& a : f.strands()) {
    Strand s;
    for (std::size_t i = a.times.size(); i-- > 0;) {
      s.times.push_back(1 - a.times[i]);
      s.vertices.push_back(a.vertices[i]);
    }
    out.push_back(std::move(s));
  }
  return StrandSet(std::move(out));
}

StrandSet normalize_time(const StrandSet& f) {
  // The motion as a polygonal path in configuration space.
  std::vector<std::vector<Point2>> path;
  for (const Rational& t : union_times(f.strands())) {
    std::vector<Point2> c;
    for (const Strand& s : f.strands()) c.push_back(s.at(t));
    if (!path.empty() && path.back() == c) continue;
    path.push_back(std::move(c));
  }
  // Drop vertices where the path goes straight on.
  std::vector<std::vector<Point2>> kept;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!kept.empty() && i + 1 < path.size()) {
      const auto& p = kept.back();
      const auto& q = path[i];
      const auto& r = path[i + 1];
      // q - p = lambda (r - q) with lambda > 0, coordinate-wise.
      std::optional<Rational> lambda;
      bool straight = true;
      for (std::size_t j = 0; j < q.size() && straight; ++j) {
        const Rational u[2] = {q[j].x - p[j].x, q[j].y - p[j].y};
        const Rational v[2] = {r[j].x - q[j].x, r[j].y - q[j].y};
        for (int c = 0; c < 2 && straight; ++c) {
          if (v[c] == 0) {
            straight = u[c] == 0;
          } else if (!lambda) {
            lambda = u[c] / v[c];
            straight = *lambda > 0;
          } else {
            straight = u[c] == *lambda * v[c];
          }
        }
      }
      if (straight) continue;
    }
    kept.push_back(path[i]);
  }
  if (kept.size() == 1) kept.push_back(kept.front());
  const std::size_t m = kept.size() - 1;
  std::vector<Strand> out(f.size());
  for (std::size_t i = 0; i <= m; ++i) {
    const Rational t = make_rational(static_cast<long>(i), static_cast<long>(m));
    for (std::size_t j = 0; j < f.size(); ++j) {
      out[j].times.push_back(t);
      out[j].vertices.push_back(kept[i][j]);
    }
  }
  return StrandSet(std::move(out));
}

std::optional<Extraction> extract_with_shear(const StrandSet& f, const Rational& shear) {
  const auto& strands = f.strands();
  const std::size_t n = strands.size();
  const auto ts = union_times(strands);
  // xs[k][j]: sheared x of strand j at grid time k.
  std::vector<std::vector<Rational>> xs(ts.size(), std::vector<Rational>(n));
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Point2 p = strands[j].at(ts[k]);
      xs[k][j] = p.x + shear * p.y;
    }
  }
  struct Raw {
    Rational time;
    std::size_t a, b;
  };
  std::vector<Raw> raw;
  const std::size_t last = ts.size() - 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto d = [&](std::size_t k) -> Rational { return xs[k][a] - xs[k][b]; };
      if (d(0) == 0 || d(last) == 0) return std::nullopt;
      for (std::size_t k = 1; k <= last; ++k) {
        const Rational d0 = d(k - 1);
        const Rational d1 = d(k);
        if (d1 == 0) {
          // Zero at an interior grid time: must be a clean sign change.
          const Rational d2 = d(k + 1);
          if (d2 == 0 || (d0 > 0) == (d2 > 0)) return std::nullopt;
          raw.push_back({ts[k], a, b});
        } else if (d0 != 0 && (d0 > 0) != (d1 > 0)) {
          raw.push_back({ts[k - 1] + d0 / (d0 - d1) * (ts[k] - ts[k - 1]), a, b});
        }
      }
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& l, const Raw& r) { return l.time < r.time; });

  // order[r]: strand at x-rank r.
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return xs[0][l] < xs[0][r]; });
  std::vector<std::size_t> rank(n);
  auto rerank = [&] {
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  };
  rerank();

  Extraction out{BraidWord(static_cast<int>(n)), shear, {}};
  std::vector<int> letters;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t e = i;
    while (e < raw.size() && raw[e].time == raw[i].time) ++e;
    std::vector<bool> busy(n, false);
    std::vector<std::pair<std::size_t, Raw>> batch;
    for (std::size_t k = i; k < e; ++k) {
      const Raw& ev = raw[k];
      if (busy[ev.a] || busy[ev.b]) return std::nullopt;  // triple point
      busy[ev.a] = busy[ev.b] = true;
      const std::size_t lo = std::min(rank[ev.a], rank[ev.b]);
      const std::size_t hi = std::max(rank[ev.a], rank[ev.b]);
      if (hi != lo + 1) return std::nullopt;
      batch.push_back({lo, ev});
    }
    std::sort(batch.begin(), batch.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [lo, ev] : batch) {
      const std::size_t left = order[lo];
      const std::size_t right = order[lo + 1];
      const Point2 pl = strands[left].at(ev.time);
      const Point2 pr = strands[right].at(ev.time);
      const int gen = static_cast<int>(lo) + 1;
      const int letter = pl.y > pr.y ? gen : -gen;
      letters.push_back(letter);
      out.events.push_back({ev.time, left, right, letter, pl.x + shear * pl.y});
      std::swap(order[lo], order[lo + 1]);
    }
    rerank();
    i = e;
  }
  out.word = BraidWord(static_cast<int>(n), std::move(letters));
  return out;
}

std::vector<Rational> shear_sequence(std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.push_back(0);
  for (long p = 101; out.size() < count; p += 2) {
    bool prime = true;
    for (long q = 3; q * q <= p; q += 2) {
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(make_rational(1, p));
  }
  return out;
}

Extraction extract(const StrandSet& f) {
  for (const Rational& e : shear_sequence(24)) {
    if (auto r = extract_with_shear(f, e)) return std::move(*r);
  }
  fail(ErrorKind::DegenerateProjection, "no generic projection among the shears tried");
}

BraidWord braid_word_of(const StrandSet& f) { return extract(f).word; }

bool strands_equivalent(const StrandSet& f, const StrandSet& g) {
  if (f.size() != g.size() || !f.start().same_set(g.start()) || !f.end().same_set(g.end())) {
    fail(ErrorKind::ConfigMismatch, "strand sets do not share start and end configurations");
  }
  return is_trivial(braid_word_of(box_compose(f, reverse_strands(g))));
}

StrandSet connect_configs(const PointConfig& k, const PointConfig& k2) {
  const std::size_t n = k.size();
  if (n != k2.size()) fail(ErrorKind::ConfigMismatch, "configurations differ in size");
  if (k == k2) return StrandSet::identity(k);

  // Parking spots on a lattice, avoiding every source and target.
  std::vector<Point2> park;
  const long grid = static_cast<long>(2 * n + 3);
  for (long a = 1; a < grid && park.size() < n; ++a) {
    for (long b = 1; b < grid && park.size() < n; ++b) {
      const Point2 p{make_rational(a, grid), make_rational(b, grid)};
      const auto& ks = k.points();
      const auto& k2s = k2.points();
      if (std::find(ks.begin(), ks.end(), p) == ks.end() &&
          std::find(k2s.begin(), k2s.end(), p) == k2s.end()) {
        park.push_back(p);
      }
    }
  }

  std::vector<Point2> pos = k.points();
  std::vector<Strand> strands(n);
  for (std::size_t j = 0; j < n; ++j) {
    strands[j].times.push_back(0);
    strands[j].vertices.push_back(pos[j]);
  }
  const long moves = static_cast<long>(2 * n);
  long step = 0;

  auto clear = [&](std::size_t mover, const Point2& a, const Point2& b) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != mover && on_segment(a, b, pos[j])) return false;
    }
    return true;
  };

  auto move = [&](std::size_t mover, const Point2& to) {
    const Point2 from = pos[mover];
    const Rational t0 = make_rational(step, moves);
    const Rational t1 = make_rational(step + 1, moves);
    std::optional<Point2> via;
    if (!clear(mover, from, to)) {
      const Point2 mid = lerp(from, to, make_rational(1, 2));
      const Point2 perp{to.y - from.y, from.x - to.x};
      for (long d = 3; !via && d < (1L << 40); d = 2 * d + 1) {
        for (int sign : {1, -1}) {
          const Rational s = make_rational(sign, d);
          const Point2 w{mid.x + s * perp.x, mid.y + s * perp.y};
          if (interior(w) && clear(mover, from, w) && clear(mover, w, to)) {
            via = w;
            break;
          }
        }
      }
      if (!via) fail(ErrorKind::InvalidValue, "no detour found");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == mover) {
        if (via) {
          strands[j].times.push_back((t0 + t1) / 2);
          strands[j].vertices.push_back(*via);
        }
        strands[j].times.push_back(t1);
        strands[j].vertices.push_back(to);
      } else {
        strands[j].times.push_back(t1);
        strands[j].vertices.push_back(pos[j]);
      }
    }
    pos[mover] = to;
    ++step;
  };

  for (std::size_t j = 0; j < n; ++j) move(j, park[j]);
  for (std::size_t j = 0; j < n; ++j) move(j, k2.points()[j]);
  return StrandSet(std::move(strands));
}

PointConfig row_config(std::size_t n) {
  std::vector<Point2> pts;
  for (std::size_t j = 0; j < n; ++j) {
    pts.push_back({make_rational(static_cast<long>(j + 1), static_cast<long>(n + 1)), make_rational(1, 2)});
  }
  return PointConfig(std::move(pts));
}

StrandSet half_twist(const Point2& left, const Point2& right) {
  const Point2 mid = lerp(left, right, make_rational(1, 2));
  const Point2 h{(right.x - left.x) / 2, (right.y - left.y) / 2};
  const Point2 up{mid.x - h.y, mid.y + h.x};
  const Point2 down{mid.x + h.y, mid.y - h.x};
  const std::vector<Rational> ts{0, make_rational(1, 2), 1};
  return StrandSet({{ts, {left, up, right}}, {ts, {right, down, left}}});
}

groupoid::Groupoid<PointConfig, StrandMorphism> strand_groupoid(std::vector<PointConfig> objects,
                                                                std::size_t loops,
                                                                std::uint64_t seed) {
  using M = StrandMorphism;
  groupoid::Groupoid<PointConfig, M> g;
  g.magmoid.objects = objects;
  g.magmoid.hom = [objects, loops, seed](std::size_t i, std::size_t j) {
    std::vector<M> out;
    if (objects[i].size() != objects[j].size()) return out;
    const StrandSet base = connect_configs(objects[i], objects[j]);
    out.push_back({base, i, j});
    random::Engine rng(seed ^ (i * 0x9e3779b9u) ^ (j << 20));
    for (std::size_t l = 0; l < loops; ++l) {
      // Wander off and come back to the target configuration.
      const StrandSet away = random::strands(rng, objects[j], 2);
      const StrandSet back = connect_configs(away.end(), objects[j]);
      out.push_back({box_compose(base, box_compose(away, back)), i, j});
    }
    return out;
  };
  g.magmoid.compose = [](const M& f, const M& h) {
    return M{box_compose(f.strands, h.strands), f.source, h.target};
  };
  g.ops.identity = [objects](std::size_t i) { return M{StrandSet::identity(objects[i]), i, i}; };
  g.ops.inverse = [](std::size_t, std::size_t, const M& f) {
    return M{reverse_strands(f.strands), f.target, f.source};
  };
  return g;
}

groupoid::Congruence<StrandMorphism> strand_congruence() {
  return {[](std::size_t, std::size_t, const StrandMorphism& f, const StrandMorphism& g) {
    return strands_equivalent(f.strands, g.strands);
  }};
}

}  // namespace motgrp
