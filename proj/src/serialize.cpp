#include "motgrp/serialize.hpp"

#include "motgrp/error.hpp"

namespace motgrp::json {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, std::string("expected an object with '") + key + "'");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array(const Json& doc, const char* what) {
  if (!doc.is_array()) fail(ErrorKind::ParseError, std::string(what) + " must be an array");
  return doc;
}

std::vector<Rational> rationals_from(const Json& doc, const char* what) {
  std::vector<Rational> out;
  for (const Json& r : array(doc, what)) out.push_back(rational_from(r));
  return out;
}

Json pair(const Rational& a, const Rational& b) { return Json::array({to_json(a), to_json(b)}); }

std::pair<Rational, Rational> pair_from(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2) fail(ErrorKind::ParseError, "expected a pair [x, y]");
  return {rational_from(doc[0]), rational_from(doc[1])};
}

std::vector<Knot> knots_from(const Json& doc) {
  std::vector<Knot> knots;
  for (const Json& k : array(doc, "knots")) {
    auto [x, y] = pair_from(k);
    knots.push_back({std::move(x), std::move(y)});
  }
  return knots;
}

Json knots_to_json(const std::vector<Knot>& knots) {
  Json out = Json::array();
  for (const Knot& k : knots) out.push_back(pair(k.x, k.y));
  return out;
}

Ambient ambient_from(const Json& doc) {
  const Json& a = field(doc, "ambient");
  if (!a.is_string()) fail(ErrorKind::ParseError, "ambient must be a string");
  return parse_ambient(a.get<std::string>());
}

std::vector<Point2> points_from(const Json& doc) {
  std::vector<Point2> out;
  for (const Json& p : array(doc, "points")) {
    auto [x, y] = pair_from(p);
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

Json points_to_json(const std::vector<Point2>& pts) {
  Json out = Json::array();
  for (const Point2& p : pts) out.push_back(pair(p.x, p.y));
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const Rational& r) { return motgrp::to_string(r); }

Rational rational_from(const Json& doc) {
  if (doc.is_string()) return parse_rational(doc.get<std::string>());
  if (doc.is_number_integer()) return Rational(doc.get<long>());
  fail(ErrorKind::ParseError, "rationals are written as \"p/q\" strings or integers");
}

Json to_json(const PLHomeo& h) {
  return Json{{"ambient", std::string(to_string(h.ambient()))},
              {"degree", h.degree()},
              {"knots", knots_to_json(h.knots())}};
}

PLHomeo homeo_from(const Json& doc) {
  const Ambient a = ambient_from(doc);
  int degree = 1;
  if (doc.contains("degree")) {
    if (!doc["degree"].is_number_integer()) fail(ErrorKind::ParseError, "degree must be an integer");
    degree = doc["degree"].get<int>();
  }
  return PLHomeo::from_knots(a, knots_from(field(doc, "knots")), degree);
}

Json to_json(const PLFlow& f) {
  Json times = Json::array();
  for (const Rational& t : f.key_times()) times.push_back(to_json(t));
  Json frames = Json::array();
  for (const PLHomeo& h : f.frames()) frames.push_back(knots_to_json(h.knots()));
  return Json{{"ambient", std::string(to_string(f.ambient()))}, {"key_times", times}, {"frames", frames}};
}

PLFlow flow_from(const Json& doc) {
  const Ambient a = ambient_from(doc);
  std::vector<Rational> times = rationals_from(field(doc, "key_times"), "key_times");
  std::vector<PLHomeo> frames;
  for (const Json& fr : array(field(doc, "frames"), "frames")) {
    frames.push_back(PLHomeo::from_knots(a, knots_from(fr)));
  }
  return PLFlow::from_frames(a, std::move(times), std::move(frames));
}

Json to_json(const CompactSubsetI& n) {
  Json comps = Json::array();
  for (const Component1D& c : n.components()) {
    if (c.is_point()) {
      comps.push_back(Json{{"pt", to_json(c.lo)}});
    } else {
      comps.push_back(Json{{"iv", pair(c.lo, c.hi)}});
    }
  }
  return Json{{"components", comps}, {"contains0", n.contains0()}, {"contains1", n.contains1()}};
}

CompactSubsetI subset_from(const Json& doc) {
  std::vector<Component1D> comps;
  for (const Json& c : array(field(doc, "components"), "components")) {
    if (c.is_object() && c.contains("pt") && c.size() == 1) {
      comps.push_back(Component1D::point(rational_from(c["pt"])));
    } else if (c.is_object() && c.contains("iv") && c.size() == 1) {
      auto [a, b] = pair_from(c["iv"]);
      if (!(a < b)) fail(ErrorKind::InvalidValue, "interval component needs a < b");
      comps.push_back(Component1D::interval(a, b));
    } else {
      fail(ErrorKind::ParseError, "component must be {\"pt\": r} or {\"iv\": [a, b]}");
    }
  }
  CompactSubsetI n(std::move(comps));
  // The boundary flags are redundant; when present they must agree.
  for (const auto& [key, value] : {std::pair{"contains0", n.contains0()}, std::pair{"contains1", n.contains1()}}) {
    if (doc.contains(key) && (!doc[key].is_boolean() || doc[key].get<bool>() != value)) {
      fail(ErrorKind::InvalidValue, std::string(key) + " disagrees with the components");
    }
  }
  return n;
}

Json to_json(const PointConfig& k) { return Json{{"points", points_to_json(k.points())}}; }

PointConfig config_from(const Json& doc) { return PointConfig(points_from(field(doc, "points"))); }

Json to_json(const StrandSet& s) {
  Json strands = Json::array();
  for (const Strand& st : s.strands()) {
    Json times = Json::array();
    for (const Rational& t : st.times) times.push_back(to_json(t));
    strands.push_back(Json{{"times", times}, {"verts", points_to_json(st.vertices)}});
  }
  return Json{{"strands", strands}};
}

StrandSet strands_from(const Json& doc) {
  std::vector<Strand> strands;
  for (const Json& st : array(field(doc, "strands"), "strands")) {
    strands.push_back({rationals_from(field(st, "times"), "times"), points_from(field(st, "verts"))});
  }
  return StrandSet(std::move(strands));
}

}  // namespace motgrp::json
