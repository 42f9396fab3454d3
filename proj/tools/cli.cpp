#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "motgrp/braid.hpp"
#include "motgrp/error.hpp"
#include "motgrp/interval_motions.hpp"
#include "motgrp/pl_flow.hpp"
#include "motgrp/point_motions.hpp"
#include "motgrp/render.hpp"
#include "motgrp/serialize.hpp"

namespace motgrp::cli {

namespace {

// Raised for bad invocations that CLI11 cannot see (unreadable files,
// inputs of the wrong type for the command).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Document = std::variant<PLFlow, PLHomeo, CompactSubsetI, PointConfig, StrandSet>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Document load(const std::string& path) {
  const json::Json doc = json::parse(read_file(path));
  if (!doc.is_object()) fail(ErrorKind::ParseError, path + ": expected a JSON object");
  if (doc.contains("key_times")) return json::flow_from(doc);
  if (doc.contains("knots")) return json::homeo_from(doc);
  if (doc.contains("components")) return json::subset_from(doc);
  if (doc.contains("points")) return json::config_from(doc);
  if (doc.contains("strands")) return json::strands_from(doc);
  fail(ErrorKind::ParseError, path + ": not a flow, homeo, subset, config or strand set");
}

template <class T>
T load_as(const std::string& path, const char* what) {
  Document d = load(path);
  if (auto* v = std::get_if<T>(&d)) return std::move(*v);
  throw UsageError(path + ": expected " + what);
}

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  std::string kind = "flare";
  int frames = 5;
  int grid = 8;
  int strands = 0;
  int precision = 6;
  std::string mode = "star";
  std::string point = "0";
  std::string subset;
};

class Output {
 public:
  Output(const Options& o, std::ostream& out) : path_(o.out), out_(out) {}

  // The main result: to --out when given, else stdout.
  void result(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path_ + "'");
    f << text;
  }

  // Short answers always go to stdout.
  void line(const std::string& text) { out_ << text << '\n'; }

 private:
  std::string path_;
  std::ostream& out_;
};

BraidWord braid_input(const Options& o) {
  if (o.inputs.size() != 1) throw UsageError("expected one braid word or braid file");
  if (o.strands > 0) return parse_letters(o.inputs[0], o.strands);
  return parse_braid(read_file(o.inputs[0]));
}

void need(const Options& o, std::size_t n) {
  if (o.inputs.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " input" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(o.inputs.size()));
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

using Handler = std::function<void(const Options&, Output&)>;

std::map<std::string, std::pair<std::string, Handler>> commands() {
  std::map<std::string, std::pair<std::string, Handler>> c;

  c["compose"] = {"compose two flows (first input runs first) or two strand sets",
                  [](const Options& o, Output& out) {
                    need(o, 2);
                    Document a = load(o.inputs[0]);
                    Document b = load(o.inputs[1]);
                    if (std::holds_alternative<StrandSet>(a) && std::holds_alternative<StrandSet>(b)) {
                      out.result(json::dump(json::to_json(
                          box_compose(std::get<StrandSet>(a), std::get<StrandSet>(b)))));
                      return;
                    }
                    if (!std::holds_alternative<PLFlow>(a) || !std::holds_alternative<PLFlow>(b)) {
                      throw UsageError("compose takes two flows or two strand sets");
                    }
                    const PLFlow& f = std::get<PLFlow>(a);
                    const PLFlow& g = std::get<PLFlow>(b);
                    if (o.mode == "star") {
                      out.result(json::dump(json::to_json(star_compose(f, g))));
                    } else if (o.mode == "dot") {
                      out.result(json::dump(json::to_json(dot_compose(f, g))));
                    } else {
                      throw UsageError("--mode is star or dot");
                    }
                  }};

  c["reverse"] = {"time-reverse a flow or a strand set", [](const Options& o, Output& out) {
                    need(o, 1);
                    Document a = load(o.inputs[0]);
                    if (auto* f = std::get_if<PLFlow>(&a)) {
                      out.result(json::dump(json::to_json(reverse(*f))));
                    } else if (auto* s = std::get_if<StrandSet>(&a)) {
                      out.result(json::dump(json::to_json(reverse_strands(*s))));
                    } else {
                      throw UsageError("reverse takes a flow or a strand set");
                    }
                  }};

  c["invert"] = {"pointwise inverse of a flow, inverse of a map, or inverse braid (--strands)",
                 [](const Options& o, Output& out) {
                   need(o, 1);
                   if (o.strands > 0) {
                     out.result(format_braid(invert(braid_input(o))));
                     return;
                   }
                   Document a = load(o.inputs[0]);
                   if (auto* f = std::get_if<PLFlow>(&a)) {
                     out.result(json::dump(json::to_json(pointwise_inverse(*f))));
                   } else if (auto* h = std::get_if<PLHomeo>(&a)) {
                     out.result(json::dump(json::to_json(h->inverse())));
                   } else {
                     throw UsageError("invert takes a flow, a homeo, or a braid word with --strands");
                   }
                 }};

  c["classify-interval"] = {"number of motion classes between two subsets of I; emits the canonical motion",
                            [](const Options& o, Output& out) {
                              need(o, 2);
                              const auto n = load_as<CompactSubsetI>(o.inputs[0], "a subset of I");
                              const auto n2 = load_as<CompactSubsetI>(o.inputs[1], "a subset of I");
                              const int k = hom_cardinality(n, n2);
                              out.line(std::to_string(k));
                              if (k == 1) out.result(json::dump(json::to_json(canonical_motion(n, n2))));
                            }};

  c["word"] = {"the {a,b} word of a subset of I", [](const Options& o, Output& out) {
                 need(o, 1);
                 out.line(word_of(load_as<CompactSubsetI>(o.inputs[0], "a subset of I")));
               }};

  c["stationary"] = {"whether a flow is stationary on a subset of I", [](const Options& o, Output& out) {
                       need(o, 2);
                       const auto f = load_as<PLFlow>(o.inputs[0], "a flow");
                       const auto n = load_as<CompactSubsetI>(o.inputs[1], "a subset of I");
                       out.line(yes_no(is_stationary(f, n)));
                     }};

  c["braid-extract"] = {"braid word of a strand set", [](const Options& o, Output& out) {
                          need(o, 1);
                          out.result(format_braid(braid_word_of(load_as<StrandSet>(o.inputs[0], "a strand set"))));
                        }};

  c["braid-nf"] = {"Garside normal form of a braid word", [](const Options& o, Output& out) {
                     out.result(normal_form(braid_input(o)).to_string() + "\n");
                   }};

  c["braid-trivial"] = {"whether a braid word is trivial", [](const Options& o, Output& out) {
                          out.line(yes_no(is_trivial(braid_input(o))));
                        }};

  c["equiv"] = {"equivalence of two strand sets, or of two flows as motions of --subset",
                [](const Options& o, Output& out) {
                  need(o, 2);
                  Document a = load(o.inputs[0]);
                  Document b = load(o.inputs[1]);
                  if (std::holds_alternative<StrandSet>(a) && std::holds_alternative<StrandSet>(b)) {
                    out.line(yes_no(strands_equivalent(std::get<StrandSet>(a), std::get<StrandSet>(b))));
                    return;
                  }
                  if (!std::holds_alternative<PLFlow>(a) || !std::holds_alternative<PLFlow>(b) || o.subset.empty()) {
                    throw UsageError("equiv takes two strand sets, or two flows with --subset");
                  }
                  const auto n = load_as<CompactSubsetI>(o.subset, "a subset of I");
                  const PLFlow& f = std::get<PLFlow>(a);
                  const CompactSubsetI n2(image(f.endpoint(), n.components()));
                  out.line(yes_no(motions_equivalent(f, std::get<PLFlow>(b), n, n2)));
                }};

  c["connect"] = {"a strand set between two point configurations", [](const Options& o, Output& out) {
                    need(o, 2);
                    const auto k = load_as<PointConfig>(o.inputs[0], "a point configuration");
                    const auto k2 = load_as<PointConfig>(o.inputs[1], "a point configuration");
                    out.result(json::dump(json::to_json(connect_configs(k, k2))));
                  }};

  c["render"] = {"SVG picture of a flow or strand set", [](const Options& o, Output& out) {
                   need(o, 1);
                   RenderSpec spec;
                   spec.kind = parse_render_kind(o.kind);
                   spec.frames = o.frames;
                   spec.grid = o.grid;
                   spec.precision = o.precision;
                   Document a = load(o.inputs[0]);
                   if (auto* s = std::get_if<StrandSet>(&a)) {
                     out.result(render(*s, spec));
                     return;
                   }
                   auto* f = std::get_if<PLFlow>(&a);
                   if (!f) throw UsageError("render takes a flow or a strand set");
                   std::optional<CompactSubsetI> n;
                   if (!o.subset.empty()) n = load_as<CompactSubsetI>(o.subset, "a subset of I");
                   out.result(render(*f, n, spec));
                 }};

  c["winding"] = {"winding class of a loop of a circle flow at --point", [](const Options& o, Output& out) {
                    need(o, 1);
                    const auto f = load_as<PLFlow>(o.inputs[0], "a flow");
                    out.line(winding_class(f, parse_rational(o.point)).get_str());
                  }};

  c["translation"] = {"integer class of a Z-preserving flow on the line", [](const Options& o, Output& out) {
                        need(o, 1);
                        out.line(translation_class(load_as<PLFlow>(o.inputs[0], "a flow")).get_str());
                      }};

  c["degree"] = {"degree of a circle map (or of a circle flow's endpoint)", [](const Options& o, Output& out) {
                   need(o, 1);
                   Document a = load(o.inputs[0]);
                   if (auto* h = std::get_if<PLHomeo>(&a)) {
                     out.line(std::to_string(circle_degree(*h)));
                   } else if (auto* f = std::get_if<PLFlow>(&a)) {
                     out.line(std::to_string(circle_degree(f->endpoint())));
                   } else {
                     throw UsageError("degree takes a circle map or flow");
                   }
                 }};

  c["alexander"] = {"coning flow from the identity to a boundary-fixing map of I",
                    [](const Options& o, Output& out) {
                      need(o, 1);
                      out.result(json::dump(json::to_json(alexander_flow(load_as<PLHomeo>(o.inputs[0], "a map")))));
                    }};
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact motion groupoids of 1-D flows and planar point configurations", "motgrp"};
  app.require_subcommand(1);
  Options o;
  const auto table = commands();
  std::map<CLI::App*, const Handler*> handlers;
  for (const auto& [name, entry] : table) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("inputs", o.inputs, "input files (or a braid word with --strands)");
    sub->add_option("--out", o.out, "write the result here instead of stdout");
    sub->add_option("--kind", o.kind, "movie | flare | worldline | circle-flare | braid");
    sub->add_option("--frames", o.frames, "panels in a movie");
    sub->add_option("--grid", o.grid, "grid lines per unit");
    sub->add_option("--strands", o.strands, "strand count of a braid word argument")->check(CLI::PositiveNumber);
    sub->add_option("--precision", o.precision, "decimals in SVG coordinates");
    sub->add_option("--mode", o.mode, "star | dot")->check(CLI::IsMember({"star", "dot"}));
    sub->add_option("--point", o.point, "base point p/q");
    sub->add_option("--subset", o.subset, "subset of I (JSON file)");
    handlers[sub] = &entry.second;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Output output(o, out);
    for (CLI::App* sub : app.get_subcommands()) (*handlers.at(sub))(o, output);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace motgrp::cli
