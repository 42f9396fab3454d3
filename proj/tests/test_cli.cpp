#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "motgrp/interval_motions.hpp"
#include "motgrp/serialize.hpp"

using namespace motgrp;

namespace {

std::string data(const std::string& name) { return std::string(MOTGRP_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify-interval prints the count and the canonical motion") {
  const Result r = run({"classify-interval", data("quarter.json"), data("three_quarters.json")});
  REQUIRE(r.code == cli::kOk);
  const auto newline = r.out.find('\n');
  CHECK(r.out.substr(0, newline) == "1");
  const PLFlow f = json::flow_from(json::parse(r.out.substr(newline + 1)));
  const CompactSubsetI a({Component1D::point(make_rational(1, 4))});
  const CompactSubsetI b({Component1D::point(make_rational(3, 4))});
  CHECK(f == canonical_motion(a, b));
  CHECK(is_motion(f, a, b));

  const Result none = run({"classify-interval", data("quarter.json"), data("band.json")});
  CHECK(none.code == cli::kOk);
  CHECK(none.out == "0\n");
  CHECK(run({"word", data("band.json")}).out == "b\n");
}

TEST_CASE("braid commands") {
  const Result lhs = run({"braid-nf", "s1 s2 s1", "--strands", "3"});
  const Result rhs = run({"braid-nf", "s2 s1 s2", "--strands", "3"});
  CHECK(lhs.code == cli::kOk);
  CHECK(lhs.out == rhs.out);
  CHECK(run({"braid-trivial", "s1 s1^-1", "--strands", "2"}).out == "true\n");
  CHECK(run({"braid-trivial", "s1 s1", "--strands", "2"}).out == "false\n");
  CHECK(run({"braid-extract", data("half_twist.json")}).out == "strands 2\ns1\n");
  CHECK(run({"braid-extract", data("full_twist.json")}).out == "strands 2\ns1 s1\n");
  CHECK(run({"invert", "s1 s2^-1", "--strands", "3"}).out == "strands 3\ns2 s1^-1\n");
  CHECK(run({"equiv", data("half_twist.json"), data("half_twist.json")}).out == "true\n");
  CHECK(run({"equiv", data("half_twist.json"), data("counter_twist.json")}).out == "false\n");
}

TEST_CASE("flow commands") {
  CHECK(run({"translation", data("shift.json")}).out == "2\n");
  const Result composed = run({"compose", data("shift.json"), data("shift.json")});
  REQUIRE(composed.code == cli::kOk);
  CHECK(translation_class(json::flow_from(json::parse(composed.out))) == 4);
  CHECK(run({"stationary", data("identity_flow.json"), data("band.json")}).out == "true\n");
  const Result connected = run({"connect", data("pair.json"), data("pair_swapped.json")});
  REQUIRE(connected.code == cli::kOk);
  CHECK(json::strands_from(json::parse(connected.out)).end() ==
        json::config_from(json::parse(slurp(data("pair_swapped.json")))));
}

TEST_CASE("render writes the golden picture") {
  const auto out = std::filesystem::temp_directory_path() / "motgrp_cli_identity_flare.svg";
  const Result r = run({"render", "--kind", "flare", data("identity_flow.json"), "--out", out.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  CHECK(slurp(out.string()) == slurp(std::string(MOTGRP_GOLDEN_DIR) + "/identity_flare.svg"));
  std::filesystem::remove(out);
}

TEST_CASE("exit codes") {
  // Domain errors.
  const Result mismatch = run({"connect", data("pair.json"), data("row3.json")});
  CHECK(mismatch.code == cli::kDomainError);
  CHECK(mismatch.err.find("ConfigMismatch") != std::string::npos);
  CHECK(run({"word", data("broken.json")}).code == cli::kDomainError);
  CHECK(run({"braid-nf", "s3", "--strands", "3"}).code == cli::kDomainError);
  CHECK(run({"render", "--kind", "flare", data("shift.json")}).code == cli::kDomainError);
  CHECK(run({"render", "--kind", "sketch", data("identity_flow.json")}).code == cli::kDomainError);
  // Usage errors.
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"no-such-command"}).code == cli::kUsageError);
  CHECK(run({"word", data("missing.json")}).code == cli::kUsageError);
  CHECK(run({"word", data("identity_flow.json")}).code == cli::kUsageError);
  CHECK(run({"word", data("band.json"), data("band.json")}).code == cli::kUsageError);
  CHECK(run({"compose", "--mode", "cross", data("shift.json"), data("shift.json")}).code == cli::kUsageError);
  CHECK(run({"braid-nf", "s1", "--strands", "0"}).code == cli::kUsageError);
  CHECK(run({"compose", data("half_twist.json"), data("row3.json")}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}
