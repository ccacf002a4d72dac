#include <doctest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ulog/spec_file.hpp"

namespace {

const std::string kGolden = ULOG_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ulog::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kExample = kGolden + "/example.ulog";

void golden(std::vector<std::string> args, const std::string& expected_file) {
  const Outcome o = run(std::move(args));
  CHECK(o.code == 0);
  CHECK(o.err.empty());
  CHECK(o.out == slurp(kGolden + "/" + expected_file));
}

}  // namespace

TEST_CASE("close prints the closure table") {
  golden({"close", kExample, "--logic", "L"}, "close_L.out");
  golden({"view", kExample, "--logic", "L", "--as", "closure"}, "close_L.out");
  golden({"view", kExample, "--logic", "L"}, "close_L.out");
}

TEST_CASE("views") {
  golden({"view", kExample, "--logic", "L", "--as", "rel"}, "view_rel_L.out");
  golden({"view", kExample, "--logic", "L", "--as", "coalg"}, "view_coalg_L.out");
}

TEST_CASE("classify") {
  golden({"classify", kExample, "--map", "id"}, "classify_id.out");
  golden({"classify", kExample, "--map", "swap"}, "classify_swap.out");
  const Outcome c = run({"classify", kExample, "--map", "collapse"});
  CHECK(c.code == 0);
  CHECK(c.out.find("preserving: true\n") != std::string::npos);
  CHECK(c.out.find("conservative: false\n") != std::string::npos);
}

TEST_CASE("classify keeps the cross-view pairs equal") {
  for (const char* m : {"id", "collapse", "swap"}) {
    const Outcome o = run({"classify", kExample, "--map", m});
    auto value = [&](const std::string& key) {
      const auto at = o.out.find(key + ": ");
      REQUIRE(at != std::string::npos);
      return o.out.substr(at + key.size() + 2, 4) == "true";
    };
    CHECK(value("preserving") == value("continuous"));
    CHECK(value("conservative") == value("initial"));
  }
}

TEST_CASE("check and sum") {
  golden({"check", kExample}, "check.out");
  golden({"sum", kExample, "--logics", "P,S"}, "sum_P_S.out");
  const Outcome named = run({"sum", kExample, "--logics", "P,S", "--name", "T"});
  CHECK(named.out.rfind("sum T\n", 0) == 0);
}

TEST_CASE("count") {
  CHECK(run({"count", "upsets", "--n", "3"}).out == "20\n");
  CHECK(run({"count", "logics", "--n", "3"}).out == "61\n");
  CHECK(run({"count", "upsets", "--n", "0"}).out == "2\n");
  const Outcome big = run({"count", "logics", "--n", "5"});
  CHECK(big.code == 1);
  CHECK(big.out.empty());
  CHECK_FALSE(big.err.empty());
}

TEST_CASE("laws") {
  const Outcome o = run({"laws", "--samples", "10"});
  CHECK(o.code == 0);
  CHECK(o.out.find("TOTAL ") != std::string::npos);
  CHECK(o.out.find(" 0 failed\n") != std::string::npos);
  CHECK(o.out == run({"laws", "--samples", "10"}).out);
}

TEST_CASE("exit codes and diagnostics") {
  const Outcome validation = run({"check", kGolden + "/undeclared.ulog"});
  CHECK(validation.code == 1);
  CHECK(validation.out.empty());
  CHECK(validation.err.find("undeclared.ulog:3:25: unknown element 'b'") != std::string::npos);

  const Outcome syntax = run({"check", kGolden + "/syntax.ulog"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("syntax.ulog:4:1: expected '->', found 'end'") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"close", kExample}).code == 2);
  CHECK(run({"close", kExample, "--logic", "Nope"}).code == 2);
  CHECK(run({"classify", kExample, "--map", "nope"}).code == 2);
  CHECK(run({"view", kExample, "--logic", "L", "--as", "graph"}).code == 2);
  CHECK(run({"check", kGolden + "/missing.ulog"}).code == 2);
  CHECK(run({"count", "posets", "--n", "2"}).code == 2);
  const Outcome help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("close") != std::string::npos);
}

TEST_CASE("golden spec files round trip") {
  const ulog::SpecFile s = ulog::parse_spec(slurp(kExample));
  CHECK(ulog::parse_spec(ulog::print_spec(s)) == s);
}
