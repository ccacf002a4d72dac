#include <doctest.h>

#include "ulog/spec_file.hpp"

using namespace ulog;

namespace {

SourcePosition error_position(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.where();
  }
  FAIL("expected an error");
  return {};
}

std::string error_message(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("single logic") {
  const SpecFile s = parse_spec("logic L elements a b rule a -> b end");
  REQUIRE(s.logics.size() == 1);
  CHECK(s.logics[0].name == "L");
  CHECK(s.logics[0].elements == std::vector<std::string>{"a", "b"});
  REQUIRE(s.logics[0].rules.size() == 1);
  CHECK(s.logics[0].rules[0].premises == std::vector<std::string>{"a"});
  CHECK(s.logics[0].rules[0].conclusion == "b");
  CHECK(s.find_logic("L") != nullptr);
  CHECK(s.find_logic("M") == nullptr);
}

TEST_CASE("axiom rules, comments and block order") {
  const SpecFile s = parse_spec(
      "# header\n"
      "map f : L -> L a -> a end\n"
      "logic L elements a  # one element\n"
      "  rule -> a\n"
      "end\n");
  REQUIRE(s.logics.size() == 1);
  CHECK(s.logics[0].rules[0].premises.empty());
  REQUIRE(s.find_map("f") != nullptr);
  const Model m = resolve(s);
  CHECK(m.logics.at("L").entails(0, 0));
  CHECK(m.maps.at("f").map.targets() == std::vector<std::size_t>{0});
}

TEST_CASE("undeclared element in a map assignment") {
  const std::string text =
      "logic L elements a end\n"
      "logic M elements x end\n"
      "map f : L -> M  a -> x  b -> x end\n";
  CHECK_THROWS_AS(parse_spec(text), ValidationError);
  const SourcePosition p = error_position(text);
  CHECK(p.line == 3);
  CHECK(p.column == 25);
  CHECK(error_message(text).find("'b'") != std::string::npos);
}

TEST_CASE("syntax errors carry the offending token position") {
  CHECK_THROWS_AS(parse_spec("logic L a end"), SyntaxError);
  const SourcePosition p = error_position("logic L\n  elements a\n  rule a b end");
  CHECK(p.line == 3);
  CHECK(p.column == 12);
  CHECK(error_message("logic L\n  elements a\n  rule a b end") == "expected '->', found 'end'");
  const SourcePosition bad = error_position("logic L elements a $ end");
  CHECK(bad.line == 1);
  CHECK(bad.column == 20);
  CHECK(error_message("logic L elements a") == "expected 'end', found end of input");
  try {
    parse_spec("\n  map");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()) == "2:6: expected identifier, found end of input");
  }
}

TEST_CASE("validation failures") {
  CHECK(error_message("logic L elements a end logic L elements b end") == "duplicate name 'L'");
  CHECK(error_message("logic L elements a end map L : L -> L a -> a end") == "duplicate name 'L'");
  CHECK(error_message("logic L elements a a end") == "duplicate element 'a' in logic 'L'");
  CHECK(error_message("logic L elements a rule c -> a end") == "unknown element 'c' in logic 'L'");
  CHECK(error_message("logic L elements a end map f : L -> N a -> a end") == "unknown logic 'N'");
  CHECK(error_message("logic L elements a end map f : L -> L a -> a a -> a end") ==
        "element 'a' assigned twice in map 'f'");
  const std::string partial = "logic L elements a b end\nmap f : L -> L\n  a -> a\nend";
  CHECK(error_message(partial) == "map 'f' does not assign element 'b'");
  CHECK(error_position(partial).line == 4);
  std::string big = "logic L elements";
  for (int i = 0; i < 13; ++i) big += " e" + std::to_string(i);
  big += " end";
  CHECK_THROWS_AS(parse_spec(big), ValidationError);
  CHECK(error_message(big).find("more than 12") != std::string::npos);
}

TEST_CASE("print and parse round trip") {
  const std::string text =
      "logic L elements a b c rule a -> b rule b c -> a rule -> c end "
      "logic M elements x end "
      "map f : L -> M a -> x b -> x c -> x end";
  const SpecFile s = parse_spec(text);
  const std::string printed = print_spec(s);
  CHECK(parse_spec(printed) == s);
  CHECK(print_spec(parse_spec(printed)) == printed);
  CHECK(printed ==
        "logic L\n  elements a b c\n  rule a -> b\n  rule b c -> a\n  rule -> c\nend\n\n"
        "logic M\n  elements x\nend\n\n"
        "map f : L -> M\n  a -> x\n  b -> x\n  c -> x\nend\n");
  CHECK(print_spec(SpecFile{}).empty());
  CHECK(parse_spec("") == SpecFile{});
}

TEST_CASE("resolve builds the generated logics") {
  const Model m = resolve(parse_spec("logic L elements a b rule a -> b end"));
  CHECK(m.logics.at("L").closure_table() == std::vector<Mask>{0, 3, 2, 3});
}
