#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulog/error.hpp"
#include "ulog/monotone.hpp"
#include "ulog/universe.hpp"

namespace ulog {

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

/// Base of everything parse_spec throws; what() is "line:column: message".
class SpecError : public Error {
 public:
  SpecError(SourcePosition where, const std::string& message);
  SourcePosition where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  SourcePosition where_;
  std::string message_;
};

/// The text does not match the grammar.
class SyntaxError : public SpecError {
 public:
  using SpecError::SpecError;
};

/// Well-formed text naming something undeclared, twice, or incompletely.
class ValidationError : public SpecError {
 public:
  using SpecError::SpecError;
};

struct RuleDecl {
  std::vector<std::string> premises;
  std::string conclusion;

  friend bool operator==(const RuleDecl&, const RuleDecl&) = default;
};

struct LogicDecl {
  std::string name;
  std::vector<std::string> elements;
  std::vector<RuleDecl> rules;

  friend bool operator==(const LogicDecl&, const LogicDecl&) = default;
};

struct MapDecl {
  std::string name;
  std::string domain;
  std::string codomain;
  std::vector<std::pair<std::string, std::string>> assignments;

  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

struct SpecFile {
  std::vector<LogicDecl> logics;
  std::vector<MapDecl> maps;

  const LogicDecl* find_logic(std::string_view name) const;
  const MapDecl* find_map(std::string_view name) const;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Grammar:
///   file  := (logic | map)*
///   logic := "logic" IDENT "elements" IDENT* rule* "end"
///   rule  := "rule" IDENT* "->" IDENT
///   map   := "map" IDENT ":" IDENT "->" IDENT pair* "end"
///   pair  := IDENT "->" IDENT
/// '#' comments run to end of line. Blocks may appear in any order.
SpecFile parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(s)) == s.
std::string print_spec(const SpecFile& spec);

struct ResolvedMap {
  std::string domain;
  std::string codomain;
  TotalMap map;
};

/// Logics built from their generating rules, carriers in declaration order.
struct Model {
  std::map<std::string, AbstractLogic, std::less<>> logics;
  std::map<std::string, ResolvedMap, std::less<>> maps;
};

/// spec must have come from parse_spec (or pass its checks).
Model resolve(const SpecFile& spec);

}  // namespace ulog
