#include "ulog/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace ulog {

SpecError::SpecError(SourcePosition where, const std::string& message)
    : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      message_(message) {}

const LogicDecl* SpecFile::find_logic(std::string_view name) const {
  auto it = std::find_if(logics.begin(), logics.end(), [&](const LogicDecl& l) { return l.name == name; });
  return it == logics.end() ? nullptr : &*it;
}

const MapDecl* SpecFile::find_map(std::string_view name) const {
  auto it = std::find_if(maps.begin(), maps.end(), [&](const MapDecl& m) { return m.name == name; });
  return it == maps.end() ? nullptr : &*it;
}

namespace {

enum class TokenKind { ident, arrow, colon, kw_logic, kw_elements, kw_rule, kw_map, kw_end, eof };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePosition where;
};

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::ident: return "identifier";
    case TokenKind::arrow: return "'->'";
    case TokenKind::colon: return "':'";
    case TokenKind::kw_logic: return "'logic'";
    case TokenKind::kw_elements: return "'elements'";
    case TokenKind::kw_rule: return "'rule'";
    case TokenKind::kw_map: return "'map'";
    case TokenKind::kw_end: return "'end'";
    case TokenKind::eof: return "end of input";
  }
  return "token";
}

TokenKind keyword_or_ident(const std::string& word) {
  if (word == "logic") return TokenKind::kw_logic;
  if (word == "elements") return TokenKind::kw_elements;
  if (word == "rule") return TokenKind::kw_rule;
  if (word == "map") return TokenKind::kw_map;
  if (word == "end") return TokenKind::kw_end;
  return TokenKind::ident;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  SourcePosition pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance();
    } else if (c == ':') {
      tokens.push_back({TokenKind::colon, ":", pos});
      advance();
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({TokenKind::arrow, "->", pos});
      advance();
      advance();
    } else if (ident_start(c)) {
      const SourcePosition start = pos;
      std::string word;
      while (i < text.size() && ident_char(text[i])) {
        word.push_back(text[i]);
        advance();
      }
      tokens.push_back({keyword_or_ident(word), word, start});
    } else {
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back({TokenKind::eof, "", pos});
  return tokens;
}

struct NamedAt {
  std::string name;
  SourcePosition where;
};

struct RuleSite {
  std::vector<NamedAt> premises;
  NamedAt conclusion;
};

struct LogicSite {
  NamedAt name;
  std::vector<NamedAt> elements;
  std::vector<RuleSite> rules;
};

struct MapSite {
  NamedAt name;
  NamedAt domain;
  NamedAt codomain;
  std::vector<std::pair<NamedAt, NamedAt>> assignments;
  SourcePosition end;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  void run() {
    while (peek().kind != TokenKind::eof) {
      if (peek().kind == TokenKind::kw_logic) {
        logic();
      } else if (peek().kind == TokenKind::kw_map) {
        map();
      } else {
        fail("expected 'logic' or 'map'");
      }
    }
  }

  std::vector<LogicSite> logics;
  std::vector<MapSite> maps;

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }

  [[noreturn]] void fail(const std::string& expectation) const {
    const Token& t = peek();
    std::string found = describe(t.kind);
    if (t.kind == TokenKind::ident) found += " '" + t.text + "'";
    throw SyntaxError(t.where, expectation + ", found " + found);
  }

  const Token& expect(TokenKind k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k));
    return take();
  }

  NamedAt ident() {
    const Token& t = expect(TokenKind::ident);
    return {t.text, t.where};
  }

  void logic() {
    take();
    LogicSite site{ident(), {}, {}};
    expect(TokenKind::kw_elements);
    while (peek().kind == TokenKind::ident) site.elements.push_back(ident());
    while (peek().kind == TokenKind::kw_rule) {
      take();
      RuleSite rule;
      while (peek().kind == TokenKind::ident) rule.premises.push_back(ident());
      expect(TokenKind::arrow);
      rule.conclusion = ident();
      site.rules.push_back(std::move(rule));
    }
    expect(TokenKind::kw_end);
    logics.push_back(std::move(site));
  }

  void map() {
    take();
    MapSite site;
    site.name = ident();
    expect(TokenKind::colon);
    site.domain = ident();
    expect(TokenKind::arrow);
    site.codomain = ident();
    while (peek().kind == TokenKind::ident) {
      NamedAt from = ident();
      expect(TokenKind::arrow);
      NamedAt to = ident();
      site.assignments.emplace_back(std::move(from), std::move(to));
    }
    site.end = expect(TokenKind::kw_end).where;
    maps.push_back(std::move(site));
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

[[noreturn]] void invalid(const NamedAt& at, const std::string& message) {
  throw ValidationError(at.where, message);
}

void validate(const Parser& p) {
  std::set<std::string, std::less<>> names;
  auto claim = [&](const NamedAt& n) {
    if (!names.insert(n.name).second) invalid(n, "duplicate name '" + n.name + "'");
  };
  for (const auto& l : p.logics) claim(l.name);
  for (const auto& m : p.maps) claim(m.name);

  auto index_elements = [](const LogicSite& l) {
    std::map<std::string, std::size_t, std::less<>> idx;
    for (const auto& e : l.elements) {
      if (!idx.emplace(e.name, idx.size()).second) {
        invalid(e, "duplicate element '" + e.name + "' in logic '" + l.name.name + "'");
      }
    }
    return idx;
  };

  std::map<std::string, const LogicSite*, std::less<>> by_name;
  for (const auto& l : p.logics) {
    if (l.elements.size() > kHardCap) {
      invalid(l.elements[kHardCap], "logic '" + l.name.name + "' has more than " + std::to_string(kHardCap) +
                                        " elements");
    }
    const auto idx = index_elements(l);
    auto known = [&](const NamedAt& e) {
      if (!idx.contains(e.name)) invalid(e, "unknown element '" + e.name + "' in logic '" + l.name.name + "'");
    };
    for (const auto& r : l.rules) {
      for (const auto& e : r.premises) known(e);
      known(r.conclusion);
    }
    by_name.emplace(l.name.name, &l);
  }

  for (const auto& m : p.maps) {
    auto lookup = [&](const NamedAt& n) {
      auto it = by_name.find(n.name);
      if (it == by_name.end()) invalid(n, "unknown logic '" + n.name + "'");
      return it->second;
    };
    const LogicSite* dom = lookup(m.domain);
    const LogicSite* cod = lookup(m.codomain);
    const auto dom_idx = index_elements(*dom);
    const auto cod_idx = index_elements(*cod);
    std::vector<bool> assigned(dom->elements.size(), false);
    for (const auto& [from, to] : m.assignments) {
      auto it = dom_idx.find(from.name);
      if (it == dom_idx.end()) invalid(from, "unknown element '" + from.name + "' in logic '" + dom->name.name + "'");
      if (!cod_idx.contains(to.name)) invalid(to, "unknown element '" + to.name + "' in logic '" + cod->name.name + "'");
      if (assigned[it->second]) invalid(from, "element '" + from.name + "' assigned twice in map '" + m.name.name + "'");
      assigned[it->second] = true;
    }
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      if (!assigned[i]) {
        throw ValidationError(m.end, "map '" + m.name.name + "' does not assign element '" + dom->elements[i].name +
                                         "'");
      }
    }
  }
}

std::vector<std::string> names_of(const std::vector<NamedAt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& n : v) out.push_back(n.name);
  return out;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  Parser p(tokenize(text));
  p.run();
  validate(p);
  SpecFile spec;
  for (const auto& l : p.logics) {
    LogicDecl d{l.name.name, names_of(l.elements), {}};
    for (const auto& r : l.rules) d.rules.push_back({names_of(r.premises), r.conclusion.name});
    spec.logics.push_back(std::move(d));
  }
  for (const auto& m : p.maps) {
    MapDecl d{m.name.name, m.domain.name, m.codomain.name, {}};
    for (const auto& [from, to] : m.assignments) d.assignments.emplace_back(from.name, to.name);
    spec.maps.push_back(std::move(d));
  }
  return spec;
}

std::string print_spec(const SpecFile& spec) {
  std::string out;
  auto words = [&](const std::vector<std::string>& v) {
    for (const auto& w : v) out += " " + w;
  };
  bool first = true;
  auto separate = [&] {
    if (!first) out += "\n";
    first = false;
  };
  for (const auto& l : spec.logics) {
    separate();
    out += "logic " + l.name + "\n  elements";
    words(l.elements);
    out += "\n";
    for (const auto& r : l.rules) {
      out += "  rule";
      words(r.premises);
      out += " -> " + r.conclusion + "\n";
    }
    out += "end\n";
  }
  for (const auto& m : spec.maps) {
    separate();
    out += "map " + m.name + " : " + m.domain + " -> " + m.codomain + "\n";
    for (const auto& [from, to] : m.assignments) out += "  " + from + " -> " + to + "\n";
    out += "end\n";
  }
  return out;
}

Model resolve(const SpecFile& spec) {
  Model model;
  for (const auto& l : spec.logics) {
    const Universe x(l.elements);
    std::vector<Rule> rules;
    for (const auto& r : l.rules) {
      Mask premises = 0;
      for (const auto& p : r.premises) premises |= Mask{1} << *x.index_of(p);
      rules.push_back({premises, *x.index_of(r.conclusion)});
    }
    model.logics.emplace(l.name, generate(x, rules));
  }
  for (const auto& m : spec.maps) {
    const AbstractLogic& dom = model.logics.at(m.domain);
    const AbstractLogic& cod = model.logics.at(m.codomain);
    std::vector<std::size_t> targets(dom.carrier().size());
    for (const auto& [from, to] : m.assignments) targets[*dom.carrier().index_of(from)] = *cod.carrier().index_of(to);
    model.maps.emplace(m.name, ResolvedMap{m.domain, m.codomain, TotalMap(dom.carrier(), cod.carrier(), targets)});
  }
  return model;
}

}  // namespace ulog
