#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "ulog/closure.hpp"
#include "ulog/coalgebra.hpp"
#include "ulog/enumerate.hpp"
#include "ulog/laws.hpp"
#include "ulog/spec_file.hpp"

namespace ulog::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spec-file error already carrying "file:line:column:".
class FileError : public std::runtime_error {
 public:
  FileError(int exit_code, const std::string& what) : std::runtime_error(what), exit_code(exit_code) {}
  int exit_code;
};

struct Loaded {
  SpecFile spec;
  Model model;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    SpecFile spec = parse_spec(text.str());
    Model model = resolve(spec);
    return {std::move(spec), std::move(model)};
  } catch (const SpecError& e) {
    const int code = dynamic_cast<const SyntaxError*>(&e) != nullptr ? kExitUsage : kExitFailure;
    throw FileError(code, path + ":" + e.what());
  }
}

const AbstractLogic& logic_named(const Model& m, const std::string& name) {
  auto it = m.logics.find(name);
  if (it == m.logics.end()) throw UsageError("no logic named '" + name + "'");
  return it->second;
}

void print_closure(std::ostream& out, const AbstractLogic& l) {
  const Universe& x = l.carrier();
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    const auto am = static_cast<Mask>(a);
    out << x.format_mask(am) << " => " << x.format_mask(l.closure_of(am)) << "\n";
  }
}

void print_entailments(std::ostream& out, const AbstractLogic& l) {
  const Universe& x = l.carrier();
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    const auto am = static_cast<Mask>(a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (l.entails(am, i)) out << x.format_mask(am) << " |- " << x.label(i) << "\n";
    }
  }
}

void print_coalgebra(std::ostream& out, const AbstractLogic& l) {
  const UCoalgebra alpha = to_coalgebra(l);
  const Universe& x = l.carrier();
  for (std::size_t i = 0; i < x.size(); ++i) out << "alpha(" << x.label(i) << ") = " << alpha(i).to_string() << "\n";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite abstract logics: consequence relations, closure operators and up-set coalgebras", "ulog"};
  app.require_subcommand(1);

  std::string file, logic_name, map_name, view_as = "closure", logics_list, sum_name, count_what;
  std::size_t count_n = 0;
  SuiteConfig suite;

  auto* check = app.add_subcommand("check", "Parse and validate a spec file");
  check->add_option("FILE", file, "Spec file")->required();

  auto* close = app.add_subcommand("close", "Print the closure table of a logic");
  close->add_option("FILE", file, "Spec file")->required();
  close->add_option("--logic", logic_name, "Logic name")->required();

  auto* view = app.add_subcommand("view", "Print a logic as relation, closure operator or coalgebra");
  view->add_option("FILE", file, "Spec file")->required();
  view->add_option("--logic", logic_name, "Logic name")->required();
  view->add_option("--as", view_as, "rel, closure or coalg")
      ->check(CLI::IsMember({"rel", "closure", "coalg"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify a map between two logics");
  classify->add_option("FILE", file, "Spec file")->required();
  classify->add_option("--map", map_name, "Map name")->required();

  auto* sum_cmd = app.add_subcommand("sum", "Print the sum of logics over a disjoint carrier");
  sum_cmd->add_option("FILE", file, "Spec file")->required();
  sum_cmd->add_option("--logics", logics_list, "Comma-separated logic names")->required();
  sum_cmd->add_option("--name", sum_name, "Name for the sum");

  auto* laws_cmd = app.add_subcommand("laws", "Run the law suite");
  laws_cmd->add_option("--max-size", suite.max_exhaustive_size, "Largest exhaustively checked carrier")
      ->capture_default_str();
  laws_cmd->add_option("--samples", suite.samples, "Random cases per sampled law")->capture_default_str();
  laws_cmd->add_option("--seed", suite.seed, "Sampling seed")->capture_default_str();

  auto* count = app.add_subcommand("count", "Count up-sets or logics on an n-element carrier");
  count->add_option("WHAT", count_what, "upsets or logics")->required()->check(CLI::IsMember({"upsets", "logics"}));
  count->add_option("--n", count_n, "Carrier size")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      const Loaded loaded = load(file);
      for (const auto& l : loaded.spec.logics) {
        out << "logic " << l.name << ": " << l.elements.size() << " elements, " << l.rules.size() << " rules\n";
      }
      for (const auto& f : loaded.spec.maps) out << "map " << f.name << ": " << f.domain << " -> " << f.codomain << "\n";
    } else if (close->parsed()) {
      print_closure(out, logic_named(load(file).model, logic_name));
    } else if (view->parsed()) {
      const Model m = load(file).model;
      const AbstractLogic& l = logic_named(m, logic_name);
      if (view_as == "rel") {
        print_entailments(out, l);
      } else if (view_as == "coalg") {
        print_coalgebra(out, l);
      } else {
        print_closure(out, l);
      }
    } else if (classify->parsed()) {
      const Model m = load(file).model;
      auto it = m.maps.find(map_name);
      if (it == m.maps.end()) throw UsageError("no map named '" + map_name + "'");
      const TotalMap& f = it->second.map;
      const AbstractLogic& l = m.logics.at(it->second.domain);
      const AbstractLogic& n = m.logics.at(it->second.codomain);
      const MapClassification c = classify_map(f, to_coalgebra(l), to_coalgebra(n));
      out << "preserving: " << flag(is_consequence_preserving(f, l, n)) << "\n"
          << "conservative: " << flag(is_conservative(f, l, n)) << "\n"
          << "continuous: " << flag(is_continuous(f, closure_of(l), closure_of(n))) << "\n"
          << "initial: " << flag(is_initial(f, closure_of(l), closure_of(n))) << "\n"
          << "open: " << flag(c.open) << "\n"
          << "progressive: " << flag(c.progressive) << "\n";
    } else if (sum_cmd->parsed()) {
      const Model m = load(file).model;
      const std::vector<std::string> names = split_commas(logics_list);
      std::vector<AbstractLogic> parts;
      for (const auto& name : names) parts.push_back(logic_named(m, name));
      const SumResult s = sum(parts, names);
      std::string title = sum_name;
      if (title.empty()) {
        for (const auto& name : names) title += (title.empty() ? "" : "+") + name;
      }
      out << "sum " << title << "\n";
      print_closure(out, s.logic);
    } else if (laws_cmd->parsed()) {
      const SuiteReport report = run_suite(suite);
      out << report.render();
      return report.passed() ? kExitOk : kExitFailure;
    } else if (count->parsed()) {
      if (count_n > kHardCap) throw CapExceeded("carrier size " + std::to_string(count_n) + " exceeds the cap");
      const Universe x = Universe::standard(count_n);
      const std::size_t result = count_what == "upsets" ? enumerate_upsets(x).size() : enumerate_logics(x).size();
      out << result << "\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace ulog::cli
