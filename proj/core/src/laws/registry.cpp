#include <algorithm>
#include <map>
#include <mutex>

#include "laws/law_support.hpp"

namespace ulog {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Universe lettered(char first, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>(first + i));
  return Universe(std::move(labels));
}

}  // namespace

Universe law_carrier(std::size_t n) { return lettered('a', n); }
Universe law_target(std::size_t n) { return lettered('p', n); }
Universe law_third(std::size_t n) { return lettered('u', n); }

LawContext::LawContext(const SuiteConfig& config, std::string_view law_id)
    : config_(config), sampler_(config.seed ^ fnv1a(law_id)) {
  result_.id = std::string(law_id);
}

bool SuiteReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed(); });
}

std::size_t SuiteReport::total_cases() const {
  std::size_t n = 0;
  for (const auto& r : laws) n += r.cases;
  return n;
}

std::string SuiteReport::render() const {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : laws) {
    out += "LAW " + r.id + " " + std::to_string(r.cases) + (r.passed() ? " pass" : " FAIL");
    if (r.first_failure) {
      failed += 1;
      out += " [sizes " + r.first_failure->sizes + "; " + r.first_failure->witness + "; " +
             std::to_string(r.failures) + " failing]";
    }
    out += "\n";
  }
  out += "TOTAL " + std::to_string(laws.size()) + " laws " + std::to_string(total_cases()) + " cases " +
         std::to_string(failed) + " failed\n";
  return out;
}

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> out;
    laws::register_core_laws(out);
    laws::register_rel_laws(out);
    laws::register_plift_laws(out);
    laws::register_mrel_laws(out);
    laws::register_closure_laws(out);
    laws::register_coalg_laws(out);
    return out;
  }();
  return registry;
}

const Law* find_law(std::string_view id) {
  const auto& r = law_registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const Law& l) { return l.id == id; });
  return it == r.end() ? nullptr : &*it;
}

LawResult run_law(const Law& law, const SuiteConfig& config) {
  LawContext ctx(config, law.id);
  law.run(ctx);
  return std::move(ctx).finish();
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  for (const auto& law : law_registry()) report.laws.push_back(run_law(law, config));
  return report;
}

namespace laws {

std::string sizes(std::initializer_list<std::size_t> ns) {
  std::string out;
  for (auto n : ns) {
    if (!out.empty()) out += ",";
    out += std::to_string(n);
  }
  return out;
}

std::string witness(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += " ";
    out += std::string(name) + "=" + value;
  }
  return out;
}

const std::vector<AbstractLogic>& logics_on(const Universe& x) {
  static std::mutex lock;
  static std::map<std::vector<std::string>, std::vector<AbstractLogic>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(x.labels());
  if (it == cache.end()) it = cache.emplace(x.labels(), enumerate_logics(x)).first;
  return it->second;
}

namespace {

std::vector<std::vector<UpSet>> upset_tuples(const Universe& x, std::size_t count) {
  const auto ups = enumerate_upsets(x);
  std::vector<std::vector<UpSet>> out;
  std::vector<std::size_t> digits(count, 0);
  while (true) {
    std::vector<UpSet> tuple;
    tuple.reserve(count);
    for (auto d : digits) tuple.push_back(ups[d]);
    out.push_back(std::move(tuple));
    std::size_t i = 0;
    while (i < count && ++digits[i] == ups.size()) digits[i++] = 0;
    if (i == count) break;
  }
  return out;
}

}  // namespace

std::vector<MonotoneRelation> monotone_relations(const Universe& x, const Universe& y) {
  std::vector<MonotoneRelation> out;
  for (auto& t : upset_tuples(x, y.size())) out.emplace_back(x, y, std::move(t));
  return out;
}

std::vector<KleisliMorphism> kleisli_morphisms(const Universe& y, const Universe& x) {
  std::vector<KleisliMorphism> out;
  for (auto& t : upset_tuples(x, y.size())) out.emplace_back(y, x, std::move(t));
  return out;
}

}  // namespace laws
}  // namespace ulog
