#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ulog/closure.hpp"
#include "ulog/coalgebra.hpp"
#include "ulog/monotone.hpp"
#include "ulog/relation.hpp"
#include "ulog/universe.hpp"

namespace ulog {

struct SuiteConfig {
  std::size_t max_exhaustive_size = 2;
  std::size_t samples = 1000;
  std::size_t sample_size = 3;
  std::uint64_t seed = 20240521;
};

/// First failing case of a law, inputs in canonical encoding.
struct LawCase {
  std::string sizes;    // e.g. "2,1"
  std::string witness;  // "f=[0,1] r=0110|..." style
};

struct LawResult {
  std::string id;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<LawCase> first_failure;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<LawResult> laws;

  bool passed() const;
  std::size_t total_cases() const;
  /// One "LAW <id> <cases> <pass|FAIL> [witness]" line per law, then a TOTAL line.
  std::string render() const;
};

/// Seeded source of random carriers' inhabitants. Uses the raw output of
/// mt19937_64, so a seed gives the same stream on every platform.
class CaseSampler {
 public:
  explicit CaseSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform up to modulo bias; n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin(std::size_t one_in) { return below(one_in) == 0; }

  Mask subset(const Universe& x);
  TotalMap map(const Universe& x, const Universe& y);
  Relation relation(const Universe& s, const Universe& t);
  UpSet upset(const Universe& x);
  MonotoneRelation monotone(const Universe& x, const Universe& y);
  KleisliMorphism kleisli(const Universe& y, const Universe& x);
  /// Random sparse extensive table, made monotone and idempotent by taking
  /// the least consequence relation containing it.
  AbstractLogic logic(const Universe& x);
  UCoalgebra coalgebra(const Universe& x);

 private:
  std::mt19937_64 engine_;
};

class LawContext {
 public:
  LawContext(const SuiteConfig& config, std::string_view law_id);

  const SuiteConfig& config() const { return config_; }
  CaseSampler& sampler() { return sampler_; }

  /// Records one case; witness() is only evaluated for the first failure.
  template <class Witness>
  void check(bool ok, std::string_view sizes, Witness&& witness) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (!result_.first_failure) result_.first_failure = LawCase{std::string(sizes), witness()};
  }

  LawResult finish() && { return std::move(result_); }

 private:
  SuiteConfig config_;
  CaseSampler sampler_;
  LawResult result_;
};

struct Law {
  std::string id;
  std::string statement;
  void (*run)(LawContext&);
};

/// Every registered law in a fixed order.
const std::vector<Law>& law_registry();
const Law* find_law(std::string_view id);

LawResult run_law(const Law& law, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

/// Standard carriers for the laws: a, b, c, ... and p, q, r, ... so that a
/// domain and codomain of the same size are still distinct universes.
Universe law_carrier(std::size_t n);
Universe law_target(std::size_t n);
Universe law_third(std::size_t n);

}  // namespace ulog
