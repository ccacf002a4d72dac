#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "ulog/closure.hpp"
#include "ulog/coalgebra.hpp"
#include "ulog/enumerate.hpp"
#include "ulog/family.hpp"
#include "ulog/laws.hpp"
#include "ulog/monotone.hpp"
#include "ulog/powerset.hpp"
#include "ulog/relation.hpp"

namespace ulog::laws {

void register_core_laws(std::vector<Law>& out);
void register_rel_laws(std::vector<Law>& out);
void register_plift_laws(std::vector<Law>& out);
void register_mrel_laws(std::vector<Law>& out);
void register_closure_laws(std::vector<Law>& out);
void register_coalg_laws(std::vector<Law>& out);

std::string sizes(std::initializer_list<std::size_t> ns);

/// Cached exhaustive enumerations over the standard law carriers.
const std::vector<AbstractLogic>& logics_on(const Universe& x);
std::vector<MonotoneRelation> monotone_relations(const Universe& x, const Universe& y);
std::vector<KleisliMorphism> kleisli_morphisms(const Universe& y, const Universe& x);

/// Named-value witness builder: witness({{"f", f.encode()}, {"r", r.encode()}}).
std::string witness(std::initializer_list<std::pair<const char*, std::string>> items);

/// Every logic pair and map at exhaustive sizes, then sampled pairs at the
/// sample size.
template <class Check>
void over_logic_maps(LawContext& ctx, Check&& check) {
  const std::size_t k = std::min<std::size_t>(ctx.config().max_exhaustive_size, 3);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto maps = enumerate_maps(x, y);
      for (const auto& l : logics_on(x)) {
        for (const auto& m : logics_on(y)) {
          for (const auto& f : maps) check(f, l, m, sizes({nx, ny}));
        }
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const AbstractLogic l = ctx.sampler().logic(x);
    const AbstractLogic m = ctx.sampler().logic(y);
    check(ctx.sampler().map(x, y), l, m, sizes({n, n}));
  }
}

inline std::string logic_map_witness(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  return witness({{"f", f.encode()}, {"L", "[" + l.encode() + "]"}, {"M", "[" + m.encode() + "]"}});
}

}  // namespace ulog::laws
