#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

Family family_of(const Universe& x, std::uint64_t word) {
  return Family(x, BitVector::from_word(x.subset_count(), word));
}

void up_closure_is_closure(LawContext& ctx) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Universe x = law_carrier(n);
    const std::uint64_t families = std::uint64_t{1} << x.subset_count();
    std::vector<UpSet> closed;
    closed.reserve(families);
    for (std::uint64_t w = 0; w < families; ++w) closed.push_back(up_closure(family_of(x, w)));
    for (std::uint64_t w = 0; w < families; ++w) {
      const Family f = family_of(x, w);
      const UpSet& c = closed[w];
      const bool extensive = f.bits().is_subset_of(c.bits());
      const bool idempotent = up_closure(c.family()) == c;
      ctx.check(extensive && idempotent, sizes({n}), [&] { return witness({{"F", f.to_string()}}); });
      for (std::uint64_t v = w;; v = (v - 1) & w) {
        ctx.check(closed[v].is_subset_of(c), sizes({n}),
                  [&] { return witness({{"F", family_of(x, v).to_string()}, {"G", f.to_string()}}); });
        if (v == 0) break;
      }
    }
  }
}

void upsets_are_fixed_points(LawContext& ctx) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = law_carrier(n);
    const auto ups = enumerate_upsets(x);
    std::vector<Family> fixed;
    const std::uint64_t families = std::uint64_t{1} << x.subset_count();
    for (std::uint64_t w = 0; w < families; ++w) {
      Family f = family_of(x, w);
      if (up_closure(f).family() == f) fixed.push_back(std::move(f));
    }
    ctx.check(ups.size() == fixed.size(), sizes({n}), [&] {
      return witness({{"enumerated", std::to_string(ups.size())}, {"fixed", std::to_string(fixed.size())}});
    });
    for (std::size_t i = 0; i < std::min(ups.size(), fixed.size()); ++i) {
      ctx.check(ups[i].family() == fixed[i], sizes({n}),
                [&] { return witness({{"position", std::to_string(i)}, {"U", ups[i].to_string()}}); });
    }
  }
}

void subset_index_bijection(LawContext& ctx) {
  for (std::size_t n = 0; n <= kHardCap; ++n) {
    const Universe x = law_carrier(n);
    const auto subsets = enumerate_subsets(x);
    ctx.check(subsets.size() == x.subset_count(), sizes({n}), [&] { return std::to_string(subsets.size()); });
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      ctx.check(subsets[i].mask() == i, sizes({n}), [&] { return witness({{"index", std::to_string(i)}}); });
    }
  }
}

}  // namespace

void register_core_laws(std::vector<Law>& out) {
  out.push_back({"core.up-closure-is-closure",
                 "up_closure of families is extensive, monotone and idempotent (all families, size <= 3)",
                 up_closure_is_closure});
  out.push_back({"core.upsets-are-fixed-points",
                 "enumerate_upsets lists exactly the families fixed by up_closure, once each, ascending (size <= 4)",
                 upsets_are_fixed_points});
  out.push_back({"core.subset-index-bijection", "enumerate_subsets(X)[i] has bit pattern i", subset_index_bijection});
}

}  // namespace ulog::laws
