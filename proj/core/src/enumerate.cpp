#include "ulog/enumerate.hpp"

#include "ulog/family.hpp"

namespace ulog {
namespace {

struct TableSearch {
  std::size_t n;
  std::size_t subsets;
  std::vector<Mask> table;
  std::vector<bool> must_be_fixed;
  std::vector<ClosureOperator>* out;
  Universe carrier;

  void run(std::size_t a) {
    if (a == subsets) {
      out->emplace_back(PowersetMap(carrier, carrier, table));
      return;
    }
    const auto am = static_cast<Mask>(a);
    // Lower bound from extensivity and monotonicity over the maximal proper subsets.
    Mask floor = am;
    for (std::size_t i = 0; i < n; ++i) {
      if ((am >> i) & 1U) floor |= table[am & ~(Mask{1} << i)];
    }
    if (must_be_fixed[a]) {
      if (floor != am) return;
      table[a] = am;
      run(a + 1);
      return;
    }
    const Mask free = static_cast<Mask>(subsets - 1) & ~floor;
    // Ascending over supersets of floor.
    std::vector<Mask> candidates;
    for_each_submask(free, [&](Mask extra) { candidates.push_back(floor | extra); });
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      const Mask t = *it;
      // c(t) must be t; an already assigned t has to agree.
      if (t < a && table[t] != t) continue;
      const bool was_fixed = must_be_fixed[t];
      must_be_fixed[t] = true;
      table[a] = t;
      run(a + 1);
      must_be_fixed[t] = was_fixed;
    }
  }
};

}  // namespace

std::vector<ClosureOperator> enumerate_closure_operators(const Universe& x) {
  require_size_at_most(x, kLogicEnumerationCap, "logic enumeration");
  std::vector<ClosureOperator> out;
  TableSearch search{x.size(), x.subset_count(), std::vector<Mask>(x.subset_count(), 0),
                     std::vector<bool>(x.subset_count(), false), &out, x};
  search.run(0);
  return out;
}

std::vector<AbstractLogic> enumerate_logics(const Universe& x) {
  std::vector<AbstractLogic> out;
  for (const auto& c : enumerate_closure_operators(x)) out.push_back(from_closure(c));
  return out;
}

std::vector<AbstractLogic> enumerate_logics_via_closed_sets(const Universe& x) {
  require_size_at_most(x, kLogicEnumerationCap, "logic enumeration");
  const std::size_t subsets = x.subset_count();
  const Mask full = x.full_mask();
  std::vector<AbstractLogic> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (((fam >> full) & 1U) == 0) continue;
    bool closed = true;
    for (std::size_t s = 0; s < subsets && closed; ++s) {
      if (((fam >> s) & 1U) == 0) continue;
      for (std::size_t t = s + 1; t < subsets && closed; ++t) {
        if (((fam >> t) & 1U) != 0 && ((fam >> (s & t)) & 1U) == 0) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<Mask> table(subsets);
    for (std::size_t a = 0; a < subsets; ++a) {
      Mask meet = full;
      for (std::size_t s = 0; s < subsets; ++s) {
        if (((fam >> s) & 1U) != 0 && is_submask(static_cast<Mask>(a), static_cast<Mask>(s))) {
          meet &= static_cast<Mask>(s);
        }
      }
      table[a] = meet;
    }
    out.push_back(from_closure(ClosureOperator(PowersetMap(x, x, std::move(table)))));
  }
  return out;
}

std::size_t count_upsets(std::size_t n) { return enumerate_upsets(Universe::standard(n)).size(); }

}  // namespace ulog
