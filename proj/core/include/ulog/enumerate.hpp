#pragma once

#include <vector>

#include "ulog/closure.hpp"
#include "ulog/monotone.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// Largest carrier for which every logic is enumerated.
inline constexpr std::size_t kLogicEnumerationCap = 4;

/// Every closure operator on x, tables ascending lexicographically by subset
/// index. Found by backtracking over monotone extensive tables.
std::vector<ClosureOperator> enumerate_closure_operators(const Universe& x);

/// Every abstract logic on x, in the order of enumerate_closure_operators.
std::vector<AbstractLogic> enumerate_logics(const Universe& x);

/// Every logic on x obtained from the intersection-closed families of subsets
/// containing x (closed sets of the logic). A second route to the same set.
std::vector<AbstractLogic> enumerate_logics_via_closed_sets(const Universe& x);

/// Number of up-sets over a carrier of size n (n <= 5).
std::size_t count_upsets(std::size_t n);

}  // namespace ulog
