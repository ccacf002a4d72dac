#pragma once

// Fault injection for checking that the law suite can fail. Only compiled
// into builds that define ULOG_MUTATION_HOOKS.
#ifdef ULOG_MUTATION_HOOKS

#include <atomic>

namespace ulog::testing {

struct Mutations {
  /// kcompose ignores the full premise image as a witness.
  std::atomic<bool> corrupt_kcompose{false};
};

Mutations& mutations();

}  // namespace ulog::testing

#endif
