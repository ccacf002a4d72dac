#pragma once

#include "ulog/relation.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// Relational lifting r: X -|-> Y  to  PX -|-> PY:
///   A (lift r) B  iff  every y in B has some x in A with x r y.
/// Both carriers must be within kHardCap.
Relation lift(const Relation& r);

/// Pf: PX -> PY, A |-> f(A).
TotalMap direct_image_map(const TotalMap& f);

/// e_X: X -> PX, x |-> {x}.
TotalMap unit_map(const Universe& x);

/// m_X: PPX -> PX, union of a family. Requires x.size() <= kPowersetPowersetCap.
TotalMap multiplication_map(const Universe& x);

}  // namespace ulog
