#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulog/monotone.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// A function PX -> PY given as a table indexed by subset pattern.
class PowersetMap {
 public:
  PowersetMap(Universe source, Universe target, std::vector<Mask> table);
  static PowersetMap identity(const Universe& x);
  /// Reads a TotalMap between powerset carriers as a table.
  static PowersetMap from_total_map(const TotalMap& f);

  const Universe& source() const { return source_; }
  const Universe& target() const { return target_; }
  const std::vector<Mask>& table() const { return table_; }
  Mask operator()(Mask a) const { return table_[a]; }

  bool is_monotone() const;

  friend bool operator==(const PowersetMap&, const PowersetMap&) = default;

 private:
  Universe source_;
  Universe target_;
  std::vector<Mask> table_;
};

/// g . f
PowersetMap compose(const PowersetMap& g, const PowersetMap& f);
/// Pointwise inclusion.
bool leq(const PowersetMap& f, const PowersetMap& g);

/// C(r): A |-> {y | A r y}
PowersetMap to_closure(const MonotoneRelation& r);

struct ClosureViolation {
  enum class Axiom { monotone, extensive, idempotent };
  Axiom axiom;
  Mask witness;  // first violating subset in canonical order
  std::string describe(const Universe& x) const;
};

/// First violated closure axiom, if any.
std::optional<ClosureViolation> check_closure_axioms(const PowersetMap& table);
bool is_closure_operator(const PowersetMap& table);

/// A monotone, extensive, idempotent map PX -> PX.
class ClosureOperator {
 public:
  /// Throws AxiomViolation naming the axiom and witness subset.
  explicit ClosureOperator(PowersetMap table);
  static ClosureOperator identity(const Universe& x);
  static ClosureOperator top(const Universe& x);

  const Universe& carrier() const { return table_.source(); }
  const PowersetMap& map() const { return table_; }
  Mask operator()(Mask a) const { return table_(a); }

  friend bool operator==(const ClosureOperator&, const ClosureOperator&) = default;

 private:
  PowersetMap table_;
};

ClosureOperator closure_of(const AbstractLogic& l);
/// A |- x iff x in c(A).
AbstractLogic from_closure(const ClosureOperator& c);

/// Qf: PY -> PX, B |-> f^{-1}(B).
TotalMap preimage_map(const TotalMap& f);

/// f(c(A)) <= d(f(A)) for all A.
bool is_continuous(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d);
/// c <= Qf.d.Pf
bool is_continuous_adjoint_form(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d);
/// c = Qf.d.Pf
bool is_initial(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d);

/// Openness is only defined for consequence preserving maps.
enum class OpenVerdict { open, not_open, not_preserving };

/// Every B ||- f(x) has some A |- x with f(A) <= B.
OpenVerdict is_open_pointwise(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);
/// f^# o ||- = |- o f^#
OpenVerdict is_open_equational(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);

}  // namespace ulog
