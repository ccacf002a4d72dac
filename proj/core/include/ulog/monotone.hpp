#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ulog/family.hpp"
#include "ulog/relation.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// A monotone relation r: PX -|-> Y, stored by its mates: A r y iff A is a
/// member of mate(y). Each mate is up-closed, which is exactly monotonicity.
/// Read contravariantly the same payload is a Kleisli morphism Y -> UX.
class MonotoneRelation {
 public:
  MonotoneRelation(Universe source, Universe target, std::vector<UpSet> mates);

  /// Throws AxiomViolation when raw (over powerset_universe(X)) is not monotone.
  static MonotoneRelation from_relation(const Relation& raw);
  /// The relation PX -|-> Y with source powerset_universe(source()).
  Relation to_relation() const;

  const Universe& source() const { return source_; }
  const Universe& target() const { return target_; }
  const UpSet& mate(std::size_t y) const { return mates_[y]; }
  const std::vector<UpSet>& mates() const { return mates_; }

  bool relates(Mask a, std::size_t y) const { return mates_[y].contains(a); }
  /// {y | A r y}
  Mask image(Mask a) const;

  std::string encode() const;

  friend bool operator==(const MonotoneRelation& a, const MonotoneRelation& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.mates_ == b.mates_;
  }

 private:
  Universe source_;
  Universe target_;
  std::vector<UpSet> mates_;
};

/// Pointwise inclusion of monotone relations.
bool leq(const MonotoneRelation& r, const MonotoneRelation& r2);

/// A Delta_X x iff x in A; the identity of MRel.
MonotoneRelation delta(const Universe& x);

/// s o r : A (s o r) z iff some B has B s z and A r y for every y in B.
MonotoneRelation kcompose(const MonotoneRelation& s, const MonotoneRelation& r);

/// s . lift(r) . m_X° evaluated literally on arbitrary relations
/// r: PX -|-> Y, s: PY -|-> Z. Requires |X| <= kPowersetPowersetCap.
Relation kcompose_definitional(const Relation& s, const Relation& r);

/// A f_# y iff y in f(A).
MonotoneRelation lower_sharp(const TotalMap& f);
/// B f^# x iff f(x) in B.
MonotoneRelation upper_sharp(const TotalMap& f);

/// raw: PX -|-> Y has up-closed columns.
bool is_monotone(const Relation& raw);

struct ConsequenceAxioms {
  bool reflexivity = false;            // x in A implies A |- x
  bool singleton_reflexivity = false;  // {x} |- x
  bool weakening = false;
  bool cut = false;

  bool holds() const { return reflexivity && weakening && cut; }
};

/// Evaluates the consequence-relation axioms directly on raw: PX -|-> X.
ConsequenceAxioms consequence_axioms(const Relation& raw);
bool is_consequence(const Relation& raw);

/// Delta_X <= r and r o r <= r.
bool is_monoid(const MonotoneRelation& r);

/// A set X with a consequence relation, kept alongside its closure table.
class AbstractLogic {
 public:
  /// Throws AxiomViolation unless entails is a monoid in MRel.
  explicit AbstractLogic(MonotoneRelation entails);

  const Universe& carrier() const { return entails_.source(); }
  const MonotoneRelation& entails() const { return entails_; }
  bool entails(Mask premises, std::size_t x) const { return entails_.relates(premises, x); }
  /// {x | A |- x}
  Mask closure_of(Mask premises) const { return closure_[premises]; }
  const std::vector<Mask>& closure_table() const { return closure_; }

  std::string encode() const;

  friend bool operator==(const AbstractLogic& a, const AbstractLogic& b) {
    return a.entails_ == b.entails_;
  }

 private:
  MonotoneRelation entails_;
  std::vector<Mask> closure_;
};

struct Rule {
  Mask premises = 0;
  std::size_t conclusion = 0;
};

/// Least consequence relation on X containing every rule.
AbstractLogic generate(const Universe& x, std::span<const Rule> rules);
/// A |- x iff x in A.
AbstractLogic membership_logic(const Universe& x);

/// The characterisations of consequence preservation for f: (X,|-) -> (Y,||-).
struct PreservingProfile {
  bool definitional = false;        // A |- x  =>  f(A) ||- f(x)
  bool graph_square = false;        // f.|-  <=  ||-.Pf
  bool adjoint_bound = false;       // |-  <=  f°.||-.Pf
  bool converse_square = false;     // |-.(Pf)°  <=  f°.||-
  bool sharp_bound = false;         // |-  <=  f^# o ||- o f_#
  bool upper_sharp_square = false;  // |- o f^#  <=  f^# o ||-
  bool lower_sharp_square = false;  // f_# o |-  <=  ||- o f_#

  std::array<bool, 7> entries() const {
    return {definitional,  graph_square,       adjoint_bound,     converse_square,
            sharp_bound,   upper_sharp_square, lower_sharp_square};
  }
  bool agree() const;
};

PreservingProfile preserving_profile(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);
bool is_consequence_preserving(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);

struct ConservativeProfile {
  bool definitional = false;  // A |- x  <=>  f(A) ||- f(x)
  bool relational = false;    // |- = f°.||-.Pf
  bool kleisli = false;       // |- = f^# o ||- o f_#

  bool agree() const { return definitional == relational && relational == kleisli; }
};

ConservativeProfile conservative_profile(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);
bool is_conservative(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m);

}  // namespace ulog
