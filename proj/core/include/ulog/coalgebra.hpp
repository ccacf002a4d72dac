#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ulog/family.hpp"
#include "ulog/monotone.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// A map rho: Y -> UX, that is a morphism from Y to X in the Kleisli category
/// of the up-set monad. domain() is Y, codomain() is X.
class KleisliMorphism {
 public:
  KleisliMorphism(Universe domain, Universe codomain, std::vector<UpSet> values);

  const Universe& domain() const { return domain_; }
  const Universe& codomain() const { return codomain_; }
  const UpSet& operator()(std::size_t y) const { return values_[y]; }
  const std::vector<UpSet>& values() const { return values_; }

  std::string encode() const;

  friend bool operator==(const KleisliMorphism& a, const KleisliMorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.values_ == b.values_;
  }

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<UpSet> values_;
};

/// rho(y) <= rho'(y) for every y.
bool leq(const KleisliMorphism& rho, const KleisliMorphism& rho2);

/// eta_X(x) = {A | x in A}
KleisliMorphism eta(const Universe& x);

/// UX as a carrier: element i is enumerate_upsets(x)[i].
Universe upset_universe(const Universe& x);

/// A^# = {up-sets containing A}, as a subset of upset_universe(A's carrier).
Subset sharp(const Subset& a);

/// An element of UUX, given by membership of subsets of upset_universe(X).
using UpSetFamilyMembership = std::function<bool(const BitVector&)>;

/// mu_X(F) = {A | A^# in F}
UpSet mu_apply(const UpSetFamilyMembership& family, const Universe& x);
/// Materialized form; family must be an up-closed family over
/// upset_universe(x). Requires x.size() <= kPowersetPowersetCap.
UpSet mu_apply(const Family& family, const Universe& x);

/// (rho * sigma)(z) = {A | {y | A in rho(y)} in sigma(z)} for
/// rho: Y -> UX, sigma: Z -> UY.
KleisliMorphism kleisli_star(const KleisliMorphism& rho, const KleisliMorphism& sigma);
/// mu_X . U rho . sigma through UUX membership. Requires |X| <= kPowersetPowersetCap.
KleisliMorphism kleisli_star_definitional(const KleisliMorphism& rho, const KleisliMorphism& sigma);

/// Uf(A) = {B | f^{-1}(B) in A}
UpSet ufunctor_map(const TotalMap& f, const UpSet& a);
/// Uf for an f whose codomain is too large for families: membership of B in Uf(A).
UpSetFamilyMembership ufunctor_membership(const TotalMap& f, const UpSet& a);
/// Vf(B) = {A | f(A) in B}; right adjoint of Uf.
UpSet vfunctor_map(const TotalMap& f, const UpSet& b);
/// {f^{-1}(B) | B in b} closed upward; left adjoint of Uf.
UpSet ufunctor_left_adjoint(const TotalMap& f, const UpSet& b);
/// {f^{-1}(B) | B in b} as is; not up-closed in general.
Family preimage_family(const TotalMap& f, const UpSet& b);

/// rho viewed as a plain map Y -> upset_universe(X).
TotalMap as_total_map(const KleisliMorphism& rho);

/// rho . f for f: X -> Y, rho: Y -> UZ.
KleisliMorphism precompose(const KleisliMorphism& rho, const TotalMap& f);
/// Uf . rho for rho: Z -> UX, f: X -> Y.
KleisliMorphism apply_ufunctor(const TotalMap& f, const KleisliMorphism& rho);
/// Vf . sigma for sigma: Z -> UY, f: X -> Y.
KleisliMorphism apply_vfunctor(const TotalMap& f, const KleisliMorphism& sigma);

/// f_<>(x) = {B | f(x) in B}: X -> UY
KleisliMorphism diamond_lower(const TotalMap& f);
/// f^<>(y) = {A | y in f(A)}: Y -> UX
KleisliMorphism diamond_upper(const TotalMap& f);

/// The mate of r: X ~> Y read as Y -> UX.
KleisliMorphism to_kleisli(const MonotoneRelation& r);
MonotoneRelation to_monotone(const KleisliMorphism& rho);

/// A carrier with a structure map alpha: X -> UX.
class UCoalgebra {
 public:
  explicit UCoalgebra(KleisliMorphism structure);

  const Universe& carrier() const { return structure_.domain(); }
  const KleisliMorphism& structure() const { return structure_; }
  const UpSet& operator()(std::size_t x) const { return structure_(x); }

  friend bool operator==(const UCoalgebra&, const UCoalgebra&) = default;

 private:
  KleisliMorphism structure_;
};

UCoalgebra to_coalgebra(const AbstractLogic& l);
/// eta <= alpha and alpha * alpha <= alpha.
bool is_logic_induced(const UCoalgebra& alpha);
/// Throws AxiomViolation unless alpha is logic-induced.
AbstractLogic to_logic(const UCoalgebra& alpha);

/// Every coalgebra on x, structure of element 0 varying fastest.
std::vector<UCoalgebra> enumerate_coalgebras(const Universe& x);

struct MapClassification {
  bool preserving = false;    // Uf.alpha <= beta.f
  bool conservative = false;  // alpha = Vf.beta.f
  bool progressive = false;   // beta = f_<> * alpha * f^<>
  bool open = false;          // Uf.alpha = beta.f
};

MapClassification classify_map(const TotalMap& f, const UCoalgebra& alpha, const UCoalgebra& beta);

struct CoalgebraicPreservingForms {
  bool source_side = false;  // alpha * f^<>  <=  f^<> * beta
  bool target_side = false;  // f_<> * alpha  <=  beta * f_<>
  bool functor_form = false; // Uf.alpha <= beta.f
};

CoalgebraicPreservingForms coalgebraic_preserving_forms(const TotalMap& f, const UCoalgebra& alpha,
                                                        const UCoalgebra& beta);
/// alpha = f^<> * beta * f_<>
bool conservative_kleisli_form(const TotalMap& f, const UCoalgebra& alpha, const UCoalgebra& beta);

struct SumResult {
  AbstractLogic logic;
  std::vector<TotalMap> injections;
};

/// Disjoint union with A |- x iff (A restricted to the summand of x) entails x
/// there. Element labels are "<tag>.<label>"; tags default to 1, 2, ...
SumResult sum(std::span<const AbstractLogic> logics, std::span<const std::string> tags = {});

/// The map out of the sum that restricts to components[i] on summand i.
TotalMap copair(const SumResult& s, std::span<const TotalMap> components);

struct HomomorphicImage {
  TotalMap corestriction;  // X -> f(X), surjective
  UCoalgebra image;
};

/// The image of alpha along f, defined when Uf.alpha is constant on fibres.
std::optional<HomomorphicImage> homomorphic_image(const TotalMap& f, const UCoalgebra& alpha);

}  // namespace ulog
