#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

std::size_t exhaustive(const LawContext& ctx) { return std::min<std::size_t>(ctx.config().max_exhaustive_size, 2); }

PowersetMap table_of(const TotalMap& f) { return PowersetMap::from_total_map(f); }

void functor(LawContext& ctx) {
  auto compose_case = [&](const MonotoneRelation& r, const MonotoneRelation& s, const std::string& sz) {
    ctx.check(to_closure(kcompose(s, r)) == compose(to_closure(s), to_closure(r)), sz,
              [&] { return witness({{"r", r.encode()}, {"s", s.encode()}}); });
  };
  auto order_case = [&](const MonotoneRelation& r, const MonotoneRelation& r2, const std::string& sz) {
    ctx.check(leq(r, r2) == leq(to_closure(r), to_closure(r2)), sz,
              [&] { return witness({{"r", r.encode()}, {"r'", r2.encode()}}); });
  };
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    const Universe x = law_carrier(nx);
    ctx.check(to_closure(delta(x)) == PowersetMap::identity(x), sizes({nx}), [] { return std::string("Delta"); });
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe y = law_target(ny);
      const auto rs = monotone_relations(x, y);
      for (const auto& r : rs) {
        for (const auto& r2 : rs) order_case(r, r2, sizes({nx, ny}));
      }
      for (std::size_t nz = 0; nz <= k; ++nz) {
        const auto ss = monotone_relations(y, law_third(nz));
        for (const auto& r : rs) {
          for (const auto& s : ss) compose_case(r, s, sizes({nx, ny, nz}));
        }
      }
      for (const auto& f : enumerate_maps(x, y)) {
        const bool ok = to_closure(lower_sharp(f)) == table_of(direct_image_map(f)) &&
                        to_closure(upper_sharp(f)) == table_of(preimage_map(f));
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n), z = law_third(n);
  CaseSampler& rng = ctx.sampler();
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const MonotoneRelation r = rng.monotone(x, y);
    compose_case(r, rng.monotone(y, z), sizes({n, n, n}));
    order_case(r, rng.monotone(x, y), sizes({n, n}));
    const TotalMap f = rng.map(x, y);
    const bool ok = to_closure(lower_sharp(f)) == table_of(direct_image_map(f)) &&
                    to_closure(upper_sharp(f)) == table_of(preimage_map(f));
    ctx.check(ok, sizes({n, n}), [&] { return witness({{"f", f.encode()}}); });
  }
  for (std::size_t m = 0; m <= 3; ++m) {
    const Universe x3 = law_carrier(m);
    for (const auto& l : logics_on(x3)) {
      const ClosureOperator c = closure_of(l);
      ctx.check(from_closure(c) == l && closure_of(from_closure(c)) == c &&
                    to_closure(l.entails()) == c.map(),
                sizes({m}), [&] { return witness({{"L", "[" + l.encode() + "]"}}); });
    }
  }
}

void cross_view(LawContext& ctx) {
  over_logic_maps(ctx, [&](const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m, const std::string& sz) {
    const ClosureOperator c = closure_of(l), d = closure_of(m);
    const bool preserving = preserving_profile(f, l, m).definitional;
    const bool conservative = is_conservative(f, l, m);
    const OpenVerdict pointwise = is_open_pointwise(f, l, m);
    const MapClassification k = classify_map(f, to_coalgebra(l), to_coalgebra(m));
    const CoalgebraicPreservingForms forms = coalgebraic_preserving_forms(f, to_coalgebra(l), to_coalgebra(m));
    const bool ok = is_continuous(f, c, d) == preserving && is_continuous_adjoint_form(f, c, d) == preserving &&
                    is_initial(f, c, d) == conservative && pointwise == is_open_equational(f, l, m) &&
                    k.preserving == preserving && forms.source_side == preserving &&
                    forms.target_side == preserving && forms.functor_form == preserving &&
                    k.conservative == conservative && conservative_kleisli_form(f, to_coalgebra(l), to_coalgebra(m)) == conservative &&
                    k.open == (pointwise == OpenVerdict::open);
    ctx.check(ok, sz, [&] { return logic_map_witness(f, l, m); });
  });
}

void count(LawContext& ctx) {
  const std::size_t expected[] = {1, 2, 7, 61};
  for (std::size_t n = 0; n <= 3; ++n) {
    const Universe x = law_carrier(n);
    const auto& by_table = logics_on(x);
    const auto by_closed_sets = enumerate_logics_via_closed_sets(x);
    std::vector<std::string> a, b;
    for (const auto& l : by_table) a.push_back(l.encode());
    for (const auto& l : by_closed_sets) b.push_back(l.encode());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const bool distinct = std::adjacent_find(a.begin(), a.end()) == a.end();
    ctx.check(a.size() == expected[n] && distinct && a == b, sizes({n}), [&] {
      return witness({{"tables", std::to_string(a.size())}, {"closed_sets", std::to_string(b.size())}});
    });
  }
}

void preimage_adjunction(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      for (const auto& f : enumerate_maps(x, y)) {
        const PowersetMap pf = table_of(direct_image_map(f));
        const PowersetMap qf = table_of(preimage_map(f));
        bool ok = true;
        for (std::size_t a = 0; a < x.subset_count(); ++a) {
          for (std::size_t b = 0; b < y.subset_count(); ++b) {
            const auto am = static_cast<Mask>(a), bm = static_cast<Mask>(b);
            ok = ok && is_submask(pf(am), bm) == is_submask(am, qf(bm));
          }
        }
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

}  // namespace

void register_closure_laws(std::vector<Law>& out) {
  out.push_back({"closure.functor",
                 "C(Delta) = 1, C(s o r) = C(s).C(r), order embedding, C(f_#) = Pf, C(f^#) = Qf; round trip",
                 functor});
  out.push_back({"closure.cross-view",
                 "continuity, initiality and openness agree with the relational and coalgebraic forms",
                 cross_view});
  out.push_back({"closure.count", "closure operators on 0..3 elements number 1, 2, 7, 61 by two routes", count});
  out.push_back({"closure.preimage-adjunction", "Pf(A) <= B iff A <= Qf(B)", preimage_adjunction});
}

}  // namespace ulog::laws
