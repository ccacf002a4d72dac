#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

std::size_t exhaustive(const LawContext& ctx) { return std::min<std::size_t>(ctx.config().max_exhaustive_size, 2); }

Relation raw_delta(const Universe& x) { return delta(x).to_relation(); }

void axiom_equivalence(LawContext& ctx) {
  for (std::size_t n = 0; n <= exhaustive(ctx); ++n) {
    const Universe x = law_carrier(n);
    for (const auto& raw : enumerate_relations(powerset_universe(x), x)) {
      const ConsequenceAxioms ax = consequence_axioms(raw);
      const bool direct = ax.holds();
      const bool primed = ax.singleton_reflexivity && ax.weakening && ax.cut;
      const bool monotone = is_monotone(raw);
      bool monoid = false;
      bool induced = false;
      if (monotone) {
        const MonotoneRelation r = MonotoneRelation::from_relation(raw);
        monoid = is_monoid(r);
        induced = is_logic_induced(UCoalgebra(to_kleisli(r)));
      }
      ctx.check(direct == primed && direct == (monotone && monoid) && direct == (monotone && induced), sizes({n}),
                [&] { return witness({{"raw", raw.encode()}}); });
    }
  }
}

void kleisli_agreement(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      for (std::size_t nz = 0; nz <= k; ++nz) {
        const auto rs = monotone_relations(law_carrier(nx), law_target(ny));
        const auto ss = monotone_relations(law_target(ny), law_third(nz));
        std::vector<Relation> raw_s;
        for (const auto& s : ss) raw_s.push_back(s.to_relation());
        for (const auto& r : rs) {
          const Relation raw_r = r.to_relation();
          for (std::size_t i = 0; i < ss.size(); ++i) {
            const bool ok = kcompose(ss[i], r).to_relation() == kcompose_definitional(raw_s[i], raw_r);
            ctx.check(ok, sizes({nx, ny, nz}), [&] { return witness({{"r", r.encode()}, {"s", ss[i].encode()}}); });
          }
        }
      }
    }
  }
}

void delta_identity(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const Relation dx = raw_delta(x), dy = raw_delta(y);
      for (const auto& r : enumerate_relations(powerset_universe(x), y)) {
        const Relation after = kcompose_definitional(dy, r);
        const Relation before = kcompose_definitional(r, dx);
        const bool monotone = is_monotone(r);
        const bool ok = leq(r, after) && leq(r, before) && (after == r) == monotone && (before == r) == monotone;
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"r", r.encode()}}); });
      }
    }
  }
}

void sharp_rules(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const Relation ey_c = converse(unit_map(y));
      for (const auto& f : enumerate_maps(x, y)) {
        const MonotoneRelation lower = lower_sharp(f);
        const MonotoneRelation upper = upper_sharp(f);
        const Relation pf = graph(direct_image_map(f));
        const bool defs = lower.to_relation() == compose(ey_c, lift(graph(f))) &&
                          upper.to_relation() == compose(converse(f), raw_delta(y));
        ctx.check(defs, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
        for (std::size_t nz = 0; nz <= k; ++nz) {
          const Universe z = law_third(nz);
          for (const auto& r : monotone_relations(z, y)) {
            ctx.check(kcompose(upper, r).to_relation() == compose(converse(f), r.to_relation()),
                      sizes({nx, ny, nz}), [&] { return witness({{"f", f.encode()}, {"r", r.encode()}}); });
          }
          for (const auto& s : monotone_relations(y, z)) {
            ctx.check(kcompose(s, lower).to_relation() == compose(s.to_relation(), pf), sizes({nx, ny, nz}),
                      [&] { return witness({{"f", f.encode()}, {"s", s.encode()}}); });
          }
        }
      }
    }
  }
  const std::size_t per_map = std::max<std::size_t>(1, ctx.config().samples / 50);
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny), z = law_third(3);
      for (const auto& f : enumerate_maps(x, y)) {
        const MonotoneRelation lower = lower_sharp(f);
        const MonotoneRelation upper = upper_sharp(f);
        const Relation pf = graph(direct_image_map(f));
        for (std::size_t i = 0; i < per_map; ++i) {
          const MonotoneRelation r = ctx.sampler().monotone(z, y);
          const MonotoneRelation s = ctx.sampler().monotone(y, z);
          const bool ok = kcompose(upper, r).to_relation() == compose(converse(f), r.to_relation()) &&
                          kcompose(s, lower).to_relation() == compose(s.to_relation(), pf);
          ctx.check(ok, sizes({nx, ny, 3}),
                    [&] { return witness({{"f", f.encode()}, {"r", r.encode()}, {"s", s.encode()}}); });
        }
      }
    }
  }
}

void sharp_functoriality(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const MonotoneRelation dx = delta(x), dy = delta(y);
      const auto fs = enumerate_maps(x, y);
      for (const auto& f : fs) {
        const MonotoneRelation lower = lower_sharp(f), upper = upper_sharp(f);
        ctx.check(leq(dx, kcompose(upper, lower)) && leq(kcompose(lower, upper), dy), sizes({nx, ny}),
                  [&] { return witness({{"f", f.encode()}}); });
      }
      for (std::size_t nz = 0; nz <= 3; ++nz) {
        const auto gs = enumerate_maps(y, law_third(nz));
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            const TotalMap gf = compose(g, f);
            const bool ok = lower_sharp(gf) == kcompose(lower_sharp(g), lower_sharp(f)) &&
                            upper_sharp(gf) == kcompose(upper_sharp(f), upper_sharp(g));
            ctx.check(ok, sizes({nx, ny, nz}), [&] { return witness({{"f", f.encode()}, {"g", g.encode()}}); });
          }
        }
      }
    }
  }
}

void preserving_agreement(LawContext& ctx) {
  over_logic_maps(ctx, [&](const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m, const std::string& sz) {
    ctx.check(preserving_profile(f, l, m).agree(), sz, [&] { return logic_map_witness(f, l, m); });
  });
}

void conservative_agreement(LawContext& ctx) {
  over_logic_maps(ctx, [&](const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m, const std::string& sz) {
    const ConservativeProfile p = conservative_profile(f, l, m);
    const bool ok = p.agree() && (!p.definitional || is_consequence_preserving(f, l, m));
    ctx.check(ok, sz, [&] { return logic_map_witness(f, l, m); });
  });
}

}  // namespace

void register_mrel_laws(std::vector<Law>& out) {
  out.push_back({"mrel.axiom-equivalence",
                 "consequence axioms iff monotone monoid in MRel iff logic-induced coalgebra", axiom_equivalence});
  out.push_back({"mrel.kleisli-agreement", "pointwise composite equals s.lift(r).m_X° on monotone relations",
                 kleisli_agreement});
  out.push_back({"mrel.delta-identity", "r <= Delta o r, r <= r o Delta, with equality iff r is monotone",
                 delta_identity});
  out.push_back({"mrel.sharp-rules", "f^# o r = f°.r and s o f_# = s.Pf", sharp_rules});
  out.push_back({"mrel.sharp-functoriality", "(g.f)_# = g_# o f_#, (g.f)^# = f^# o g^#, and f_# -| f^#",
                 sharp_functoriality});
  out.push_back({"mrel.preserving-profile", "all preservation characterisations agree", preserving_agreement});
  out.push_back({"mrel.conservative-profile",
                 "all conservativity characterisations agree, and conservative implies preserving",
                 conservative_agreement});
}

}  // namespace ulog::laws
