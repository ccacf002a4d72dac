#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

std::size_t exhaustive(const LawContext& ctx) { return std::min<std::size_t>(ctx.config().max_exhaustive_size, 2); }

void functorial(LawContext& ctx) {
  auto one = [&](const Relation& r, const Relation& s, const std::string& sz) {
    ctx.check(lift(compose(s, r)) == compose(lift(s), lift(r)), sz,
              [&] { return witness({{"r", r.encode()}, {"s", s.encode()}}); });
  };
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      for (std::size_t nz = 0; nz <= k; ++nz) {
        const auto rs = enumerate_relations(law_carrier(nx), law_target(ny));
        const auto ss = enumerate_relations(law_target(ny), law_third(nz));
        for (const auto& r : rs) {
          for (const auto& s : ss) one(r, s, sizes({nx, ny, nz}));
        }
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n), z = law_third(n);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const Relation r = ctx.sampler().relation(x, y);
    const Relation s = ctx.sampler().relation(y, z);
    one(r, s, sizes({n, n, n}));
  }
}

void image_inclusion(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      for (const auto& f : enumerate_maps(law_carrier(nx), law_target(ny))) {
        const Relation pf = graph(direct_image_map(f));
        const Relation pfc = converse(direct_image_map(f));
        ctx.check(leq(pf, lift(graph(f))) && leq(pfc, lift(converse(f))), sizes({nx, ny}),
                  [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

void along_maps(LawContext& ctx) {
  auto post = [&](const TotalMap& f, const Relation& s, const std::string& sz) {
    ctx.check(lift(compose(s, graph(f))) == compose(lift(s), graph(direct_image_map(f))), sz,
              [&] { return witness({{"f", f.encode()}, {"s", s.encode()}}); });
  };
  auto pre = [&](const TotalMap& f, const Relation& r, const std::string& sz) {
    ctx.check(lift(compose(converse(f), r)) == compose(converse(direct_image_map(f)), lift(r)), sz,
              [&] { return witness({{"f", f.encode()}, {"r", r.encode()}}); });
  };
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      for (std::size_t nb = 0; nb <= k; ++nb) {
        const Universe x = law_carrier(nx), y = law_target(ny), b = law_third(nb);
        const auto ss = enumerate_relations(y, b);
        const auto rs = enumerate_relations(b, y);
        for (const auto& f : enumerate_maps(x, y)) {
          for (const auto& s : ss) post(f, s, sizes({nx, ny, nb}));
          for (const auto& r : rs) pre(f, r, sizes({nx, ny, nb}));
        }
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n), b = law_third(n);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const TotalMap f = ctx.sampler().map(x, y);
    post(f, ctx.sampler().relation(y, b), sizes({n, n, n}));
    pre(f, ctx.sampler().relation(b, y), sizes({n, n, n}));
  }
}

void unit_multiplication(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= kPowersetPowersetCap; ++nx) {
    for (std::size_t ny = 0; ny <= kPowersetPowersetCap; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const Relation ex = graph(unit_map(x));
      const Relation ey = graph(unit_map(y));
      const Relation mx = graph(multiplication_map(x));
      const Relation my = graph(multiplication_map(y));
      auto one = [&](const Relation& r) {
        const Relation lr = lift(r);
        const bool unit = leq(compose(ey, r), compose(lr, ex));
        const bool mult = compose(lr, mx) == compose(my, lift(lr));
        ctx.check(unit && mult, sizes({nx, ny}), [&] { return witness({{"r", r.encode()}}); });
      };
      for (const auto& r : enumerate_relations(x, y)) one(r);
    }
  }
}

void naturality(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= kPowersetPowersetCap; ++nx) {
    for (std::size_t ny = 0; ny <= kPowersetPowersetCap; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const TotalMap ex = unit_map(x), ey = unit_map(y);
      const TotalMap mx = multiplication_map(x), my = multiplication_map(y);
      for (const auto& f : enumerate_maps(x, y)) {
        const TotalMap pf = direct_image_map(f);
        const TotalMap ppf = direct_image_map(pf);
        const bool unit = compose(ey, f) == compose(pf, ex);
        const bool mult = compose(pf, mx) == compose(my, ppf);
        const bool strong = compose(graph(ppf), converse(mx)) == compose(converse(my), graph(pf));
        ctx.check(unit && mult && strong, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

// m_X applied to a union of families, versus m_X applied to the family of unions.
// A set of families over PX is a bit vector indexed by family masks.
void monad_laws(LawContext& ctx) {
  for (std::size_t n = 0; n <= kPowersetPowersetCap; ++n) {
    const Universe x = law_carrier(n);
    const Universe px = powerset_universe(x);
    const TotalMap m = multiplication_map(x);
    const TotalMap e = unit_map(x);
    const TotalMap e_p = unit_map(px);
    const TotalMap id = TotalMap::identity(px);
    ctx.check(compose(m, e_p) == id && compose(m, direct_image_map(e)) == id, sizes({n}),
              [&] { return std::string("unit law"); });
    if (n <= 1) {
      const TotalMap m_p = multiplication_map(px);
      ctx.check(compose(m, m_p) == compose(m, direct_image_map(m)), sizes({n}),
                [&] { return std::string("associativity (materialized)"); });
    }
    const std::size_t families = m.domain().size();
    auto one = [&](const BitVector& sys) {
      std::size_t union_of_families = 0;
      std::size_t family_of_unions = 0;
      sys.for_each_set([&](std::size_t fam) {
        union_of_families |= fam;
        family_of_unions |= std::size_t{1} << m(fam);
      });
      ctx.check(m(union_of_families) == m(family_of_unions), sizes({n}),
                [&] { return witness({{"system", sys.to_string()}}); });
    };
    if (n <= 2) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << families); ++w) one(BitVector::from_word(families, w));
    } else {
      for (std::size_t i = 0; i < ctx.config().samples; ++i) {
        BitVector sys(families);
        const std::size_t k = ctx.sampler().below(6);
        for (std::size_t j = 0; j < k; ++j) sys.set(ctx.sampler().below(families));
        one(sys);
      }
    }
  }
}

}  // namespace

void register_plift_laws(std::vector<Law>& out) {
  out.push_back({"plift.functorial", "lift(s.r) = lift(s).lift(r)", functorial});
  out.push_back({"plift.image-inclusion", "Pf <= lift(f) and (Pf)° <= lift(f°)", image_inclusion});
  out.push_back({"plift.along-maps", "lift(s.f) = lift(s).Pf and lift(f°.r) = (Pf)°.lift(r)", along_maps});
  out.push_back({"plift.unit-multiplication", "e_Y.r <= lift(r).e_X and lift(r).m_X = m_Y.lift(lift(r))",
                 unit_multiplication});
  out.push_back({"plift.naturality", "e and m are natural, and PPf.m_X° = m_Y°.Pf", naturality});
  out.push_back({"plift.monad-laws", "m.eP = 1, m.Pe = 1, m.mP = m.Pm", monad_laws});
}

}  // namespace ulog::laws
