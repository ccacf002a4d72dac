#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

void shuffle(LawContext& ctx) {
  const std::size_t k = std::min<std::size_t>(ctx.config().max_exhaustive_size, 2);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx);
      const Universe y = law_target(ny);
      for (const auto& f : enumerate_maps(x, y)) {
        const Relation fg = graph(f);
        const Relation fc = converse(f);
        for (std::size_t nz = 0; nz <= k; ++nz) {
          const Universe z = law_third(nz);
          const auto into_x = enumerate_relations(z, x);
          const auto into_y = enumerate_relations(z, y);
          for (const auto& r : into_x) {
            for (const auto& s : into_y) {
              const bool lhs = leq(compose(fg, r), s);
              const bool rhs = leq(r, compose(fc, s));
              ctx.check(lhs == rhs, sizes({nx, ny, nz}), [&] {
                return witness({{"f", f.encode()}, {"r", r.encode()}, {"s", s.encode()}});
              });
            }
          }
          const auto from_x = enumerate_relations(x, z);
          const auto from_y = enumerate_relations(y, z);
          for (const auto& r : from_x) {
            for (const auto& s : from_y) {
              const bool lhs = leq(r, compose(s, fg));
              const bool rhs = leq(compose(r, fc), s);
              ctx.check(lhs == rhs, sizes({nx, ny, nz}), [&] {
                return witness({{"f", f.encode()}, {"r'", r.encode()}, {"s'", s.encode()}});
              });
            }
          }
        }
      }
    }
  }
}

void category(LawContext& ctx) {
  const std::size_t k = std::min<std::size_t>(ctx.config().max_exhaustive_size, 2);
  for (std::size_t n0 = 0; n0 <= k; ++n0) {
    for (std::size_t n1 = 0; n1 <= k; ++n1) {
      const Universe w = law_carrier(n0);
      const Universe x = law_target(n1);
      const auto rs = enumerate_relations(w, x);
      for (const auto& r : rs) {
        ctx.check(compose(r, Relation::identity(w)) == r && compose(Relation::identity(x), r) == r,
                  sizes({n0, n1}), [&] { return witness({{"r", r.encode()}}); });
      }
      for (std::size_t n2 = 0; n2 <= k; ++n2) {
        const Universe y = law_third(n2);
        const auto ss = enumerate_relations(x, y);
        std::vector<Relation> sr;
        for (const auto& s : ss) {
          for (const auto& r : rs) sr.push_back(compose(s, r));
        }
        for (std::size_t n3 = 0; n3 <= k; ++n3) {
          const Universe z = Universe::standard(n3);
          const auto ts = enumerate_relations(y, z);
          for (const auto& t : ts) {
            std::size_t i = 0;
            for (const auto& s : ss) {
              const Relation t_after_s = compose(t, s);
              for (const auto& r : rs) {
                const bool ok = compose(t, sr[i++]) == compose(t_after_s, r);
                ctx.check(ok, sizes({n0, n1, n2, n3}), [&] {
                  return witness({{"r", r.encode()}, {"s", s.encode()}, {"t", t.encode()}});
                });
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      for (std::size_t nz = 0; nz <= 3; ++nz) {
        const Universe x = law_carrier(nx);
        const Universe y = law_target(ny);
        const Universe z = law_third(nz);
        const auto gs = enumerate_maps(y, z);
        for (const auto& f : enumerate_maps(x, y)) {
          for (const auto& g : gs) {
            const TotalMap gf = compose(g, f);
            const bool ok = converse(gf) == compose(converse(f), converse(g)) &&
                            graph(gf) == compose(graph(g), graph(f));
            ctx.check(ok, sizes({nx, ny, nz}), [&] { return witness({{"f", f.encode()}, {"g", g.encode()}}); });
          }
        }
      }
    }
  }
}

void map_adjunction(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      for (const auto& f : enumerate_maps(law_carrier(nx), law_target(ny))) {
        ctx.check(check_map_adjunction(f), sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

}  // namespace

void register_rel_laws(std::vector<Law>& out) {
  out.push_back({"rel.shuffle",
                 "f.r <= s iff r <= f°.s, and r' <= s'.f iff r'.f° <= s' (all carriers <= 2)", shuffle});
  out.push_back({"rel.category",
                 "relational composition is associative with identities; converse and graph respect map "
                 "composition",
                 category});
  out.push_back({"rel.map-adjunction", "1 <= f°.f and f.f° <= 1 for every map (sizes <= 3)", map_adjunction});
}

}  // namespace ulog::laws
