#include <array>

#include "laws/law_support.hpp"

namespace ulog::laws {
namespace {

std::size_t exhaustive(const LawContext& ctx) { return std::min<std::size_t>(ctx.config().max_exhaustive_size, 2); }

std::string coalgebra_witness(const TotalMap& f, const UCoalgebra& a, const UCoalgebra& b) {
  return witness({{"f", f.encode()}, {"alpha", a.structure().encode()}, {"beta", b.structure().encode()}});
}

bool is_bijective(const TotalMap& f) { return f.is_injective() && f.is_surjective(); }

void monad_laws(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  // Unit laws of mu, with the elements of UUX given by membership.
  for (std::size_t n = 0; n <= kPowersetPowersetCap; ++n) {
    const Universe x = law_carrier(n);
    const auto ups = enumerate_upsets(x);
    const TotalMap eta_map = as_total_map(eta(x));
    for (std::size_t i = 0; i < ups.size(); ++i) {
      const UpSetFamilyMembership principal = [i](const BitVector& fam) { return fam.test(i); };
      const bool ok = mu_apply(principal, x) == ups[i] && mu_apply(ufunctor_membership(eta_map, ups[i]), x) == ups[i];
      ctx.check(ok, sizes({n}), [&] { return witness({{"A", ups[i].to_string()}}); });
    }
  }
  // Kleisli unit and associativity, definitional star.
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto rhos = kleisli_morphisms(y, x);
      for (const auto& rho : rhos) {
        const bool ok = kleisli_star_definitional(eta(x), rho) == rho && kleisli_star_definitional(rho, eta(y)) == rho;
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"rho", rho.encode()}}); });
      }
      for (std::size_t nz = 0; nz <= k; ++nz) {
        const Universe z = law_third(nz);
        const auto sigmas = kleisli_morphisms(z, y);
        for (std::size_t nw = 0; nw <= k; ++nw) {
          const auto taus = kleisli_morphisms(Universe::standard(nw), z);
          for (const auto& rho : rhos) {
            for (const auto& sigma : sigmas) {
              const KleisliMorphism rs = kleisli_star_definitional(rho, sigma);
              for (const auto& tau : taus) {
                const bool ok =
                    kleisli_star_definitional(rs, tau) == kleisli_star_definitional(rho, kleisli_star_definitional(sigma, tau));
                ctx.check(ok, sizes({nx, ny, nz, nw}), [&] {
                  return witness({{"rho", rho.encode()}, {"sigma", sigma.encode()}, {"tau", tau.encode()}});
                });
              }
            }
          }
        }
      }
    }
  }
  // Pointwise star: units exhaustively up to 3, associativity sampled at 3.
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      for (const auto& rho : kleisli_morphisms(y, x)) {
        const bool ok = kleisli_star(eta(x), rho) == rho && kleisli_star(rho, eta(y)) == rho;
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"rho", rho.encode()}}); });
      }
    }
  }
  const Universe x = law_carrier(3), y = law_target(3), z = law_third(3), w = Universe::standard(3);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const KleisliMorphism rho = ctx.sampler().kleisli(y, x);
    const KleisliMorphism sigma = ctx.sampler().kleisli(z, y);
    const KleisliMorphism tau = ctx.sampler().kleisli(w, z);
    const bool ok = kleisli_star(kleisli_star(rho, sigma), tau) == kleisli_star(rho, kleisli_star(sigma, tau));
    ctx.check(ok, sizes({3, 3, 3, 3}), [&] {
      return witness({{"rho", rho.encode()}, {"sigma", sigma.encode()}, {"tau", tau.encode()}});
    });
  }
}

void eta_naturality(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      for (const auto& f : enumerate_maps(x, y)) {
        ctx.check(apply_ufunctor(f, eta(x)) == precompose(eta(y), f), sizes({nx, ny}),
                  [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

void equivalence(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    const Universe x = law_carrier(nx);
    ctx.check(to_kleisli(delta(x)) == eta(x), sizes({nx}), [] { return std::string("Delta"); });
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe y = law_target(ny);
      const auto rs = monotone_relations(x, y);
      for (const auto& r : rs) {
        const KleisliMorphism ur = to_kleisli(r);
        ctx.check(to_monotone(ur) == r, sizes({nx, ny}), [&] { return witness({{"r", r.encode()}}); });
        for (const auto& r2 : rs) {
          ctx.check(leq(ur, to_kleisli(r2)) == leq(r, r2), sizes({nx, ny}),
                    [&] { return witness({{"r", r.encode()}, {"r'", r2.encode()}}); });
        }
      }
      for (std::size_t nz = 0; nz <= k; ++nz) {
        const auto ss = monotone_relations(y, law_third(nz));
        for (const auto& r : rs) {
          const KleisliMorphism ur = to_kleisli(r);
          for (const auto& s : ss) {
            const KleisliMorphism us = to_kleisli(s);
            const KleisliMorphism star = kleisli_star(ur, us);
            const bool ok = to_kleisli(kcompose(s, r)) == star && kleisli_star_definitional(ur, us) == star;
            ctx.check(ok, sizes({nx, ny, nz}), [&] { return witness({{"r", r.encode()}, {"s", s.encode()}}); });
          }
        }
      }
    }
  }
}

void logic_induced(LawContext& ctx) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Universe x = law_carrier(n);
    for (const auto& l : logics_on(x)) {
      const UCoalgebra a = to_coalgebra(l);
      ctx.check(is_logic_induced(a) && to_logic(a) == l, sizes({n}),
                [&] { return witness({{"L", "[" + l.encode() + "]"}}); });
    }
    std::size_t induced = 0;
    for (const auto& a : enumerate_coalgebras(x)) {
      bool ok = true;
      if (is_logic_induced(a)) {
        ++induced;
        ok = to_coalgebra(to_logic(a)) == a && kleisli_star(a.structure(), a.structure()) == a.structure();
      } else {
        try {
          (void)to_logic(a);
          ok = false;
        } catch (const AxiomViolation&) {
        }
      }
      ctx.check(ok, sizes({n}), [&] { return witness({{"alpha", a.structure().encode()}}); });
    }
    ctx.check(induced == logics_on(x).size(), sizes({n}), [&] { return witness({{"induced", std::to_string(induced)}}); });
  }
}

// Pullback along every conservative map; pushforward along progressive
// bijections only.
void pullback_pushforward(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto alphas = enumerate_coalgebras(x);
      const auto betas = enumerate_coalgebras(y);
      const auto maps = enumerate_maps(x, y);
      for (const auto& a : alphas) {
        const bool a_induced = is_logic_induced(a);
        for (const auto& b : betas) {
          const bool b_induced = is_logic_induced(b);
          for (const auto& f : maps) {
            const MapClassification c = classify_map(f, a, b);
            const bool first = !(c.conservative && b_induced) || a_induced;
            const bool second = !(is_bijective(f) && c.progressive && a_induced) || b_induced;
            const bool preserving = (!c.conservative && !c.progressive) || c.preserving;
            ctx.check(first && second && preserving, sizes({nx, ny}), [&] { return coalgebra_witness(f, a, b); });
          }
        }
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const TotalMap f = ctx.sampler().map(x, y);
    const UCoalgebra b = to_coalgebra(ctx.sampler().logic(y));
    const UCoalgebra pulled(apply_vfunctor(f, precompose(b.structure(), f)));
    ctx.check(classify_map(f, pulled, b).conservative && is_logic_induced(pulled), sizes({n, n}),
              [&] { return coalgebra_witness(f, pulled, b); });
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    for (std::size_t j = n; j > 1; --j) std::swap(perm[j - 1], perm[ctx.sampler().below(j)]);
    const TotalMap g(x, y, perm);
    const UCoalgebra a = to_coalgebra(ctx.sampler().logic(x));
    const UCoalgebra pushed(kleisli_star(diamond_lower(g), kleisli_star(a.structure(), diamond_upper(g))));
    ctx.check(classify_map(g, a, pushed).progressive && is_logic_induced(pushed), sizes({n, n}),
              [&] { return coalgebra_witness(g, a, pushed); });
  }
}

void open_injections_surjections(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      std::vector<TotalMap> maps;
      for (auto& f : enumerate_maps(x, y)) {
        if (f.is_injective() || f.is_surjective()) maps.push_back(std::move(f));
      }
      if (maps.empty()) continue;
      for (const auto& l : logics_on(x)) {
        const UCoalgebra a = to_coalgebra(l);
        for (const auto& m : logics_on(y)) {
          const UCoalgebra b = to_coalgebra(m);
          for (const auto& f : maps) {
            const MapClassification c = classify_map(f, a, b);
            const bool ok = !c.open || ((!f.is_injective() || c.conservative) && (!f.is_surjective() || c.progressive));
            ctx.check(ok, sizes({nx, ny}), [&] { return coalgebra_witness(f, a, b); });
          }
        }
      }
    }
  }
}

void check_images(LawContext& ctx, const AbstractLogic& l, const TotalMap& f, const std::string& sz) {
  const UCoalgebra a = to_coalgebra(l);
  const auto image = homomorphic_image(f, a);
  if (!image) return;
  const bool ok = is_logic_induced(image->image) && image->corestriction.is_surjective() &&
                  classify_map(image->corestriction, a, image->image).open;
  ctx.check(ok, sz, [&] { return witness({{"f", f.encode()}, {"L", "[" + l.encode() + "]"}}); });
}

void check_sum(LawContext& ctx, const AbstractLogic& l1, const AbstractLogic& l2, const std::string& sz) {
  const std::array<AbstractLogic, 2> parts{l1, l2};
  const SumResult s = sum(parts);
  const UCoalgebra g = to_coalgebra(s.logic);
  bool ok = is_logic_induced(g) && s.injections.size() == 2;
  for (std::size_t i = 0; ok && i < 2; ++i) {
    ok = s.injections[i].is_injective() && classify_map(s.injections[i], to_coalgebra(parts[i]), g).open;
  }
  ctx.check(ok, sz, [&] { return witness({{"L1", "[" + l1.encode() + "]"}, {"L2", "[" + l2.encode() + "]"}}); });
}

void image_sub_sum(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto maps = enumerate_maps(x, y);
      const auto alphas = enumerate_coalgebras(x);
      const auto betas = enumerate_coalgebras(y);
      // Homomorphic images and subcoalgebras along open maps.
      for (const auto& a : alphas) {
        const bool a_induced = is_logic_induced(a);
        for (const auto& b : betas) {
          const bool b_induced = is_logic_induced(b);
          for (const auto& f : maps) {
            if (!classify_map(f, a, b).open) continue;
            const bool image = !(a_induced && f.is_surjective()) || b_induced;
            const bool sub = !(b_induced && f.is_injective()) || a_induced;
            ctx.check(image && sub, sizes({nx, ny}), [&] { return coalgebra_witness(f, a, b); });
          }
        }
      }
      for (const auto& l : logics_on(x)) {
        for (const auto& f : maps) check_images(ctx, l, f, sizes({nx, ny}));
      }
      // Binary sums, then the copairing property against every coalgebra on a third carrier.
      for (const auto& l1 : logics_on(x)) {
        for (const auto& l2 : logics_on(y)) {
          check_sum(ctx, l1, l2, sizes({nx, ny}));
          const std::array<AbstractLogic, 2> parts{l1, l2};
          const SumResult s = sum(parts);
          const UCoalgebra g = to_coalgebra(s.logic);
          for (std::size_t nz = 0; nz <= k; ++nz) {
            const Universe z = law_third(nz);
            const auto into1 = enumerate_maps(x, z);
            const auto into2 = enumerate_maps(y, z);
            for (const auto& d : enumerate_coalgebras(z)) {
              std::vector<const TotalMap*> open1, open2;
              for (const auto& h : into1) {
                if (classify_map(h, to_coalgebra(l1), d).open) open1.push_back(&h);
              }
              for (const auto& h : into2) {
                if (classify_map(h, to_coalgebra(l2), d).open) open2.push_back(&h);
              }
              for (const TotalMap* h1 : open1) {
                for (const TotalMap* h2 : open2) {
                  const std::array<TotalMap, 2> parts_maps{*h1, *h2};
                  const TotalMap h = copair(s, parts_maps);
                  ctx.check(classify_map(h, g, d).open, sizes({nx, ny, nz}), [&] {
                    return witness({{"L1", "[" + l1.encode() + "]"}, {"L2", "[" + l2.encode() + "]"},
                                    {"h", h.encode()}, {"delta", d.structure().encode()}});
                  });
                }
              }
            }
          }
        }
      }
    }
  }
  const std::size_t n = ctx.config().sample_size;
  const Universe x = law_carrier(n), y = law_target(n);
  for (std::size_t i = 0; i < ctx.config().samples; ++i) {
    const AbstractLogic l = ctx.sampler().logic(x);
    check_images(ctx, l, ctx.sampler().map(x, y), sizes({n, n}));
    check_sum(ctx, l, ctx.sampler().logic(y), sizes({n, n}));
  }
}

void diamond_identities(LawContext& ctx) {
  const std::size_t k = exhaustive(ctx);
  for (std::size_t nx = 0; nx <= k; ++nx) {
    for (std::size_t ny = 0; ny <= k; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto fs = enumerate_maps(x, y);
      for (const auto& f : fs) {
        const KleisliMorphism lower = diamond_lower(f), upper = diamond_upper(f);
        const bool ok = to_kleisli(lower_sharp(f)) == upper && to_kleisli(upper_sharp(f)) == lower &&
                        leq(eta(x), kleisli_star(upper, lower)) && leq(kleisli_star(lower, upper), eta(y));
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
        for (std::size_t nz = 0; nz <= k; ++nz) {
          const Universe z = law_third(nz);
          for (const auto& rho : kleisli_morphisms(y, z)) {
            ctx.check(kleisli_star(rho, lower) == precompose(rho, f), sizes({nx, ny, nz}),
                      [&] { return witness({{"f", f.encode()}, {"rho", rho.encode()}}); });
          }
          for (const auto& sigma : kleisli_morphisms(z, y)) {
            ctx.check(kleisli_star(upper, sigma) == apply_vfunctor(f, sigma), sizes({nx, ny, nz}),
                      [&] { return witness({{"f", f.encode()}, {"sigma", sigma.encode()}}); });
          }
          for (const auto& g : enumerate_maps(y, z)) {
            const TotalMap gf = compose(g, f);
            const bool comp = diamond_lower(gf) == kleisli_star(diamond_lower(g), lower) &&
                              diamond_upper(gf) == kleisli_star(upper, diamond_upper(g));
            ctx.check(comp, sizes({nx, ny, nz}), [&] { return witness({{"f", f.encode()}, {"g", g.encode()}}); });
          }
        }
      }
    }
  }
}

void u_adjunctions(LawContext& ctx) {
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const Universe x = law_carrier(nx), y = law_target(ny);
      const auto ux = enumerate_upsets(x);
      const auto uy = enumerate_upsets(y);
      for (const auto& f : enumerate_maps(x, y)) {
        std::vector<UpSet> pushed, pulled, left;
        for (const auto& a : ux) pushed.push_back(ufunctor_map(f, a));
        for (const auto& b : uy) {
          pulled.push_back(vfunctor_map(f, b));
          left.push_back(ufunctor_left_adjoint(f, b));
        }
        bool ok = true;
        for (std::size_t i = 0; i < ux.size() && ok; ++i) {
          for (std::size_t j = 0; j < uy.size() && ok; ++j) {
            ok = pushed[i].is_subset_of(uy[j]) == ux[i].is_subset_of(pulled[j]) &&
                 left[j].is_subset_of(ux[i]) == uy[j].is_subset_of(pushed[i]);
          }
        }
        ctx.check(ok, sizes({nx, ny}), [&] { return witness({{"f", f.encode()}}); });
      }
    }
  }
}

}  // namespace

void register_coalg_laws(std::vector<Law>& out) {
  out.push_back({"coalg.monad-laws", "unit laws and associativity of the Kleisli star, definitional and pointwise",
                 monad_laws});
  out.push_back({"coalg.eta-naturality", "Uf.eta_X = eta_Y.f", eta_naturality});
  out.push_back({"coalg.equivalence", "U(Delta) = eta, U(s o r) = U(r) * U(s), order embedding, star agreement",
                 equivalence});
  out.push_back({"coalg.logic-induced", "logics and logic-induced coalgebras correspond exactly", logic_induced});
  out.push_back({"coalg.pullback-pushforward",
                 "conservative into logic-induced gives logic-induced; progressive bijection out of logic-induced "
                 "gives logic-induced; both kinds of map preserve consequence",
                 pullback_pushforward});
  out.push_back({"coalg.open-injections-surjections",
                 "open injections are conservative and open surjections are progressive",
                 open_injections_surjections});
  out.push_back({"coalg.image-sub-sum",
                 "logic-induced coalgebras are closed under homomorphic images, subcoalgebras and sums",
                 image_sub_sum});
  out.push_back({"coalg.diamond-identities",
                 "rho * f_<> = rho.f, f^<> * sigma = Vf.sigma, sharp correspondence, functoriality, f_<> -| f^<>",
                 diamond_identities});
  out.push_back({"coalg.u-adjunctions", "left adjoint -| Uf -| Vf on up-sets", u_adjunctions});
}

}  // namespace ulog::laws
