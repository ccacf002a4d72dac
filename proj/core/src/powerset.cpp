#include "ulog/powerset.hpp"

#include <vector>

namespace ulog {

Relation lift(const Relation& r) {
  const Universe& x = r.source();
  const Universe& y = r.target();
  const Universe px = powerset_universe(x);
  const Universe py = powerset_universe(y);

  // witnesses[j] = {i | i r j}
  std::vector<Mask> witnesses(y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.row(i).for_each_set([&](std::size_t j) { witnesses[j] |= Mask{1} << i; });
  }

  Relation out(px, py);
  const std::size_t na = px.size();
  const std::size_t nb = py.size();
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      bool related = true;
      for (std::size_t j = 0; j < y.size() && related; ++j) {
        if (((b >> j) & 1U) != 0 && (witnesses[j] & a) == 0) related = false;
      }
      if (related) out.set(a, b);
    }
  }
  return out;
}

TotalMap direct_image_map(const TotalMap& f) {
  const Universe px = powerset_universe(f.domain());
  const Universe py = powerset_universe(f.codomain());
  std::vector<std::size_t> t(px.size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = f.image(static_cast<Mask>(a));
  return TotalMap(px, py, std::move(t));
}

TotalMap unit_map(const Universe& x) {
  const Universe px = powerset_universe(x);
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::size_t{1} << i;
  return TotalMap(x, px, std::move(t));
}

TotalMap multiplication_map(const Universe& x) {
  require_size_at_most(x, kPowersetPowersetCap, "powerset multiplication");
  const Universe px = powerset_universe(x);
  const Universe ppx = powerset_universe(px);
  std::vector<std::size_t> t(ppx.size());
  for (std::size_t fam = 0; fam < t.size(); ++fam) {
    Mask u = 0;
    for (std::size_t a = 0; a < px.size(); ++a) {
      if ((fam >> a) & 1U) u |= static_cast<Mask>(a);
    }
    t[fam] = u;
  }
  return TotalMap(ppx, px, std::move(t));
}

}  // namespace ulog
