#include <numeric>

#include "tors/semiring.hpp"

namespace tors {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

GrothendieckRing grothendieck(const FiniteSemiring& s) {
  const std::size_t m = s.order();
  const std::size_t pairs = m * m;
  auto first = [m](std::size_t p) { return static_cast<Elem>(p / m); };
  auto second = [m](std::size_t p) { return static_cast<Elem>(p % m); };

  // cancel[u][v]: u + t = v + t for some t.
  std::vector<bool> cancel(m * m, false);
  for (Elem u = 0; u < m; ++u)
    for (Elem v = 0; v < m; ++v)
      for (Elem t = 0; t < m && !cancel[u * m + v]; ++t) cancel[u * m + v] = s.add(u, t) == s.add(v, t);
  auto related = [&](std::size_t p, std::size_t q) {
    return cancel[s.add(first(p), second(q)) * m + s.add(first(q), second(p))];
  };

  UnionFind uf(pairs);
  for (std::size_t p = 0; p < pairs; ++p)
    for (std::size_t q = p + 1; q < pairs; ++q)
      if (related(p, q)) uf.unite(p, q);
  for (std::size_t p = 0; p < pairs; ++p)
    for (std::size_t q = p + 1; q < pairs; ++q)
      if (uf.find(p) == uf.find(q) && !related(p, q))
        throw Error("grothendieck: pair relation is not transitive");

  // Classes numbered by first appearance in (x, y) order.
  std::vector<Elem> cls(pairs);
  std::vector<std::size_t> rep;
  std::vector<Elem> root_class(pairs, static_cast<Elem>(-1));
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t r = uf.find(p);
    if (root_class[r] == static_cast<Elem>(-1)) {
      root_class[r] = static_cast<Elem>(rep.size());
      rep.push_back(p);
    }
    cls[p] = root_class[r];
  }
  const std::size_t g = rep.size();
  auto pair_of = [m](Elem x, Elem y) { return static_cast<std::size_t>(x) * m + y; };
  auto oplus = [&](std::size_t p, std::size_t q) {
    return pair_of(s.add(first(p), first(q)), s.add(second(p), second(q)));
  };
  auto odot = [&](std::size_t p, std::size_t q) {
    const Elem x = first(p), y = second(p), x2 = first(q), y2 = second(q);
    return pair_of(s.add(s.mul(x, x2), s.mul(y, y2)), s.add(s.mul(x, y2), s.mul(x2, y)));
  };

  SemiringTables t;
  t.order = g;
  t.add.assign(g, std::vector<Elem>(g));
  t.mul.assign(g, std::vector<Elem>(g));
  for (Elem i = 0; i < g; ++i)
    for (Elem j = 0; j < g; ++j) {
      t.add[i][j] = cls[oplus(rep[i], rep[j])];
      t.mul[i][j] = cls[odot(rep[i], rep[j])];
    }
  for (std::size_t p = 0; p < pairs; ++p)
    for (std::size_t q = 0; q < pairs; ++q)
      if (cls[oplus(p, q)] != t.add[cls[p]][cls[q]] || cls[odot(p, q)] != t.mul[cls[p]][cls[q]])
        throw Error("grothendieck: operations are not well defined on classes");
  if (s.unity()) t.unity = cls[pair_of(s.add(*s.unity(), *s.unity()), *s.unity())];

  GrothendieckRing out;
  out.ring = validate(t);
  out.zero = cls[pair_of(0, 0)];
  for (Elem x = 0; x < m; ++x)
    if (cls[pair_of(x, x)] != out.zero) throw Error("grothendieck: diagonal pairs differ");
  for (Elem c = 0; c < g; ++c)
    if (out.ring.add(out.zero, c) != c) throw Error("grothendieck: zero class is not neutral");
  out.negation.resize(g);
  for (Elem c = 0; c < g; ++c) {
    out.negation[c] = cls[pair_of(second(rep[c]), first(rep[c]))];
    if (out.ring.add(c, out.negation[c]) != out.zero)
      throw Error("grothendieck: missing additive inverse");
  }

  out.sigma.resize(m);
  for (Elem x = 0; x < m; ++x) out.sigma[x] = cls[pair_of(s.add(x, x), x)];
  out.pair_class.assign(cls.begin(), cls.end());
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      if (out.sigma[s.add(x, y)] != out.ring.add(out.sigma[x], out.sigma[y]) ||
          out.sigma[s.mul(x, y)] != out.ring.mul(out.sigma[x], out.sigma[y]))
        throw Error("grothendieck: sigma is not a homomorphism");
      if (out.pair(x, y) != out.subtract(out.sigma[x], out.sigma[y]))
        throw Error("grothendieck: pair class differs from sigma(x) - sigma(y)");
    }
  return out;
}

}  // namespace tors
