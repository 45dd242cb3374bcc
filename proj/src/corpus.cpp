#include <random>

#include "tors/semiring.hpp"

namespace tors {

namespace {

using Table = std::vector<Elem>;  // row-major m*m

// Commutative associative tables on m elements in lexicographic order.
std::vector<Table> commutative_semigroups(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) cells.emplace_back(i, j);
  std::vector<Table> out;
  Table t(m * m, 0);
  while (true) {
    bool assoc = true;
    for (std::size_t a = 0; a < m && assoc; ++a)
      for (std::size_t b = 0; b < m && assoc; ++b)
        for (std::size_t c = 0; c < m && assoc; ++c)
          assoc = t[t[a * m + b] * m + c] == t[a * m + t[b * m + c]];
    if (assoc) out.push_back(t);
    std::size_t k = cells.size();
    while (k > 0) {
      auto [i, j] = cells[k - 1];
      if (++t[i * m + j] < m) {
        t[j * m + i] = t[i * m + j];
        break;
      }
      t[i * m + j] = t[j * m + i] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

bool distributes(const Table& add, const Table& mul, std::size_t m) {
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (mul[a * m + add[b * m + c]] != add[mul[a * m + b] * m + mul[a * m + c]]) return false;
  return true;
}

}  // namespace

std::vector<FiniteSemiring> exhaustive_semirings(std::size_t max_order) {
  if (max_order > 4) throw Error("exhaustive corpus supports orders up to 4");
  std::vector<FiniteSemiring> out;
  for (std::size_t m = 1; m <= max_order; ++m) {
    const auto tables = commutative_semigroups(m);
    for (const auto& add : tables)
      for (const auto& mul : tables) {
        if (!distributes(add, mul, m)) continue;
        SemiringTables t;
        t.order = m;
        t.add.assign(m, std::vector<Elem>(m));
        t.mul.assign(m, std::vector<Elem>(m));
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) {
            t.add[a][b] = add[a * m + b];
            t.mul[a][b] = mul[a * m + b];
          }
        out.push_back(validate(t));
      }
  }
  return out;
}

namespace {

CongruencePresentation random_presentation(std::mt19937_64& rng, std::size_t size_cap) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

  std::vector<IntVector> gens;
  if (pick(0, 3) != 0) {
    gens.push_back(IntVector{static_cast<long>(pick(0, 3) == 0 ? 2 : 1)});
  } else {
    static const std::vector<std::vector<IntVector>> pairs = {
        {IntVector{1, 0}, IntVector{0, 1}},
        {IntVector{1, 0}, IntVector{1, 2}},
        {IntVector{2, 1}, IntVector{0, 1}},
        {IntVector{1, 1}, IntVector{0, 1}},
    };
    gens = pairs[pick(0, pairs.size() - 1)];
  }
  const std::size_t n = gens.front().rank();
  CongruencePresentation p{AffineMonoid(n, gens), {}, size_cap};
  const auto& g = p.monoid.generators();

  auto constant = [&](std::uint64_t k) { return SparsePoly::constant(n, k, CoeffDomain::naturals); };
  auto power = [&](std::size_t j, std::uint64_t k) {
    return SparsePoly::monomial(Integer(k) * g[j], 1, CoeffDomain::naturals);
  };

  const std::uint64_t index = pick(1, 3);
  p.relations.emplace_back(constant(index), constant(index + pick(1, 4)));
  for (std::size_t j = 0; j < g.size(); ++j) {
    switch (pick(0, 2)) {
      case 0: {
        const std::uint64_t a = pick(1, 2);
        p.relations.emplace_back(power(j, a), power(j, pick(a + 1, 3)));
        break;
      }
      case 1:
        p.relations.emplace_back(power(j, 1), constant(pick(1, 3)));
        break;
      default:
        p.relations.emplace_back(add(power(j, 1), constant(1)), constant(1));
        break;
    }
  }
  if (pick(0, 2) == 0) {
    auto random_poly = [&] {
      SparsePoly f(n, CoeffDomain::naturals);
      const std::uint64_t terms = pick(1, 2);
      for (std::uint64_t t = 0; t < terms; ++t) {
        const std::size_t j = pick(0, g.size() - 1);
        f.add_term(Integer(pick(0, 2)) * g[j], pick(1, 2));
      }
      return f;
    };
    p.relations.emplace_back(random_poly(), random_poly());
  }
  return p;
}

}  // namespace

std::vector<RandomQuotient> random_quotients(std::uint64_t seed, std::size_t count,
                                             std::size_t size_cap) {
  std::mt19937_64 rng(seed);
  std::vector<RandomQuotient> out;
  const std::size_t attempts = 40 * count + 100;
  for (std::size_t i = 0; i < attempts && out.size() < count; ++i) {
    auto p = random_presentation(rng, size_cap);
    auto q = quotient(p);
    if (auto* s = std::get_if<FiniteSemiring>(&q)) out.push_back({std::move(p), std::move(*s)});
  }
  return out;
}

}  // namespace tors
