#include "tors/semiring.hpp"

#include <algorithm>
#include <numeric>

namespace tors {

namespace {

std::string at(std::initializer_list<Elem> xs) {
  std::string s = "(";
  for (Elem x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

constexpr std::uint64_t kMaxDivisibilityBound = 10'000'000;

// Additive cyclic semigroups {n·c : n ≥ 1} of every element.
struct Multiples {
  std::vector<std::uint64_t> index, period;
  std::vector<std::vector<Elem>> values;  // values[c][n-1] = n·c, n < index + period

  explicit Multiples(const FiniteSemiring& s) {
    const std::size_t m = s.order();
    index.resize(m);
    period.resize(m);
    values.resize(m);
    for (Elem c = 0; c < m; ++c) {
      std::vector<std::uint64_t> first(m, 0);  // first n with n·c = x, 0 if unseen
      Elem cur = c;
      for (std::uint64_t n = 1;; ++n) {
        if (first[cur] != 0) {
          index[c] = first[cur];
          period[c] = n - first[cur];
          break;
        }
        first[cur] = n;
        values[c].push_back(cur);
        cur = s.add(cur, c);
      }
    }
  }

  Elem nth(Elem c, std::uint64_t n) const {
    if (n >= index[c] + period[c]) n = index[c] + (n - index[c]) % period[c];
    return values[c][n - 1];
  }
};

}  // namespace

Elem FiniteSemiring::multiple(std::uint64_t k, Elem a) const {
  if (k == 0) throw Error("multiple: k must be at least 1");
  std::optional<Elem> acc;
  Elem pow = a;
  while (true) {
    if (k & 1) acc = acc ? add(*acc, pow) : pow;
    k >>= 1;
    if (k == 0) break;
    pow = add(pow, pow);
  }
  return *acc;
}

SemiringTables FiniteSemiring::tables() const {
  SemiringTables t;
  t.order = order_;
  t.add.assign(order_, std::vector<Elem>(order_));
  t.mul.assign(order_, std::vector<Elem>(order_));
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) {
      t.add[a][b] = add(a, b);
      t.mul[a][b] = mul(a, b);
    }
  t.unity = unity_;
  t.generators = generators_;
  return t;
}

std::vector<std::string> axiom_violations(const SemiringTables& t) {
  std::vector<std::string> out;
  const std::size_t m = t.order;
  if (m == 0) return {"semiring must have at least one element"};
  auto square = [&](const std::vector<std::vector<Elem>>& tab, const char* name) {
    if (tab.size() != m) {
      out.push_back(std::string(name) + " table has " + std::to_string(tab.size()) + " rows, expected " +
                    std::to_string(m));
      return false;
    }
    bool fine = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i].size() != m) {
        out.push_back(std::string(name) + " table row " + std::to_string(i) + " has the wrong length");
        fine = false;
        continue;
      }
      for (std::size_t j = 0; j < m; ++j)
        if (tab[i][j] >= m) {
          out.push_back(std::string(name) + " entry out of range at " + at({Elem(i), Elem(j)}));
          fine = false;
        }
    }
    return fine;
  };
  if (!square(t.add, "add") || !square(t.mul, "mul")) return out;

  const auto& A = t.add;
  const auto& M = t.mul;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b) {
      if (A[a][b] != A[b][a]) out.push_back("add not commutative at " + at({a, b}));
      if (M[a][b] != M[b][a]) out.push_back("mul not commutative at " + at({a, b}));
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) out.push_back("add not associative at " + at({a, b, c}));
        if (M[M[a][b]][c] != M[a][M[b][c]]) out.push_back("mul not associative at " + at({a, b, c}));
        if (M[a][A[b][c]] != A[M[a][b]][M[a][c]])
          out.push_back("mul does not distribute over add at " + at({a, b, c}));
      }
  if (t.unity) {
    if (*t.unity >= m) {
      out.push_back("unity " + std::to_string(*t.unity) + " out of range");
    } else {
      for (Elem x = 0; x < m; ++x)
        if (M[*t.unity][x] != x)
          out.push_back("declared unity " + std::to_string(*t.unity) + " fails at " + at({x}));
    }
  }
  for (const auto& [e, x] : t.generators)
    if (x >= m) out.push_back("generator x^" + e.to_string() + " maps out of range");
  return out;
}

FiniteSemiring validate(const SemiringTables& t) {
  const auto violations = axiom_violations(t);
  if (!violations.empty()) {
    std::string msg = "invalid semiring: ";
    const std::size_t shown = std::min<std::size_t>(violations.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) msg += (i ? "; " : "") + violations[i];
    if (shown < violations.size())
      msg += "; ... (" + std::to_string(violations.size()) + " violations in total)";
    throw Error(msg);
  }
  FiniteSemiring s;
  const std::size_t m = t.order;
  s.order_ = m;
  s.add_.resize(m * m);
  s.mul_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      s.add_[a * m + b] = t.add[a][b];
      s.mul_[a * m + b] = t.mul[a][b];
    }
  s.unity_ = t.unity;
  if (!s.unity_) {
    for (Elem u = 0; u < m && !s.unity_; ++u) {
      bool is_unity = true;
      for (Elem x = 0; x < m && is_unity; ++x) is_unity = t.mul[u][x] == x;
      if (is_unity) s.unity_ = u;
    }
  }
  s.generators_ = t.generators;
  return s;
}

namespace {

FiniteSemiring from_functions(std::size_t m, auto add, auto mul) {
  SemiringTables t;
  t.order = m;
  t.add.assign(m, std::vector<Elem>(m));
  t.mul.assign(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a][b] = static_cast<Elem>(add(a, b));
      t.mul[a][b] = static_cast<Elem>(mul(a, b));
    }
  return validate(t);
}

}  // namespace

FiniteSemiring boolean_semiring() {
  return from_functions(
      2, [](std::size_t a, std::size_t b) { return a | b; },
      [](std::size_t a, std::size_t b) { return a & b; });
}

FiniteSemiring cyclic_ring(std::size_t m) {
  if (m == 0) throw Error("cyclic_ring: modulus must be positive");
  return from_functions(
      m, [m](std::size_t a, std::size_t b) { return (a + b) % m; },
      [m](std::size_t a, std::size_t b) { return (a * b) % m; });
}

FiniteSemiring truncated_naturals(std::size_t t) {
  return from_functions(
      t + 1, [t](std::size_t a, std::size_t b) { return std::min(a + b, t); },
      [t](std::size_t a, std::size_t b) { return std::min(a * b, t); });
}

namespace {

std::vector<ElementProfile> profiles(const FiniteSemiring& s, const Multiples& mult) {
  const std::size_t m = s.order();

  std::uint64_t max_index = 0, lcm_period = 1;
  for (Elem c = 0; c < m; ++c) {
    max_index = std::max(max_index, mult.index[c]);
    lcm_period = std::lcm(lcm_period, mult.period[c]);
    if (lcm_period > kMaxDivisibilityBound) throw Error("divisibility check: period lcm too large");
  }
  // n·c is periodic in n beyond max_index with period lcm_period for every c,
  // so a = n·c for all n ≥ 1 needs checking only below max_index + lcm_period.
  std::vector<bool> divisible(m, true);
  std::vector<bool> hit(m);
  for (std::uint64_t n = 1; n < max_index + lcm_period; ++n) {
    std::fill(hit.begin(), hit.end(), false);
    for (Elem c = 0; c < m; ++c) hit[mult.nth(c, n)] = true;
    for (Elem a = 0; a < m; ++a)
      if (!hit[a]) divisible[a] = false;
  }

  // a is strongly almost-divisible iff a = m·c for some m in the periodic part
  // of n ↦ n·c whose residue class modulo the period contains infinitely many primes.
  std::vector<std::optional<SadWitness>> sad(m);
  for (Elem c = 0; c < m; ++c) {
    const std::uint64_t i = mult.index[c], pi = mult.period[c];
    for (std::uint64_t k = i; k < i + pi; ++k) {
      if (std::gcd(k % pi, pi) != 1) continue;
      const Elem a = mult.nth(c, k);
      if (!sad[a]) sad[a] = SadWitness{c, k};
    }
  }

  std::vector<ElementProfile> out(m);
  for (Elem a = 0; a < m; ++a) {
    ElementProfile& p = out[a];
    p.element = a;
    p.index = mult.index[a];
    p.period = mult.period[a];
    p.idempotent = s.add(a, a) == a;
    p.torsion = true;
    for (Elem b = 0; b < m && !p.regular_witness; ++b)
      if (s.add(s.add(a, b), a) == a) p.regular_witness = b;
    p.regular = p.regular_witness.has_value();
    p.divisible = divisible[a];
    p.sad_witness = sad[a];
    p.strongly_almost_divisible = sad[a].has_value();
    for (std::uint64_t k = 1; k < p.index + p.period && !p.ad_multiplier; ++k)
      if (sad[mult.nth(a, k)]) p.ad_multiplier = k;
    p.almost_divisible = p.ad_multiplier.has_value();
  }
  return out;
}

}  // namespace

std::vector<ElementProfile> profile_all(const FiniteSemiring& s) { return profiles(s, Multiples(s)); }

ElementProfile profile(const FiniteSemiring& s, Elem a) {
  if (a >= s.order()) throw Error("profile: element out of range");
  return profile_all(s)[a];
}

DiagramReport check_diagram(const FiniteSemiring& s) {
  DiagramReport r;
  const auto ps = profile_all(s);
  r.elements = ps.size();
  for (const auto& p : ps) {
    const bool rt = p.regular && p.torsion;
    const std::pair<bool, const char*> arrows[] = {
        {!p.idempotent || rt, "idempotent => regular and torsion"},
        {!rt || p.torsion, "regular and torsion => torsion"},
        {!p.torsion || p.almost_divisible, "torsion => almost-divisible"},
        {!p.idempotent || p.divisible, "idempotent => divisible"},
        {!rt || p.strongly_almost_divisible, "regular and torsion => strongly almost-divisible"},
        {!p.divisible || p.strongly_almost_divisible, "divisible => strongly almost-divisible"},
        {!p.strongly_almost_divisible || p.almost_divisible,
         "strongly almost-divisible => almost-divisible"},
    };
    for (const auto& [holds, name] : arrows) {
      ++r.implications_checked;
      if (!holds) r.violations.push_back({p.element, name});
    }
  }
  return r;
}

QSubsemiring q_subsemiring(const FiniteSemiring& s) {
  if (!s.unity()) throw Error("Q_S needs a unity");
  const std::size_t m = s.order();
  const Elem one = *s.unity();
  const Multiples mult(s);
  std::vector<bool> multiple_of_one(m, false);
  for (Elem x : mult.values[one]) multiple_of_one[x] = true;

  std::vector<bool> in(m, false);
  QSubsemiring q;
  for (Elem x = 0; x < m; ++x) {
    for (Elem a = 0; a < m && !in[x]; ++a) in[x] = multiple_of_one[s.add(x, a)];
    if (in[x]) q.elements.push_back(x);
  }
  q.contains_unity = in[one];
  q.closed_under_add = q.closed_under_mul = true;
  for (Elem x : q.elements)
    for (Elem y : q.elements) {
      q.closed_under_add = q.closed_under_add && in[s.add(x, y)];
      q.closed_under_mul = q.closed_under_mul && in[s.mul(x, y)];
    }
  q.summand_closed = true;
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (in[s.add(x, y)] && !(in[x] && in[y])) q.summand_closed = false;

  if (q.closed_under_add && q.closed_under_mul && q.contains_unity) {
    std::vector<Elem> local(m, 0);
    for (Elem i = 0; i < q.elements.size(); ++i) local[q.elements[i]] = i;
    SemiringTables t;
    t.order = q.elements.size();
    t.add.assign(t.order, std::vector<Elem>(t.order));
    t.mul.assign(t.order, std::vector<Elem>(t.order));
    for (Elem i = 0; i < t.order; ++i)
      for (Elem j = 0; j < t.order; ++j) {
        t.add[i][j] = local[s.add(q.elements[i], q.elements[j])];
        t.mul[i][j] = local[s.mul(q.elements[i], q.elements[j])];
      }
    t.unity = local[one];
    q.semiring = validate(t);
    q.embedding = q.elements;
  }
  return q;
}

bool np_hom_exists(const FiniteSemiring& s) {
  if (!s.unity()) throw Error("np_hom_exists needs a unity");
  return profile(s, *s.unity()).strongly_almost_divisible;
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

}  // namespace

NpHomReport np_hom_report(const FiniteSemiring& s, std::uint64_t prime_bound) {
  if (!s.unity()) throw Error("np_hom_exists needs a unity");
  const Elem one = *s.unity();
  NpHomReport r;
  r.exists = np_hom_exists(s);
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    const Elem p_one = s.multiple(p, one);
    for (Elem a = 0; a < s.order(); ++a)
      if (s.mul(p_one, a) == one) {
        r.witnesses.push_back({p, a});
        break;
      }
  }
  // A witness prime beyond the order lies in the periodic part of n ↦ n·1 and
  // is coprime to its period, so its residue class holds infinitely many primes.
  const bool large_witness = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                         [&](const auto& w) { return w.first > s.order(); });
  r.witnesses_consistent = large_witness == r.exists;
  if (!r.witnesses_consistent) r.detail = "witness primes disagree with the residue criterion";

  r.homomorphism_ok = true;
  if (!r.exists || !large_witness) return r;

  // φ(k / (p1 ... pr)) = (k·1)·a_{p1}···a_{pr} on a few sampled fractions.
  std::map<std::uint64_t, Elem> inverse;
  for (const auto& [p, a] : r.witnesses)
    if (p > s.order() && inverse.size() < 3) inverse[p] = a;
  struct Frac {
    std::uint64_t k;
    std::vector<std::uint64_t> primes;
  };
  auto phi = [&](const Frac& f) {
    Elem v = s.multiple(f.k, one);
    for (auto p : f.primes) v = s.mul(v, inverse.at(p));
    return v;
  };
  auto den = [](const Frac& f) {
    std::uint64_t d = 1;
    for (auto p : f.primes) d *= p;
    return d;
  };
  std::vector<std::vector<std::uint64_t>> dens{{}};
  for (const auto& [p, a] : inverse) {
    dens.push_back({p});
    dens.push_back({p, p});
    for (const auto& [p2, a2] : inverse)
      if (p2 > p) dens.push_back({p, p2});
  }
  std::vector<Frac> sample;
  for (std::uint64_t k : {1, 2, 3, 5})
    for (const auto& d : dens) sample.push_back({k, d});

  if (phi({1, {}}) != one) {
    r.homomorphism_ok = false;
    r.detail = "phi(1) is not the unity";
  }
  for (const auto& x : sample) {
    // Expanding numerator and denominator by a prime must not change φ.
    for (const auto& [p, a] : inverse) {
      Frac y{x.k * p, x.primes};
      y.primes.push_back(p);
      if (phi(y) != phi(x)) {
        r.homomorphism_ok = false;
        r.detail = "phi is not well defined at k=" + std::to_string(x.k);
      }
    }
    for (const auto& y : sample) {
      Frac sum{x.k * den(y) + y.k * den(x), x.primes};
      sum.primes.insert(sum.primes.end(), y.primes.begin(), y.primes.end());
      Frac prod{x.k * y.k, sum.primes};
      if (phi(sum) != s.add(phi(x), phi(y)) || phi(prod) != s.mul(phi(x), phi(y))) {
        r.homomorphism_ok = false;
        r.detail = "phi fails to respect the operations";
      }
    }
  }
  return r;
}

bool SadCriterionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.ok; });
}

SadCriterionReport check_sad_criterion(const FiniteSemiring& s) {
  if (!s.unity()) throw Error("check_sad_criterion needs a unity");
  SadCriterionReport r;
  const auto ps = profile_all(s);
  auto all = [&](auto pred) { return std::all_of(ps.begin(), ps.end(), pred); };
  const bool all_ad = all([](const ElementProfile& p) { return p.almost_divisible; });
  const bool all_sad = all([](const ElementProfile& p) { return p.strongly_almost_divisible; });
  const bool all_regular = all([](const ElementProfile& p) { return p.regular; });
  const bool sad_one = ps[*s.unity()].strongly_almost_divisible;

  r.checks.push_back({"torsion semiring is almost-divisible", all_ad, ""});
  r.checks.push_back({"SAD(1) iff every element SAD", sad_one == all_sad,
                      "SAD(1)=" + std::to_string(sad_one) + " all SAD=" + std::to_string(all_sad)});
  r.checks.push_back({"SAD iff regular and torsion", all_sad == all_regular,
                      "all SAD=" + std::to_string(all_sad) + " all regular=" + std::to_string(all_regular)});

  const auto q = q_subsemiring(s);
  r.checks.push_back({"Q_S is a summand-closed subsemiring with unity", q.ok(),
                      "|Q_S|=" + std::to_string(q.elements.size())});
  if (q.ok()) {
    const auto qps = profile_all(q.semiring);
    const bool q_ad = std::all_of(qps.begin(), qps.end(),
                                  [](const ElementProfile& p) { return p.almost_divisible; });
    r.checks.push_back({"S almost-divisible iff Q_S almost-divisible", q_ad == all_ad, ""});
    const auto g = grothendieck(q.semiring);
    bool torsion = true;
    for (Elem x = 0; x < g.ring.order(); ++x)
      torsion = torsion && g.ring.multiple(g.ring.order(), x) == g.zero;
    r.checks.push_back({"S almost-divisible iff G(Q_S) torsion", torsion == all_ad,
                        "|G(Q_S)|=" + std::to_string(g.ring.order())});
  }

  const auto np = np_hom_report(s);
  r.checks.push_back({"N_P homomorphism criterion", np.witnesses_consistent && np.homomorphism_ok &&
                                                        np.exists == sad_one,
                      np.detail});
  return r;
}

}  // namespace tors
