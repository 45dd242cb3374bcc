#include "tors/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "tors/monoid.hpp"
#include "tors/oracles.hpp"

namespace tors {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Check {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  json counterexamples = json::array();

  void record(bool ok, const std::function<json()>& detail) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(detail());
  }
  json to_json() const {
    return {{"name", name}, {"passed", passed}, {"failed", failed}, {"counterexamples", counterexamples}};
  }
};

SuiteResult finish(const std::string& name, const std::vector<Check>& checks, json extra) {
  SuiteResult r{name, true, json::object()};
  json cs = json::array();
  for (const auto& c : checks) {
    r.ok = r.ok && c.failed == 0;
    cs.push_back(c.to_json());
  }
  r.payload = {{"suite", name}, {"ok", r.ok}, {"checks", cs}};
  for (auto& [k, v] : extra.items()) r.payload[k] = v;
  return r;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// ---------------------------------------------------------------- decomposition

struct MonoidCase {
  std::vector<IntVector> gens;
  CanonicalDecomposition dec;
  std::vector<std::vector<std::size_t>> face_sets;  // oracle face of each piece
  std::vector<std::vector<IntVector>> members;      // nonzero box points of each piece
};

std::vector<IntVector> random_generators(std::mt19937_64& rng) {
  std::vector<IntVector> gens;
  const std::size_t k = 1 + pick(rng, 4);
  while (gens.size() < k) {
    IntVector v{static_cast<long>(pick(rng, 5)), static_cast<long>(pick(rng, 5)), static_cast<long>(pick(rng, 5))};
    if (!v.is_zero()) gens.push_back(v);
  }
  return gens;
}

SuiteResult decomposition_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  Check partition{"each nonzero lattice point lies in exactly one piece, the one of its minimal face"};
  Check hilbert{"Hilbert basis generates exactly the lattice points of the cone (box 10)"};
  Check irreducible{"Hilbert basis elements are irreducible"};
  Check kmin_check{"kmin equals the incremental search and is at most 10^4"};
  Check wedge{"kmin((2,1),(0,7)) = 3 on cone{(1,0),(1,2)}"};

  const auto box = oracle::box_points(3, opts.height);
  const auto box10 = oracle::box_points(3, 10);
  std::vector<MonoidCase> cases;
  std::size_t points = 0;
  for (std::size_t i = 0; i < opts.monoids; ++i) {
    MonoidCase mc;
    mc.gens = random_generators(rng);
    mc.dec = canonical_decomposition(saturate(AffineMonoid(3, mc.gens)));
    for (const auto& p : mc.dec.pieces) mc.face_sets.push_back(oracle::minimal_face(mc.gens, p.face().sample_point()));
    mc.members.resize(mc.dec.pieces.size());
    auto describe = [&](const IntVector& x) {
      return json{{"generators", to_json(mc.gens)}, {"point", to_json(x)}};
    };

    for (const auto& x : box) {
      if (x.is_zero()) continue;
      ++points;
      std::vector<std::size_t> containing;
      for (std::size_t j = 0; j < mc.dec.pieces.size(); ++j)
        if (mc.dec.pieces[j].contains(x)) containing.push_back(j);
      if (!oracle::in_cone(mc.gens, x)) {
        partition.record(containing.empty(), [&] { return describe(x); });
        continue;
      }
      const bool ok = containing.size() == 1 && oracle::minimal_face(mc.gens, x) == mc.face_sets[containing[0]];
      partition.record(ok, [&] {
        json d = describe(x);
        d["pieces_containing"] = containing;
        return d;
      });
      if (ok) mc.members[containing[0]].push_back(x);
    }

    const auto& hb = mc.dec.monoid.hilbert_basis();
    const auto generated = oracle::box_combinations(hb, 3, 10);
    std::set<IntVector> expected;
    for (const auto& x : box10)
      if (oracle::in_cone(mc.gens, x)) expected.insert(x);
    hilbert.record(generated == expected, [&] {
      return json{{"generators", to_json(mc.gens)}, {"hilbert_basis", to_json(hb)},
                  {"generated", generated.size()}, {"expected", expected.size()}};
    });
    for (const auto& h : hb)
      irreducible.record(oracle::irreducible_in_saturation(mc.gens, h),
                         [&] { return json{{"generators", to_json(mc.gens)}, {"element", to_json(h)}}; });
    cases.push_back(std::move(mc));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<IntVector>> dtilde_points;
  long max_k = 0;
  for (std::size_t t = 0, attempts = 0; t < opts.count && attempts < 100 * opts.count + 100; ++attempts) {
    const std::size_t ci = pick(rng, cases.size());
    const auto& mc = cases[ci];
    std::vector<std::size_t> eligible;
    for (std::size_t j = 0; j < mc.dec.pieces.size(); ++j)
      if (mc.dec.pieces[j].dim() >= 1 && !mc.members[j].empty()) eligible.push_back(j);
    if (eligible.empty()) continue;
    const std::size_t pj = eligible[pick(rng, eligible.size())];
    const auto& piece = mc.dec.pieces[pj];
    auto& dt = dtilde_points[{ci, pj}];
    if (dt.empty()) {
      std::vector<IntVector> face_gens;
      for (auto k : mc.face_sets[pj]) face_gens.push_back(mc.gens[k]);
      for (const auto& y : box)
        if (oracle::in_rational_span(face_gens, y)) dt.push_back(y);
    }
    const IntVector alpha = mc.members[pj][pick(rng, mc.members[pj].size())];
    const IntVector gamma = dt[pick(rng, dt.size())];
    ++t;
    std::optional<long> k;
    std::string error;
    try {
      k = kmin(piece, alpha, gamma);
    } catch (const Error& e) {
      error = e.what();
    }
    const auto expected = oracle::kmin_incremental(mc.gens, piece.face().sample_point(), alpha, gamma, 10000);
    if (k) max_k = std::max(max_k, *k);
    kmin_check.record(k && expected && *k == *expected && *k <= 10000, [&] {
      return json{{"generators", to_json(mc.gens)}, {"alpha", to_json(alpha)}, {"gamma", to_json(gamma)},
                  {"kmin", k ? json(*k) : json(error)}, {"oracle", expected ? json(*expected) : json(nullptr)}};
    });
  }

  {
    const std::vector<IntVector> gens{IntVector{1, 0}, IntVector{1, 2}};
    const auto dec = canonical_decomposition(saturate(AffineMonoid(2, gens)));
    const IntVector alpha{2, 1}, gamma{0, 7};
    const long k = kmin(classify(dec, alpha), alpha, gamma);
    const auto expected = oracle::kmin_incremental(gens, alpha, alpha, gamma);
    wedge.record(k == 3 && expected == 3, [&] { return json{{"kmin", k}, {"oracle", expected.value_or(-1)}}; });
  }

  return finish("decomposition", {partition, hilbert, irreducible, kmin_check, wedge},
                {{"parameters", {{"seed", opts.seed}, {"height", opts.height}, {"monoids", opts.monoids},
                                 {"triples", opts.count}}},
                 {"monoids_checked", cases.size()},
                 {"points_checked", points},
                 {"max_kmin", max_k}});
}

// ---------------------------------------------------------------- semirings

struct Instance {
  std::string label;
  FiniteSemiring s;
  std::optional<CongruencePresentation> presentation;

  json describe() const {
    json d = {{"instance", label}, {"semiring", to_json(s)}};
    if (presentation) d["presentation"] = to_json(*presentation);
    return d;
  }
};

struct Corpus {
  std::vector<Instance> items;
  std::size_t tables = 0;
  std::size_t quotients = 0;
};

Corpus build_corpus(const SuiteOptions& opts) {
  Corpus c;
  const auto tables = exhaustive_semirings(opts.max_order);
  for (std::size_t i = 0; i < tables.size(); ++i)
    c.items.push_back({"table " + std::to_string(i), tables[i], std::nullopt});
  c.tables = tables.size();
  auto qs = random_quotients(opts.seed, opts.count, opts.size_cap);
  for (std::size_t i = 0; i < qs.size(); ++i)
    c.items.push_back({"quotient " + std::to_string(i), std::move(qs[i].semiring), std::move(qs[i].presentation)});
  c.quotients = qs.size();
  return c;
}

json corpus_parameters(const SuiteOptions& opts, const Corpus& c) {
  return {{"seed", opts.seed}, {"max_order", opts.max_order}, {"count", opts.count},
          {"size_cap", opts.size_cap}, {"tables", c.tables}, {"quotients", c.quotients}};
}

SuiteResult diagram_suite(const SuiteOptions& opts, const Corpus& corpus) {
  Check diagram{"implication diagram holds for every element"};
  Check sad{"SAD classifier agrees with prime sampling (p <= 10^4, threshold 100)"};
  Check count{"exhaustive table count agrees with the naive count"};
  Check quotient_count{"requested number of random quotients produced"};
  std::size_t elements = 0, non_sad = 0;
  for (const auto& inst : corpus.items) {
    const auto rep = check_diagram(inst.s);
    diagram.record(rep.ok(), [&] {
      json d = inst.describe();
      json v = json::array();
      for (const auto& x : rep.violations) v.push_back({{"element", x.element}, {"implication", x.implication}});
      d["violations"] = v;
      return d;
    });
    for (Elem a = 0; a < inst.s.order(); ++a) {
      ++elements;
      const bool lib = profile(inst.s, a).strongly_almost_divisible;
      non_sad += !lib;
      const auto hits = oracle::prime_divisor_count(inst.s, a);
      sad.record(lib == (hits >= 100), [&] {
        json d = inst.describe();
        d["element"] = a;
        d["classifier"] = lib;
        d["primes_dividing"] = hits;
        return d;
      });
    }
  }
  std::map<std::size_t, std::size_t> by_order;
  for (std::size_t i = 0; i < corpus.tables; ++i) ++by_order[corpus.items[i].s.order()];
  for (std::size_t m = 1; m <= std::min<std::size_t>(opts.max_order, 3); ++m) {
    const std::size_t naive = oracle::count_semirings(m);
    count.record(by_order[m] == naive,
                 [&] { return json{{"order", m}, {"library", by_order[m]}, {"naive", naive}}; });
  }
  quotient_count.record(corpus.quotients == opts.count,
                        [&] { return json{{"requested", opts.count}, {"produced", corpus.quotients}}; });
  return finish("diagram", {diagram, sad, count, quotient_count},
                {{"parameters", corpus_parameters(opts, corpus)},
                 {"semirings", corpus.items.size()},
                 {"elements", elements},
                 {"non_sad_elements", non_sad}});
}

SuiteResult grothendieck_suite(const SuiteOptions& opts, const Corpus& corpus) {
  Check axioms{"G(S) is a commutative ring with additive inverses"};
  Check sigma{"sigma is a semiring homomorphism"};
  Check pairs{"class of (x,y) equals sigma(x) - sigma(y)"};
  Check order{"|G(S)| equals the size of the minimal additive ideal"};
  Check examples{"G(Boolean) is trivial and |G(Z3)| = 3"};
  for (const auto& inst : corpus.items) {
    GrothendieckRing g;
    try {
      g = grothendieck(inst.s);
    } catch (const Error& e) {
      axioms.record(false, [&] {
        json d = inst.describe();
        d["error"] = e.what();
        return d;
      });
      continue;
    }
    const auto& r = g.ring;
    bool ring_ok = axiom_violations(r.tables()).empty();
    for (Elem x = 0; x < r.order(); ++x) ring_ok = ring_ok && r.add(x, g.zero) == x && r.add(x, g.negation[x]) == g.zero;
    axioms.record(ring_ok, [&] { return inst.describe(); });

    bool hom = true, pair_ok = true;
    const auto n = static_cast<Elem>(inst.s.order());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        hom = hom && g.sigma[inst.s.add(x, y)] == r.add(g.sigma[x], g.sigma[y]) &&
              g.sigma[inst.s.mul(x, y)] == r.mul(g.sigma[x], g.sigma[y]);
        pair_ok = pair_ok && g.pair(x, y) == g.subtract(g.sigma[x], g.sigma[y]);
      }
    sigma.record(hom, [&] { return inst.describe(); });
    pairs.record(pair_ok, [&] { return inst.describe(); });
    const std::size_t expected = oracle::grothendieck_order(inst.s);
    order.record(r.order() == expected, [&] {
      json d = inst.describe();
      d["library"] = r.order();
      d["oracle"] = expected;
      return d;
    });
  }
  const auto gb = grothendieck(boolean_semiring()).ring.order();
  const auto gz = grothendieck(cyclic_ring(3)).ring.order();
  examples.record(gb == 1 && gz == 3, [&] { return json{{"G(B)", gb}, {"G(Z3)", gz}}; });
  return finish("grothendieck", {axioms, sigma, pairs, order, examples},
                {{"parameters", corpus_parameters(opts, corpus)}, {"semirings", corpus.items.size()}});
}

SuiteResult sad_criterion_suite(const SuiteOptions& opts, const Corpus& corpus) {
  Check items{"every structure check passes"};
  Check oracle_check{"SAD(1) by prime sampling iff every element regular by search"};
  std::size_t with_unity = 0, sad_one = 0;
  std::map<std::string, std::size_t> item_passes;
  for (const auto& inst : corpus.items) {
    if (!inst.s.unity()) continue;
    ++with_unity;
    const auto rep = check_sad_criterion(inst.s);
    for (const auto& c : rep.checks) item_passes[c.name] += c.ok;
    items.record(rep.ok(), [&] {
      json d = inst.describe();
      json failed = json::array();
      for (const auto& c : rep.checks)
        if (!c.ok) failed.push_back({{"check", c.name}, {"detail", c.detail}});
      d["failed"] = failed;
      return d;
    });
    const bool sampled = oracle::sad_by_sampling(inst.s, *inst.s.unity());
    sad_one += sampled;
    bool all_regular = true;
    for (Elem a = 0; a < inst.s.order(); ++a) all_regular = all_regular && oracle::regular_by_search(inst.s, a);
    oracle_check.record(sampled == all_regular, [&] {
      json d = inst.describe();
      d["sad_one"] = sampled;
      d["all_regular"] = all_regular;
      return d;
    });
  }
  return finish("sad-criterion", {items, oracle_check},
                {{"parameters", corpus_parameters(opts, corpus)},
                 {"semirings_with_unity", with_unity},
                 {"sad_unity", sad_one},
                 {"per_check_passes", item_passes}});
}

// ---------------------------------------------------------------- q-subrings

std::vector<Fraction> random_fractions(std::mt19937_64& rng) {
  while (true) {
    std::vector<Fraction> gens;
    const std::size_t k = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) {
      long num = static_cast<long>(pick(rng, 30)) + 1;
      if (pick(rng, 2)) num = -num;
      gens.emplace_back(num, static_cast<long>(pick(rng, 30)) + 1);
    }
    if (std::any_of(gens.begin(), gens.end(), [](const Fraction& f) { return !f.is_integer(); })) return gens;
  }
}

json fractions_json(const std::vector<Fraction>& gens) {
  json j = json::array();
  for (const auto& f : gens) j.push_back(to_json(f));
  return j;
}

SuiteResult qsubring_suite(const SuiteOptions& opts) {
  constexpr long kBound = 1024;
  constexpr std::size_t kSets = 20;
  Check examples{"canonical forms of {1/2}, {5/2}, {1/2,1/3}"};
  Check certified{"Bezout certificates verify"};
  Check oracle_examples{"closure of {5/2} at height 32 contains 5, 5/2, 25/4, 5/4 and not 1"};
  Check two_sided{"descriptor membership agrees with the closure oracle two-sidedly at height 1024"};
  Check coprime{"gcd(n, p) = 1 for every p in P"};
  Check ring_closed{"membership is closed under +, * and negation"};

  const std::vector<std::pair<std::vector<Fraction>, QSubringDescriptor>> fixed = {
      {{Fraction(1, 2)}, {1, PrimeSet::finite({2})}},
      {{Fraction(5, 2)}, {5, PrimeSet::finite({2})}},
      {{Fraction(1, 2), Fraction(1, 3)}, {1, PrimeSet::finite({2, 3})}},
  };
  for (const auto& [gens, want] : fixed) {
    const auto cf = canonical_form(gens);
    examples.record(cf.descriptor == want, [&] {
      return json{{"generators", fractions_json(gens)}, {"got", to_json(cf.descriptor)}, {"want", to_json(want)}};
    });
    certified.record(verify_certificates(cf, gens), [&] { return json{{"generators", fractions_json(gens)}}; });
  }
  {
    const auto elems = closure_oracle({Fraction(5, 2)}, 32).elements();
    const bool ok = elems.count(Fraction(5)) && elems.count(Fraction(5, 2)) && elems.count(Fraction(25, 4)) &&
                    elems.count(Fraction(5, 4)) && !elems.count(Fraction(1));
    oracle_examples.record(ok, [] { return json{{"generators", {"5/2"}}}; });
  }

  std::mt19937_64 rng(opts.seed);
  std::size_t fractions_checked = 0;
  for (std::size_t i = 0; i < kSets; ++i) {
    const auto gens = random_fractions(rng);
    const auto cf = canonical_form(gens);
    const auto& d = cf.descriptor;
    certified.record(verify_certificates(cf, gens), [&] { return json{{"generators", fractions_json(gens)}}; });
    bool cop = true;
    for (const auto& p : d.primes.primes()) cop = cop && gcd(d.n, p) == 1;
    coprime.record(cop, [&] { return json{{"generators", fractions_json(gens)}, {"descriptor", to_json(d)}}; });

    const auto rep = oracle::two_sided_check(gens, d, kBound);
    fractions_checked += rep.checked;
    two_sided.record(rep.violations.empty(), [&] {
      return json{{"generators", fractions_json(gens)}, {"descriptor", to_json(d)}, {"violations", rep.violations}};
    });

    const auto& ps = d.primes.primes();
    auto random_member = [&] {
      Integer q = 1;
      for (std::size_t j = pick(rng, 4); j > 0; --j) q *= ps[pick(rng, ps.size())];
      return Fraction(Integer(d.n * (static_cast<long>(pick(rng, 41)) - 20)), q);
    };
    for (int j = 0; j < 25; ++j) {
      const Fraction x = random_member(), y = random_member();
      const bool ok = member(d, x) && member(d, y) && member(d, x + y) && member(d, x * y) &&
                      member(d, Fraction(0) - x);
      ring_closed.record(ok, [&] {
        return json{{"descriptor", to_json(d)}, {"x", to_json(x)}, {"y", to_json(y)}};
      });
    }
  }
  return finish("qsubring", {examples, certified, oracle_examples, two_sided, coprime, ring_closed},
                {{"parameters", {{"seed", opts.seed}, {"height_bound", kBound}, {"random_sets", kSets}}},
                 {"fractions_checked", fractions_checked}});
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "decomposition") return decomposition_suite(opts);
  if (name == "qsubring") return qsubring_suite(opts);
  if (name == "diagram") return diagram_suite(opts, build_corpus(opts));
  if (name == "grothendieck") return grothendieck_suite(opts, build_corpus(opts));
  if (name == "sad-criterion") return sad_criterion_suite(opts, build_corpus(opts));
  if (name != "all") throw Error("unknown suite '" + name + "'");

  const Corpus corpus = build_corpus(opts);
  std::vector<SuiteResult> parts{decomposition_suite(opts), diagram_suite(opts, corpus),
                                 grothendieck_suite(opts, corpus), qsubring_suite(opts),
                                 sad_criterion_suite(opts, corpus)};
  SuiteResult r{"all", true, json::object()};
  json suites = json::array();
  for (auto& p : parts) {
    r.ok = r.ok && p.ok;
    suites.push_back(std::move(p.payload));
  }
  r.payload = {{"suite", "all"}, {"ok", r.ok}, {"suites", suites}};
  return r;
}

}  // namespace tors
