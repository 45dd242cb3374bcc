#include <doctest.h>

#include "helpers.hpp"
#include "tors/io.hpp"
#include "tors/monoid.hpp"
#include "tors/oracles.hpp"

using namespace tors;

namespace {

const std::vector<IntVector> kWedge{IntVector{1, 0}, IntVector{1, 2}};

std::vector<IntVector> random_gens(std::mt19937_64& rng) {
  std::vector<IntVector> g;
  const std::size_t k = 1 + rng() % 4;
  while (g.size() < k) {
    auto v = testing::random_vector(rng, 3, 0, 4);
    if (!v.is_zero()) g.push_back(v);
  }
  return g;
}

}  // namespace

TEST_SUITE("monoid") {

TEST_CASE("diagonal monoid generated by (2,2)") {
  const auto m = read_monoid_file(testing::data_path("diag2.monoid"));
  const auto s = saturate(m);
  CHECK(s.hilbert_basis() == std::vector<IntVector>{IntVector{1, 1}});
  CHECK_FALSE(is_saturated(m));
  CHECK(member_saturated(s, IntVector{3, 3}));
  CHECK_FALSE(member_saturated(s, IntVector{3, 2}));
  CHECK_FALSE(member_generated(m, IntVector{1, 1}));
  CHECK(factorize(m, IntVector{4, 4}) == std::vector<Integer>{2});
  CHECK(canonical_decomposition(s).pieces.size() == 2);
}

TEST_CASE("the wedge: saturation, closure, pieces") {
  const AffineMonoid m(2, kWedge);
  CHECK_FALSE(is_saturated(m));
  CHECK_FALSE(member_generated(m, IntVector{1, 1}));
  const auto s = saturate(m);
  CHECK(s.hilbert_basis() == std::vector<IntVector>{IntVector{1, 0}, IntVector{1, 1}, IntVector{1, 2}});
  CHECK(is_saturated(s.as_generated()));
  // the closure fills the whole span inside the orthant
  CHECK(closure(m).hilbert_basis() == std::vector<IntVector>{IntVector{0, 1}, IntVector{1, 0}});

  const auto d = canonical_decomposition(s);
  REQUIRE(d.pieces.size() == 4);
  CHECK(classify(d, IntVector{0, 0}).dim() == 0);
  CHECK(classify(d, IntVector{5, 0}).dim() == 1);
  CHECK(classify(d, IntVector{2, 1}).dim() == 2);
  CHECK_THROWS_WITH_AS(classify(d, IntVector{0, 3}), "not in monoid", Error);
  for (const auto& p : d.pieces) CHECK(p.contains(IntVector{0, 0}));
}

TEST_CASE("kmin on the wedge") {
  const auto d = canonical_decomposition(saturate(AffineMonoid(2, kWedge)));
  const auto& top = classify(d, IntVector{2, 1});
  // k(2,1) + (0,7) = (2k, k+7) is interior iff 4k > k + 7
  CHECK(kmin(top, IntVector{2, 1}, IntVector{0, 7}) == 3);
  CHECK(kmin(top, IntVector{2, 1}, IntVector{0, 0}) == 1);
  const auto& ray = classify(d, IntVector{1, 0});
  CHECK(kmin(ray, IntVector{1, 0}, IntVector{4, 0}) == 1);
  CHECK_THROWS_WITH_AS(kmin(ray, IntVector{1, 0}, IntVector{0, 1}), "kmin: gamma must lie in D~", Error);
  CHECK_THROWS_WITH_AS(kmin(top, IntVector{1, 0}, IntVector{0, 1}), "kmin: alpha must lie in D \\ {0}", Error);
  CHECK_THROWS_WITH_AS(kmin(top, IntVector{0, 0}, IntVector{0, 1}), "kmin: alpha must lie in D \\ {0}", Error);
}

TEST_CASE("sum escalation") {
  const auto d = canonical_decomposition(saturate(AffineMonoid(2, kWedge)));
  const auto& ray = classify(d, IntVector{1, 0});
  CHECK(sum_escalation(d, ray, IntVector{1, 0}, IntVector{1, 1}).dim() == 2);
  CHECK_THROWS_AS(sum_escalation(d, ray, IntVector{1, 0}, IntVector{2, 0}), Error);
}

TEST_CASE("Hilbert bases against box enumeration") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 12; ++t) {
    const auto gens = random_gens(rng);
    const auto s = saturate(AffineMonoid(3, gens));
    std::set<IntVector> expected;
    for (const auto& x : oracle::box_points(3, 7))
      if (oracle::in_cone(gens, x)) expected.insert(x);
    CHECK(oracle::box_combinations(s.hilbert_basis(), 3, 7) == expected);
    for (const auto& h : s.hilbert_basis()) CHECK(oracle::irreducible_in_saturation(gens, h));
    for (const auto& x : oracle::box_points(3, 4)) CHECK(member_saturated(s, x) == expected.count(x));
  }
}

TEST_CASE("closure is the span inside the orthant") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 12; ++t) {
    const auto gens = random_gens(rng);
    const auto c = closure(AffineMonoid(3, gens));
    std::set<IntVector> expected;
    for (const auto& x : oracle::box_points(3, 5))
      if (oracle::in_rational_span(gens, x)) expected.insert(x);
    CHECK(oracle::box_combinations(c.hilbert_basis(), 3, 5) == expected);
  }
}

TEST_CASE("factorize agrees with box combinations") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 10; ++t) {
    const auto gens = random_gens(rng);
    const AffineMonoid m(3, gens);
    const auto reach = oracle::box_combinations(gens, 3, 5);
    for (const auto& x : oracle::box_points(3, 5)) {
      const auto f = factorize(m, x);
      CHECK(f.has_value() == (reach.count(x) == 1));
      if (!f) continue;
      IntVector sum(3);
      for (std::size_t i = 0; i < f->size(); ++i) sum += (*f)[i] * m.generators()[i];
      CHECK(sum == x);
    }
  }
}

TEST_CASE("kmin against incremental search") {
  std::mt19937_64 rng(80);
  int checked = 0;
  for (int t = 0; t < 15; ++t) {
    const auto gens = random_gens(rng);
    const auto d = canonical_decomposition(saturate(AffineMonoid(3, gens)));
    const auto box = oracle::box_points(3, 6);
    for (const auto& p : d.pieces) {
      if (p.dim() == 0) continue;
      std::vector<IntVector> in_piece, in_dtilde;
      for (const auto& x : box) {
        if (!x.is_zero() && p.contains(x)) in_piece.push_back(x);
        if (p.in_dtilde(x)) in_dtilde.push_back(x);
      }
      if (in_piece.empty()) continue;
      for (int k = 0; k < 3; ++k) {
        const auto& a = in_piece[rng() % in_piece.size()];
        const auto& g = in_dtilde[rng() % in_dtilde.size()];
        const auto want = oracle::kmin_incremental(gens, p.face().sample_point(), a, g);
        REQUIRE(want);
        CHECK(kmin(p, a, g) == *want);
        ++checked;
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("dtilde is the span of the piece inside the orthant") {
  const auto d = canonical_decomposition(saturate(AffineMonoid(2, kWedge)));
  const auto& ray = classify(d, IntVector{1, 2});
  CHECK(ray.dtilde().hilbert_basis() == std::vector<IntVector>{IntVector{1, 2}});
  CHECK(ray.in_dtilde(IntVector{2, 4}));
  CHECK_FALSE(ray.in_dtilde(IntVector{1, 1}));
}

}
