#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tors/oracles.hpp"
#include "tors/polyhedral.hpp"

using namespace tors;

namespace {

std::vector<IntVector> random_gens(std::mt19937_64& rng, std::size_t n) {
  std::vector<IntVector> g;
  const std::size_t k = 1 + rng() % 4;
  while (g.size() < k) {
    auto v = testing::random_vector(rng, n, 0, 4);
    if (!v.is_zero()) g.push_back(v);
  }
  return g;
}

}  // namespace

TEST_SUITE("polyhedral") {

TEST_CASE("the wedge cone") {
  const std::vector<IntVector> gens{IntVector{1, 0}, IntVector{1, 2}, IntVector{2, 2}};
  const Cone c = cone_from_generators(gens);
  CHECK(c.dim() == 2);
  CHECK(c.extreme_rays() == std::vector<IntVector>{IntVector{1, 0}, IntVector{1, 2}});
  // inward normals: y >= 0 and 2x - y >= 0
  CHECK(c.facet_normals() == std::vector<IntVector>{IntVector{0, 1}, IntVector{2, -1}});
  CHECK(c.contains(IntVector{3, 1}));
  CHECK_FALSE(c.contains(IntVector{0, 1}));

  const auto d = face_decomposition(c);
  REQUIRE(d.faces.size() == 4);
  CHECK(d.apex().dim == 0);
  CHECK(d.top().dim == 2);
  CHECK(classify_point(d, IntVector{2, 1}).dim == 2);
  CHECK(classify_point(d, IntVector{3, 0}).dim == 1);
  CHECK(classify_point(d, IntVector{2, 4}).dim == 1);
  CHECK(classify_point(d, IntVector{0, 0}).dim == 0);
  CHECK_THROWS_WITH_AS(classify_point(d, IntVector{0, 1}), "point outside cone", Error);
  CHECK(ri_contains(d.apex(), IntVector{0, 0}));
  CHECK_FALSE(ri_contains(d.top(), IntVector{3, 0}));
}

TEST_CASE("face counts") {
  // simplicial 3-cone: 2^3 faces
  const std::vector<IntVector> simplex{IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, 3}};
  CHECK(face_decomposition(cone_from_generators(simplex)).faces.size() == 8);
  // cone over a square: apex, 4 rays, 4 facets, interior
  const std::vector<IntVector> square{IntVector{0, 0, 1}, IntVector{1, 0, 1}, IntVector{0, 1, 1}, IntVector{1, 1, 1}};
  const auto sq = face_decomposition(cone_from_generators(square));
  CHECK(sq.faces.size() == 10);
  CHECK(sq.cone.extreme_rays().size() == 4);
  CHECK(sq.cone.facet_normals().size() == 4);
  // a ray
  const std::vector<IntVector> ray{IntVector{2, 2}};
  CHECK(face_decomposition(cone_from_generators(ray)).faces.size() == 2);
}

TEST_CASE("extreme rays of inequalities") {
  // x >= 0, y >= 0, x - y >= ... as rows of a
  const std::vector<IntVector> rows{IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}};
  auto rays = extreme_rays_of_inequalities(matrix_from_rows(rows, 2));
  std::sort(rays.begin(), rays.end());
  CHECK(rays == std::vector<IntVector>{IntVector{0, 1}, IntVector{1, 0}});
}

TEST_CASE("cone membership and open faces agree with the oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const auto gens = random_gens(rng, 3);
    const auto d = face_decomposition(cone_from_generators(gens));
    for (const auto& x : oracle::box_points(3, 5)) {
      const bool in = oracle::in_cone(gens, x);
      CHECK(d.cone.contains(x) == in);
      if (!in) continue;
      const auto& f = classify_point(d, x);
      CHECK(oracle::minimal_face(gens, x) == oracle::minimal_face(gens, f.sample_point()));
      std::size_t hits = 0;
      for (const auto& g : d.faces) hits += ri_contains(g, x);
      CHECK(hits == 1);
    }
    for (const auto& n : d.cone.facet_normals())
      for (const auto& g : gens) CHECK(dot(n, g) >= 0);
    for (const auto& r : d.cone.extreme_rays()) CHECK(content(r) == 1);
  }
}

}
