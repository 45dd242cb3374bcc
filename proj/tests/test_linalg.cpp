#include <doctest.h>

#include "helpers.hpp"
#include "tors/linalg.hpp"

using namespace tors;
using testing::random_vector;

TEST_SUITE("linalg") {

TEST_CASE("vector basics") {
  const IntVector v{2, 4, -6};
  CHECK(v.to_string() == "(2,4,-6)");
  CHECK(content(v) == 2);
  CHECK(primitive(v) == IntVector{1, 2, -3});
  CHECK(v.degree() == 0);
  CHECK_FALSE(v.is_nonnegative());
  CHECK(dot(v, IntVector{1, 1, 1}) == 0);
  CHECK(componentwise_leq(IntVector{1, 2}, IntVector{1, 3}));
  CHECK_FALSE(componentwise_leq(IntVector{2, 2}, IntVector{1, 3}));
  CHECK_THROWS_WITH_AS(primitive(IntVector(3)), "no primitive form: zero vector", Error);
  CHECK_THROWS_AS((IntVector{1, 2} + IntVector{1, 2, 3}), Error);
  CHECK(IntVector{1, 2} < IntVector{1, 3});
}

TEST_CASE("hnf of a 2x2 lattice") {
  // rows (2,4),(3,5) span the lattice with basis (1,1),(0,2)
  const std::vector<IntVector> rows{IntVector{2, 4}, IntVector{3, 5}};
  const auto h = hnf(matrix_from_rows(rows, 2));
  CHECK(h.rank == 2);
  CHECK(matrix_row(h.h, 0) == IntVector{1, 1});
  CHECK(matrix_row(h.h, 1) == IntVector{0, 2});
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(rng, c, -5, 5));
    const IntMatrix m = matrix_from_rows(rows, c);
    const auto h = hnf(m);
    CHECK(h.u * m == h.h);
    std::vector<std::vector<Integer>> u(r, std::vector<Integer>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) u[i][j] = h.u(i, j);
    CHECK(abs(testing::det(u)) == 1);
    CHECK(h.rank == rank_of(rows, c));
    for (std::size_t i = 0; i < h.rank; ++i) {
      const std::size_t p = h.pivots[i];
      CHECK(h.h(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.h(k, p) >= 0);
        CHECK(h.h(k, p) < h.h(i, p));
      }
      for (std::size_t j = 0; j < p; ++j) CHECK(h.h(i, j) == 0);
    }
    for (std::size_t i = h.rank; i < r; ++i) CHECK(h.h.row_is_zero(i));
  }
}

TEST_CASE("integer kernel against brute force") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 2, c = 2 + rng() % 2;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(rng, c, -3, 3));
    const IntMatrix a = matrix_from_rows(rows, c);
    const auto k = integer_kernel(a);
    CHECK(k.size() == c - rank_of(rows, c));
    for (const auto& v : k) CHECK((a * v).is_zero());
    // every small kernel vector has integral coordinates in the basis
    std::vector<long> x(c, -3);
    while (true) {
      const IntVector v(std::vector<Integer>(x.begin(), x.end()));
      if ((a * v).is_zero()) {
        const auto coords = testing::solve_rational(k, v);
        REQUIRE(coords);
        for (const auto& q : *coords) CHECK(q.get_den() == 1);
      }
      std::size_t i = 0;
      while (i < c && x[i] == 3) x[i++] = -3;
      if (i == c) break;
      ++x[i];
    }
  }
}

TEST_CASE("solve_integer") {
  const std::vector<IntVector> two{IntVector{2}};
  CHECK_FALSE(solve_integer(matrix_from_rows(two, 1), IntVector{1}));
  const std::vector<IntVector> row{IntVector{2, 4}};
  const auto x = solve_integer(matrix_from_rows(row, 2), IntVector{2});
  REQUIRE(x);
  CHECK(dot(*x, IntVector{2, 4}) == 2);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(rng, c, -6, 6));
    const IntMatrix a = matrix_from_rows(rows, c);
    const IntVector b = a * random_vector(rng, c, -4, 4);
    const auto s = solve_integer(a, b);
    REQUIRE(s);
    CHECK(a * *s == b);
  }
}

TEST_CASE("subspaces are canonical") {
  const std::vector<IntVector> a{IntVector{1, 2}, IntVector{2, 4}}, b{IntVector{3, 6}};
  CHECK(span(2, a) == span(2, b));
  CHECK(span(2, a).dim() == 1);
  CHECK(span(2, a).contains(IntVector{-5, -10}));
  CHECK_FALSE(span(2, a).contains(IntVector{1, 1}));
  const std::vector<IntVector> c{IntVector{1, 1, 0}, IntVector{0, 1, 1}}, d{IntVector{1, 2, 1}, IntVector{1, 0, -1}};
  CHECK(span(3, c) == span(3, d));
  CHECK(Subspace::zero(3).dim() == 0);
  CHECK(lattice_intersection(span(2, b)) == std::vector<IntVector>{IntVector{1, 2}});
}

TEST_CASE("rref and rank") {
  RatMatrix m(2, 3);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 6;
  m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 3;
  std::vector<std::size_t> piv;
  const auto r = rref(m, &piv);
  CHECK(r.rows() == 1);
  CHECK(piv == std::vector<std::size_t>{0});
  CHECK(r(0, 2) == 3);
}

}
