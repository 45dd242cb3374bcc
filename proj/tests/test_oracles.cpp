#include <doctest.h>

#include "helpers.hpp"
#include "tors/oracles.hpp"

using namespace tors;

TEST_SUITE("oracles") {

TEST_CASE("prime sieve") {
  CHECK(oracle::primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(oracle::primes_up_to(10000).size() == 1229);
}

TEST_CASE("prime sampling") {
  CHECK(oracle::sad_by_sampling(cyclic_ring(3), 1));
  // in T2, p·c for p ≥ 2 is 2 or 0, never 1
  CHECK(oracle::prime_divisor_count(truncated_naturals(2), 1) == 0);
  CHECK(oracle::prime_divisor_count(truncated_naturals(2), 2) == 1229);
  // in Z/4, p·c = 1 exactly for odd p
  CHECK(oracle::prime_divisor_count(cyclic_ring(4), 1) == 1228);
  CHECK(oracle::prime_divisor_count(cyclic_ring(4), 2) == 1229);
}

TEST_CASE("cone membership and faces") {
  const std::vector<IntVector> wedge{IntVector{1, 0}, IntVector{1, 2}};
  CHECK(oracle::in_cone(wedge, IntVector{1, 1}));
  CHECK(oracle::in_cone(wedge, IntVector{0, 0}));
  CHECK_FALSE(oracle::in_cone(wedge, IntVector{0, 1}));
  CHECK(oracle::minimal_face(wedge, IntVector{2, 1}) == std::vector<std::size_t>{0, 1});
  CHECK(oracle::minimal_face(wedge, IntVector{3, 0}) == std::vector<std::size_t>{0});
  CHECK(oracle::minimal_face(wedge, IntVector{0, 0}).empty());
  CHECK(oracle::in_rational_span({IntVector{1, 1, 0}}, IntVector{3, 3, 0}));
  CHECK_FALSE(oracle::in_rational_span({IntVector{1, 1, 0}}, IntVector{3, 2, 0}));
  CHECK(oracle::irreducible_in_saturation(wedge, IntVector{1, 1}));
  CHECK_FALSE(oracle::irreducible_in_saturation(wedge, IntVector{2, 1}));
  CHECK(oracle::kmin_incremental(wedge, IntVector{2, 1}, IntVector{2, 1}, IntVector{0, 7}) == 3);
}

TEST_CASE("box enumeration") {
  CHECK(oracle::box_points(2, 2).size() == 9);
  const auto reach = oracle::box_combinations({IntVector{2}}, 1, 7);
  CHECK(reach == std::set<IntVector>{IntVector{0}, IntVector{2}, IntVector{4}, IntVector{6}});
}

TEST_CASE("semiring counts and Grothendieck orders") {
  CHECK(oracle::count_semirings(1) == 1);
  CHECK(oracle::count_semirings(2) == 16);
  CHECK(oracle::grothendieck_order(boolean_semiring()) == 1);
  CHECK(oracle::grothendieck_order(cyclic_ring(3)) == 3);
  CHECK(oracle::grothendieck_order(truncated_naturals(3)) == 1);
}

TEST_CASE("the two-sided check detects wrong descriptors") {
  const std::vector<Fraction> gens{Fraction(5, 2)};
  CHECK(oracle::two_sided_check(gens, {5, PrimeSet::finite({2})}, 64).violations.empty());
  CHECK_FALSE(oracle::two_sided_check(gens, {1, PrimeSet::finite({2})}, 64).violations.empty());
  CHECK_FALSE(oracle::two_sided_check(gens, {25, PrimeSet::finite({2})}, 64).violations.empty());
  CHECK_FALSE(oracle::two_sided_check(gens, {5, PrimeSet::finite({2, 3})}, 64).violations.empty());
}

}
