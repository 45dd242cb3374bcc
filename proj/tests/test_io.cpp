#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "tors/io.hpp"

using namespace tors;

TEST_SUITE("io") {

TEST_CASE("monoid files") {
  std::istringstream ok("# comment\nn 3\n1 0 2\n\n0 1 1\n");
  const auto m = read_monoid(ok);
  CHECK(m.ambient() == 3);
  CHECK(m.generators().size() == 2);
  std::istringstream again(write_monoid(m));
  CHECK(read_monoid(again).generators() == m.generators());

  std::istringstream short_row("n 2\n1 0\n1\n");
  CHECK_THROWS_WITH_AS(read_monoid(short_row, "a.monoid"), "a.monoid:3: generator has 1 entries, expected 2", Error);
  std::istringstream header("2\n");
  CHECK_THROWS_WITH_AS(read_monoid(header, "b.monoid"), "b.monoid:1: expected `n <rank>`", Error);
  std::istringstream neg("n 1\n-1\n");
  CHECK_THROWS_WITH_AS(read_monoid(neg, "c.monoid"), "c.monoid:2: generator entries must be nonnegative", Error);
  std::istringstream junk("n 1\nz\n");
  CHECK_THROWS_WITH_AS(read_monoid(junk, "d.monoid"), "d.monoid:2: malformed integer 'z'", Error);
  CHECK_THROWS_WITH_AS(read_monoid_file("/nonexistent/x.monoid"), "cannot open /nonexistent/x.monoid", Error);

  const auto wedge = read_monoid_file(testing::data_path("wedge.monoid"));
  CHECK(wedge.generators() == std::vector<IntVector>{IntVector{1, 0}, IntVector{1, 2}});
}

TEST_CASE("vectors") {
  CHECK(parse_vector("1,2,3") == IntVector{1, 2, 3});
  CHECK(parse_vector("(2, -1)") == IntVector{2, -1});
  CHECK_THROWS_AS(parse_vector("1,,2"), Error);
  CHECK_THROWS_AS(parse_vector(""), Error);
  const IntVector big(std::vector<Integer>{Integer("123456789012345678901234567890"), Integer(-3)});
  CHECK(to_json(big) == json::array({"123456789012345678901234567890", "-3"}));
  CHECK(vector_from_json(to_json(big)) == big);
  CHECK(vector_from_json(json::array({1, "2"})) == IntVector{1, 2});
}

TEST_CASE("polynomials") {
  const auto f = parse_poly("2*x^(1,1) - x^(0,3) + 4", 2);
  CHECK(poly_from_json(to_json(f), 2, CoeffDomain::integers) == f);
  CHECK(poly_from_json(json(to_string(f)), 2, CoeffDomain::integers) == f);
  CHECK(poly_from_json(json(3), 2, CoeffDomain::naturals) == SparsePoly::constant(2, 3));
  CHECK_THROWS_AS(poly_from_json(json::array({json::array({"1", json::array({"1"})})}), 2, CoeffDomain::integers),
                  Error);
}

TEST_CASE("semiring JSON round trip") {
  for (const auto& s : exhaustive_semirings(3)) {
    const auto back = semiring_from_json(to_json(s));
    CHECK(back == s);
    CHECK(semiring_from_json(json{{"payload", {{"semiring", to_json(s)}}}}) == s);
  }
  for (const auto& rq : random_quotients(3, 5)) {
    const auto back = semiring_from_json(to_json(rq.semiring));
    CHECK(back == rq.semiring);
    CHECK(back.generators() == rq.semiring.generators());
  }
  CHECK_THROWS_AS(semiring_from_json(json{{"add", {{0, 1}, {0, 1}}}, {"mul", {{0, 0}, {0, 1}}}}), Error);
  CHECK_THROWS_AS(semiring_from_json(json{{"order", 2}}), Error);
  const auto z3 = semiring_from_json(read_json_file(testing::data_path("z3.semiring.json")));
  CHECK(z3 == cyclic_ring(3));
}

TEST_CASE("presentation JSON round trip") {
  const auto p = presentation_from_json(read_json_file(testing::data_path("cyclic.presentation.json")));
  CHECK(p.relations.size() == 2);
  CHECK(p.size_cap == 64);
  const auto again = presentation_from_json(to_json(p));
  CHECK(again.relations == p.relations);
  CHECK(again.monoid.generators() == p.monoid.generators());
  CHECK(to_json(again) == to_json(p));
  CHECK_THROWS_AS(presentation_from_json(json{{"relations", json::array()}}), Error);
}

TEST_CASE("descriptors and profiles") {
  const QSubringDescriptor d{5, PrimeSet::finite({2})};
  CHECK(to_json(d) == json{{"n", "5"}, {"primes", {{"kind", "finite"}, {"values", {"2"}}}}});
  CHECK(to_json(PrimeSet::coprime_to(6)) == json{{"kind", "coprime_to"}, {"modulus", "6"}});
  CHECK(to_json(PrimeSet::all()) == json{{"kind", "all"}});
  CHECK(to_json(Fraction(10, 4)) == "5/2");
  const auto pj = to_json(profile(truncated_naturals(2), 1));
  CHECK(pj["index"] == 2);
  CHECK(pj["strongly_almost_divisible"] == false);
}

}
