#include <doctest.h>

#include "helpers.hpp"
#include "tors/oracles.hpp"
#include "tors/qsubring.hpp"

using namespace tors;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("qsubring") {

TEST_CASE("fractions") {
  CHECK(parse_fraction("6/4") == Fraction(3, 2));
  CHECK(parse_fraction("6/4").to_string() == "3/2");
  CHECK(parse_fraction("-7").to_string() == "-7/1");
  CHECK(parse_fraction(" 3 / -6 ").to_string() == "-1/2");
  CHECK(Fraction(-9, 4).height() == 9);
  CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK_THROWS_AS(Fraction(1, 0), Error);
  CHECK_THROWS_AS(parse_fraction("1/x"), Error);
}

TEST_CASE("primes") {
  CHECK(prime_factors(360) == ints({2, 3, 5}));
  CHECK(prime_factors(97) == ints({97}));
  CHECK(prime_factors(1).empty());
  CHECK_THROWS_AS(PrimeSet::finite(ints({4})), Error);
  const auto p = PrimeSet::finite(ints({5, 2, 2}));
  CHECK(p.primes() == ints({2, 5}));
  CHECK(p.is_smooth(40));
  CHECK_FALSE(p.is_smooth(6));
  CHECK(PrimeSet::coprime_to(6).contains(5));
  CHECK_FALSE(PrimeSet::coprime_to(6).contains(3));
  CHECK_FALSE(PrimeSet::coprime_to(6).contains(25));
  CHECK(PrimeSet::all().is_smooth(1001));
}

TEST_CASE("canonical forms") {
  const std::vector<Fraction> half{Fraction(1, 2)}, five_halves{Fraction(5, 2)}, mixed{Fraction(1, 2), Fraction(1, 3)};
  CHECK(canonical_form(half).descriptor == QSubringDescriptor{1, PrimeSet::finite(ints({2}))});
  CHECK(canonical_form(five_halves).descriptor == QSubringDescriptor{5, PrimeSet::finite(ints({2}))});
  CHECK(canonical_form(mixed).descriptor == QSubringDescriptor{1, PrimeSet::finite(ints({2, 3}))});
  for (const auto& g : {half, five_halves, mixed}) CHECK(verify_certificates(canonical_form(g), g));
  const std::vector<Fraction> integers{Fraction(4), Fraction(6)};
  CHECK_THROWS_WITH_AS(canonical_form(integers), "subring of Z, descriptor form does not apply", Error);

  auto cf = canonical_form(five_halves);
  cf.descriptor.n = 1;
  CHECK_FALSE(verify_certificates(cf, five_halves));
  cf = canonical_form(five_halves);
  cf.primes[0].alpha += 1;
  CHECK_FALSE(verify_certificates(cf, five_halves));
}

TEST_CASE("membership examples") {
  const QSubringDescriptor d{5, PrimeSet::finite(ints({2}))};
  CHECK(member(d, Fraction(5, 8)));
  CHECK_FALSE(member(d, Fraction(1, 2)));
  CHECK(member(d, Fraction(10)));
  CHECK(member({1, PrimeSet::all()}, Fraction(-17, 391)));
  CHECK_FALSE(member({1, PrimeSet::finite(ints({2}))}, Fraction(1, 6)));

  CHECK(is_finitely_generated({1, PrimeSet::finite(ints({2, 3}))}));
  CHECK_FALSE(is_finitely_generated({1, PrimeSet::all()}));
  CHECK(is_additively_almost_divisible({1, PrimeSet::all()}));
  CHECK_FALSE(is_additively_almost_divisible({1, PrimeSet::finite(ints({2}))}));
  CHECK(is_additively_almost_divisible({1, PrimeSet::coprime_to(6)}));

  CHECK(np_member(PrimeSet::finite(ints({2, 5})), Fraction(3, 10)));
  CHECK_FALSE(np_member(PrimeSet::finite(ints({2})), Fraction(1, 3)));
  CHECK(np_member(PrimeSet::finite(ints({})), Fraction(7)));
  CHECK_FALSE(np_member(PrimeSet::all(), Fraction(-1, 2)));
}

TEST_CASE("closure oracle examples") {
  const auto half = closure_oracle({Fraction(1, 2)}, 16).elements();
  for (const auto& x : {Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)}) CHECK(half.count(x));
  const auto five = closure_oracle({Fraction(5, 2)}, 32);
  CHECK(five.step() == Fraction(5, 4));
  const auto fe = five.elements();
  for (const auto& x : {Fraction(5), Fraction(5, 2), Fraction(25, 4), Fraction(5, 4)}) CHECK(fe.count(x));
  CHECK_FALSE(fe.count(Fraction(1)));
  std::set<Fraction> evens;
  for (long k = -8; k <= 8; k += 2) evens.insert(Fraction(k));
  CHECK(closure_oracle({Fraction(2)}, 8).elements() == evens);
  CHECK_THROWS_AS(closure_oracle({Fraction(5, 2)}, 4), Error);
}

TEST_CASE("canonical form against the closure oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    std::vector<Fraction> gens;
    for (long k = 1 + testing::uniform(rng, 0, 2); k > 0; --k)
      gens.emplace_back(testing::uniform(rng, -30, 30) | 1, testing::uniform(rng, 2, 30));
    const auto cf = canonical_form(gens);
    CHECK(verify_certificates(cf, gens));
    for (const auto& p : cf.descriptor.primes.primes()) CHECK(gcd(cf.descriptor.n, p) == 1);
    const auto rep = oracle::two_sided_check(gens, cf.descriptor, 128);
    CHECK(rep.violations.empty());
    CHECK(rep.checked > 0);
    for (const auto& g : gens) CHECK(member(cf.descriptor, g));
  }
}

TEST_CASE("membership is closed under the ring operations") {
  std::mt19937_64 rng(18);
  const std::vector<QSubringDescriptor> ds{{5, PrimeSet::finite(ints({2}))},
                                           {6, PrimeSet::finite(ints({5, 7}))},
                                           {1, PrimeSet::coprime_to(6)}};
  for (const auto& d : ds)
    for (int t = 0; t < 200; ++t) {
      auto draw = [&] {
        const long q = testing::uniform(rng, 1, 60);
        return Fraction(Integer(d.n * testing::uniform(rng, -20, 20)), Integer(q));
      };
      const Fraction x = draw(), y = draw();
      if (!member(d, x) || !member(d, y)) continue;
      CHECK(member(d, x + y));
      CHECK(member(d, x * y));
      CHECK(member(d, Fraction(0) - x));
    }
}

}
