#include "tors/qsubring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace tors {

namespace {

Integer parse_int(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size() || !std::all_of(t.begin() + static_cast<long>(start), t.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
    throw Error("malformed fraction component '" + std::string(s) + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t, 10);
}

bool certainly_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) == 2;
}

}  // namespace

Fraction::Fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("fraction with zero denominator");
  value_ = Rational(num, den);
  value_.canonicalize();
}

Fraction Fraction::from_rational(Rational q) {
  q.canonicalize();
  Fraction f;
  f.value_ = std::move(q);
  return f;
}

Integer Fraction::height() const {
  Integer a = abs(value_.get_num());
  return std::max(a, Integer(value_.get_den()));
}

std::string Fraction::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::vector<Integer> prime_factors(Integer x) {
  x = abs(x);
  if (x == 0) throw Error("prime_factors: zero has no factorization");
  std::vector<Integer> out;
  Integer d = 2;
  for (; d <= 1'000'000 && d * d <= x; ++d) {
    if (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) == 0) continue;
    out.push_back(d);
    while (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0) x /= d;
  }
  if (x > 1) {
    if (d * d <= x && !certainly_prime(x)) throw Error("cannot factor " + x.get_str());
    out.push_back(x);
  }
  return out;
}

PrimeSet PrimeSet::finite(std::vector<Integer> primes) {
  for (const auto& p : primes)
    if (!certainly_prime(p)) throw Error(p.get_str() + " is not a prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  PrimeSet s;
  s.primes_ = std::move(primes);
  return s;
}

PrimeSet PrimeSet::all() {
  PrimeSet s;
  s.kind_ = Kind::all;
  return s;
}

PrimeSet PrimeSet::coprime_to(const Integer& m) {
  if (m < 1) throw Error("coprime_to: modulus must be positive");
  PrimeSet s;
  s.kind_ = Kind::coprime_to;
  s.modulus_ = m;
  return s;
}

bool PrimeSet::contains(const Integer& p) const {
  switch (kind_) {
    case Kind::finite:
      return std::binary_search(primes_.begin(), primes_.end(), p);
    case Kind::all:
      return certainly_prime(p);
    case Kind::coprime_to:
      return certainly_prime(p) && mpz_divisible_p(modulus_.get_mpz_t(), p.get_mpz_t()) == 0;
  }
  return false;
}

bool PrimeSet::is_smooth(const Integer& q) const {
  if (q < 1) throw Error("is_smooth: expected a positive integer");
  switch (kind_) {
    case Kind::finite: {
      Integer rest = q;
      for (const auto& p : primes_)
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) rest /= p;
      return rest == 1;
    }
    case Kind::all:
      return true;
    case Kind::coprime_to:
      return gcd(q, modulus_) == 1;
  }
  return false;
}

CanonicalForm canonical_form(const std::vector<Fraction>& gens) {
  if (gens.empty()) throw Error("canonical_form: no generators");
  if (std::all_of(gens.begin(), gens.end(), [](const Fraction& f) { return f.is_integer(); }))
    throw Error("subring of Z, descriptor form does not apply");

  CanonicalForm cf;
  // n = gcd of the numerators, with Bézout coefficients.
  Integer g = 0;
  cf.gcd.coeffs.assign(gens.size(), Integer(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Integer next, s, t;
    const Integer num = gens[i].num();
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    for (auto& c : cf.gcd.coeffs) c *= s;
    cf.gcd.coeffs[i] += t;
    g = next;
  }
  cf.descriptor.n = g;

  std::vector<Integer> primes;
  for (const auto& f : gens)
    for (const auto& p : prime_factors(f.den())) primes.push_back(p);
  cf.descriptor.primes = PrimeSet::finite(primes);

  for (const auto& p : cf.descriptor.primes.primes()) {
    std::size_t i = 0;
    while (mpz_divisible_p(gens[i].den().get_mpz_t(), p.get_mpz_t()) == 0) ++i;
    PrimeCertificate pc{p, i, 0, 0};
    Integer one;
    const Integer num = gens[i].num();
    mpz_gcdext(one.get_mpz_t(), pc.alpha.get_mpz_t(), pc.beta.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    cf.primes.push_back(pc);
  }
  if (!verify_certificates(cf, gens)) throw Error("canonical_form: certificate check failed");
  return cf;
}

bool verify_certificates(const CanonicalForm& cf, const std::vector<Fraction>& gens) {
  const Integer& n = cf.descriptor.n;
  if (n < 1 || cf.gcd.coeffs.size() != gens.size()) return false;
  Fraction sum(0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    sum = sum + Fraction(Integer(cf.gcd.coeffs[i] * gens[i].den())) * gens[i];
  if (sum != Fraction(n)) return false;
  for (const auto& f : gens)
    if (mpz_divisible_p(f.num().get_mpz_t(), n.get_mpz_t()) == 0) return false;

  std::vector<Integer> expected;
  for (const auto& f : gens)
    for (const auto& p : prime_factors(f.den())) expected.push_back(p);
  if (!(PrimeSet::finite(expected) == cf.descriptor.primes)) return false;
  if (cf.primes.size() != cf.descriptor.primes.primes().size()) return false;
  for (std::size_t k = 0; k < cf.primes.size(); ++k) {
    const auto& pc = cf.primes[k];
    if (pc.p != cf.descriptor.primes.primes()[k] || pc.generator >= gens.size()) return false;
    const Fraction& a = gens[pc.generator];
    if (mpz_divisible_p(a.den().get_mpz_t(), pc.p.get_mpz_t()) == 0) return false;
    if (gcd(n, pc.p) != 1) return false;
    const Fraction in_r = Fraction(Integer(n * (a.den() / pc.p))) * a;
    if (Fraction(pc.alpha) * in_r + Fraction(Integer(pc.beta * n)) != Fraction(n, pc.p)) return false;
  }
  return true;
}

bool member(const QSubringDescriptor& d, const Fraction& x) {
  return d.primes.is_smooth(x.den()) && mpz_divisible_p(x.num().get_mpz_t(), d.n.get_mpz_t()) != 0;
}

bool is_finitely_generated(const QSubringDescriptor& d) { return d.primes.is_finite(); }

bool is_additively_almost_divisible(const QSubringDescriptor& d) { return !is_finitely_generated(d); }

bool np_member(const PrimeSet& p, const Fraction& x) { return x.num() > 0 && p.is_smooth(x.den()); }

bool ClosureOracle::contains(const Fraction& x) const {
  if (step_.num() == 0) return x.num() == 0;
  const Rational q = x.value() / step_.value();
  return q.get_den() == 1;
}

std::set<Fraction> ClosureOracle::elements() const {
  std::set<Fraction> out{Fraction(0)};
  if (step_.num() == 0) return out;
  const Integer g0 = abs(step_.num()), d0 = step_.den();
  for (Integer q = 1; q <= bound_; ++q) {
    if (mpz_divisible_p(d0.get_mpz_t(), q.get_mpz_t()) == 0) continue;
    for (Integer j = -bound_ / g0; j <= bound_ / g0; ++j)
      if (j != 0 && gcd(j, q) == 1) out.insert(Fraction(Integer(j * g0), q));
  }
  return out;
}

ClosureOracle closure_oracle(const std::vector<Fraction>& gens, const Integer& height_bound) {
  ClosureOracle o;
  o.bound_ = height_bound;
  std::vector<Fraction> nonzero;
  for (const auto& g : gens) {
    if (g.height() > height_bound) throw Error("closure_oracle: height bound below a generator height");
    if (g.num() != 0) nonzero.push_back(g);
  }
  std::set<Fraction> seen(nonzero.begin(), nonzero.end());
  std::deque<Fraction> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Fraction x = queue.front();
    queue.pop_front();
    for (const auto& g : nonzero) {
      Fraction y = x * g;
      if (y.height() <= height_bound && seen.insert(y).second) queue.push_back(y);
    }
  }
  o.monomials_.assign(seen.begin(), seen.end());

  Integer d = 1;
  for (const auto& m : o.monomials_) d = lcm(d, m.den());
  Integer g = 0;
  for (const auto& m : o.monomials_) g = gcd(g, m.num() * (d / m.den()));
  o.step_ = Fraction(g, d);
  return o;
}

}  // namespace tors
