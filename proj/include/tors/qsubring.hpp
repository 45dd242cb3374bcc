#pragma once

// Subrings R of Q with R ⊄ Z in the form R = {nk/q : k ∈ Z, q a product of
// primes from P}, the semirings N_P, and a closure oracle for checking both.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tors/linalg.hpp"

namespace tors {

/// A rational number in lowest terms with positive denominator.
class Fraction {
 public:
  Fraction() = default;
  Fraction(const Integer& num, const Integer& den = 1);
  Fraction(long num, long den = 1) : Fraction(Integer(num), Integer(den)) {}
  static Fraction from_rational(Rational q);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const Rational& value() const noexcept { return value_; }
  /// max(|num|, den)
  Integer height() const;
  bool is_integer() const { return value_.get_den() == 1; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return from_rational(a.value_ + b.value_); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return from_rational(a.value_ - b.value_); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return from_rational(a.value_ * b.value_); }
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", always with the slash.
  std::string to_string() const;

 private:
  Rational value_;
};

/// Accepts "a/b" and "a".
Fraction parse_fraction(std::string_view text);

/// Prime factors in increasing order. Throws when a factor cannot be certified.
std::vector<Integer> prime_factors(Integer x);

class PrimeSet {
 public:
  enum class Kind { finite, all, coprime_to };

  static PrimeSet finite(std::vector<Integer> primes);
  static PrimeSet all();
  /// All primes not dividing m; infinite for every m ≥ 1.
  static PrimeSet coprime_to(const Integer& m);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Integer>& primes() const noexcept { return primes_; }
  const Integer& modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool contains(const Integer& p) const;
  /// Every prime factor of q belongs to the set (q ≥ 1).
  bool is_smooth(const Integer& q) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  Kind kind_ = Kind::finite;
  std::vector<Integer> primes_;
  Integer modulus_ = 1;
};

struct QSubringDescriptor {
  Integer n = 1;
  PrimeSet primes;
  friend bool operator==(const QSubringDescriptor&, const QSubringDescriptor&) = default;
};

/// n = Σ coeffs[i]·den_i·a_i over the generators a_i = num_i/den_i.
struct GcdCertificate {
  std::vector<Integer> coeffs;
};

/// n/p = alpha·(n·num_i/p) + beta·n, where p divides den_i and
/// n·num_i/p = n·(den_i/p)·a_i lies in R.
struct PrimeCertificate {
  Integer p;
  std::size_t generator = 0;
  Integer alpha, beta;
};

struct CanonicalForm {
  QSubringDescriptor descriptor;
  GcdCertificate gcd;
  std::vector<PrimeCertificate> primes;
};

/// Throws "subring of Z, descriptor form does not apply" when every
/// generator is an integer. The certificates are checked before returning.
CanonicalForm canonical_form(const std::vector<Fraction>& gens);
/// Re-checks the certificates of a canonical form against the generators.
bool verify_certificates(const CanonicalForm& cf, const std::vector<Fraction>& gens);

bool member(const QSubringDescriptor& d, const Fraction& x);
bool is_finitely_generated(const QSubringDescriptor& d);
bool is_additively_almost_divisible(const QSubringDescriptor& d);
/// x ∈ N_P: x > 0 with denominator a product of primes from P.
bool np_member(const PrimeSet& p, const Fraction& x);

/// The Z-span of all products of generators whose partial products stay
/// within the height bound. A Z-span of finitely many rationals is cyclic,
/// so it is held as (step)·Z.
class ClosureOracle {
 public:
  const Fraction& step() const noexcept { return step_; }
  const std::vector<Fraction>& monomials() const noexcept { return monomials_; }
  const Integer& height_bound() const noexcept { return bound_; }
  /// x lies in the span (no height restriction).
  bool contains(const Fraction& x) const;
  /// Span elements of height ≤ bound. Enumerates; meant for small bounds.
  std::set<Fraction> elements() const;

 private:
  friend ClosureOracle closure_oracle(const std::vector<Fraction>& gens, const Integer& height_bound);
  Fraction step_;
  std::vector<Fraction> monomials_;
  Integer bound_;
};

ClosureOracle closure_oracle(const std::vector<Fraction>& gens, const Integer& height_bound);

}  // namespace tors
