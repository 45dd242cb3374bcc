#pragma once

// Sparse polynomials of the monoid semirings N[C] and Z[C], ideals of Z[C]
// with checkable membership certificates, and the monomial shift x^{kα}·f.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tors/error.hpp"
#include "tors/monoid.hpp"

namespace tors {

enum class CoeffDomain { naturals, integers };

/// Finite sum of k·x^e with e ∈ N0^n. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<IntVector, Integer>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t rank, CoeffDomain domain = CoeffDomain::integers)
      : rank_(rank), domain_(domain) {}

  static SparsePoly monomial(const IntVector& e, const Integer& coeff = 1,
                             CoeffDomain domain = CoeffDomain::integers);
  static SparsePoly constant(std::size_t rank, const Integer& c,
                             CoeffDomain domain = CoeffDomain::integers);

  std::size_t rank() const noexcept { return rank_; }
  CoeffDomain domain() const noexcept { return domain_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const IntVector& e) const;

  /// Adds c·x^e in place.
  void add_term(const IntVector& e, const Integer& c);
  SparsePoly with_domain(CoeffDomain domain) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t rank_ = 0;
  CoeffDomain domain_ = CoeffDomain::integers;
  Terms terms_;
};

/// The result lies in N[C] only when both operands do.
SparsePoly add(const SparsePoly& f, const SparsePoly& g);
/// Always over Z.
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly scale(const Integer& k, const SparsePoly& f);

inline SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return add(f, g); }
inline SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return sub(f, g); }
inline SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) { return mul(f, g); }

bool support_in(const AffineMonoid& m, const SparsePoly& f);

/// `2*x^(1,1) + 1*x^(2,0)`; the zero polynomial prints as `0`.
std::string to_string(const SparsePoly& f);
/// Inverse of to_string. A bare integer is a constant.
SparsePoly parse_poly(std::string_view text, std::size_t rank,
                      CoeffDomain domain = CoeffDomain::integers);

struct ShiftResult {
  long k = 0;
  SparsePoly shifted;
  /// For each term exponent e (in term order), a split e = β + γ with β ∈ C, γ ∈ D~.
  std::vector<std::pair<IntVector, IntVector>> splits;
};

/// Minimal k ≥ 1 with x^{kα}·f supported in C, for f supported in C + D~ and
/// α ∈ D \ {0}. Throws "not in C+D~" when an exponent has no split.
ShiftResult shift_into(const SparsePoly& f, const IntVector& alpha, const DecompPiece& p,
                       const AffineMonoid& c);

/// Ideal of Z[C] generated by finitely many polynomials supported in C.
struct Ideal {
  AffineMonoid universe;
  std::vector<SparsePoly> generators;
};

Ideal make_ideal(AffineMonoid universe, std::vector<SparsePoly> generators);

struct Cofactor {
  SparsePoly f;
  std::size_t generator = 0;
};

/// target = Σ f_i·h_{generator_i}.
struct MembershipCertificate {
  SparsePoly target;
  std::vector<Cofactor> cofactors;
};

struct CheckResult {
  bool ok = false;
  std::string diagnostic;
};

CheckResult check_certificate(const MembershipCertificate& cert, const Ideal& ideal);

/// Looks for cofactors supported in `cap` by solving the coefficient system
/// over Z. Undecided means no such cofactors exist, not that f ∉ I.
Decision<MembershipCertificate> bounded_ideal_membership(const SparsePoly& f, const Ideal& ideal,
                                                         std::span<const IntVector> cap);

/// Evidence that q·(x^α)^ℓ ∈ I, i.e. the class of x^α lies in N_T(Z[C]/I).
struct NTWitness {
  IntVector alpha;
  Integer q = 1;
  long ell = 1;
  MembershipCertificate certificate;
};

CheckResult check_nt_witness(const NTWitness& w, const Ideal& ideal);

}  // namespace tors
