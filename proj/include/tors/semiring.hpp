#pragma once

// Finite commutative semirings given by operation tables: validation, the
// additive element properties, the Grothendieck ring, the subsemiring Q_S,
// factors of N[C] by finitely many relations, and the test corpus.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tors/error.hpp"
#include "tors/polynomial.hpp"

namespace tors {

using Elem = std::uint32_t;

/// Raw operation tables, not yet checked.
struct SemiringTables {
  std::size_t order = 0;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  std::optional<Elem> unity;
  std::map<IntVector, Elem> generators;
};

/// A validated finite commutative semiring on {0, ..., order-1}.
class FiniteSemiring {
 public:
  FiniteSemiring() = default;

  std::size_t order() const noexcept { return order_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  const std::optional<Elem>& unity() const noexcept { return unity_; }
  /// Image of x^e for the listed exponents e, when built as a factor of N[C].
  const std::map<IntVector, Elem>& generators() const noexcept { return generators_; }

  /// k·a for k ≥ 1.
  Elem multiple(std::uint64_t k, Elem a) const;

  SemiringTables tables() const;

  friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
    return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.unity_ == b.unity_;
  }

 private:
  friend FiniteSemiring validate(const SemiringTables& t);
  std::size_t order_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::optional<Elem> unity_;
  std::map<IntVector, Elem> generators_;
};

/// Every violated axiom instance, e.g. "add not commutative at (0,1)".
std::vector<std::string> axiom_violations(const SemiringTables& t);

/// Checks all axioms exhaustively and throws an Error listing the violations.
/// A declared unity is verified; otherwise a multiplicative identity is
/// detected when one exists.
FiniteSemiring validate(const SemiringTables& t);

/// Boolean semiring {0,1} with 1+1 = 1.
FiniteSemiring boolean_semiring();
/// Z/m with modular tables.
FiniteSemiring cyclic_ring(std::size_t m);
/// {0, ..., t} with a+b = min(a+b, t) and ab = min(ab, t).
FiniteSemiring truncated_naturals(std::size_t t);

struct SadWitness {
  Elem c = 0;
  std::uint64_t m = 0;  ///< m·c = a with m in the periodic part of n ↦ n·c
};

struct ElementProfile {
  Elem element = 0;
  std::uint64_t index = 0;   ///< least i with i·a = j·a for some j > i
  std::uint64_t period = 0;  ///< least such j - i
  bool idempotent = false;
  bool torsion = true;
  bool regular = false;
  bool divisible = false;
  bool strongly_almost_divisible = false;
  bool almost_divisible = false;
  std::optional<Elem> regular_witness;  ///< b with a + b + a = a
  std::optional<SadWitness> sad_witness;
  std::optional<std::uint64_t> ad_multiplier;  ///< k with k·a strongly almost-divisible
};

ElementProfile profile(const FiniteSemiring& s, Elem a);
std::vector<ElementProfile> profile_all(const FiniteSemiring& s);

struct DiagramViolation {
  Elem element = 0;
  std::string implication;
};

struct DiagramReport {
  std::size_t elements = 0;
  std::size_t implications_checked = 0;
  std::vector<DiagramViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// The implications idempotent ⟹ regular∧torsion ⟹ torsion ⟹ almost-divisible,
/// idempotent ⟹ divisible ⟹ strongly almost-divisible ⟹ almost-divisible and
/// regular∧torsion ⟹ strongly almost-divisible, for every element.
DiagramReport check_diagram(const FiniteSemiring& s);

struct GrothendieckRing {
  FiniteSemiring ring;
  Elem zero = 0;
  std::vector<Elem> negation;
  std::vector<Elem> sigma;       ///< σ(x) = class of (2x, x)
  std::vector<Elem> pair_class;  ///< class of (x, y) at x * order + y

  Elem pair(Elem x, Elem y) const { return pair_class[x * sigma.size() + y]; }
  Elem subtract(Elem a, Elem b) const { return ring.add(a, negation[b]); }
};

/// (S × S)/≈ with (x,y) ≈ (x',y') iff x + y' + t = x' + y + t for some t.
/// Throws on any internal inconsistency.
GrothendieckRing grothendieck(const FiniteSemiring& s);

struct QSubsemiring {
  std::vector<Elem> elements;  ///< sorted
  bool closed_under_add = false;
  bool closed_under_mul = false;
  bool contains_unity = false;
  bool summand_closed = false;
  FiniteSemiring semiring;  ///< elements renumbered in sorted order
  std::vector<Elem> embedding;  ///< index in `semiring` -> element of S

  bool ok() const { return closed_under_add && closed_under_mul && contains_unity && summand_closed; }
};

/// Q_S = {x : x + a = k·1 for some a ∈ S, k ≥ 1}. Requires a unity.
QSubsemiring q_subsemiring(const FiniteSemiring& s);

struct NpHomReport {
  bool exists = false;  ///< 1_S strongly almost-divisible
  /// (p, a_p) with (p·1)·a_p = 1, for primes p up to the bound.
  std::vector<std::pair<std::uint64_t, Elem>> witnesses;
  /// Some witness prime exceeds the order of S exactly when `exists`.
  bool witnesses_consistent = false;
  /// φ(k/q) = (k·1)·Π a_p respects + and · on sampled fractions.
  bool homomorphism_ok = false;
  std::string detail;
};

/// Whether a unity-preserving homomorphism N_P → S exists for an infinite P.
bool np_hom_exists(const FiniteSemiring& s);
NpHomReport np_hom_report(const FiniteSemiring& s, std::uint64_t prime_bound = 1000);

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SadCriterionReport {
  std::vector<CheckItem> checks;
  bool ok() const;
};

/// Finite-scale checks of the equivalences for factors of N[C]: every element
/// almost-divisible; SAD(1) ⟺ all elements SAD ⟺ all elements regular; Q_S a
/// summand-closed subsemiring; S almost-divisible ⟺ Q_S almost-divisible;
/// G(Q_S) torsion. Requires a unity.
SadCriterionReport check_sad_criterion(const FiniteSemiring& s);

/// Factor of N[C] by the congruence generated by `relations`.
struct CongruencePresentation {
  AffineMonoid monoid;
  std::vector<std::pair<SparsePoly, SparsePoly>> relations;
  std::size_t size_cap = 64;
};

/// Enumerates the factor semiring. The generators of the monoid must be
/// linearly independent (C free). Undecided when the factor has more than
/// size_cap elements or the enumeration exhausts its node budget.
Decision<FiniteSemiring> quotient(const CongruencePresentation& p);

/// All commutative semirings on {0, ..., m-1} for 1 ≤ m ≤ max_order (max_order
/// ≤ 4), as distinct tables, ordered by (order, add table, mul table).
std::vector<FiniteSemiring> exhaustive_semirings(std::size_t max_order);

struct RandomQuotient {
  CongruencePresentation presentation;
  FiniteSemiring semiring;
};

/// `count` factors of N[C] from random presentations, keeping those whose
/// quotient is decided within size_cap. Deterministic in the seed.
std::vector<RandomQuotient> random_quotients(std::uint64_t seed, std::size_t count,
                                             std::size_t size_cap = 16);

}  // namespace tors
