#pragma once

// Brute-force reference implementations. They share no algorithmic code with
// the library (only the value types) and are used by the tests and by the
// `verify` command to cross-check it.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tors/qsubring.hpp"
#include "tors/semiring.hpp"

namespace tors::oracle {

/// Primes up to `bound` by sieving.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Number of primes p ≤ prime_bound with a ∈ pS.
std::size_t prime_divisor_count(const FiniteSemiring& s, Elem a, std::uint64_t prime_bound = 10000);
/// SAD iff the count reaches the threshold.
bool sad_by_sampling(const FiniteSemiring& s, Elem a, std::uint64_t prime_bound = 10000,
                     std::size_t threshold = 100);

/// All points of the box [0, bound]^n that are N-combinations of `gens`.
std::set<IntVector> box_combinations(const std::vector<IntVector>& gens, std::size_t rank, long bound);
/// All points of the box [0, bound]^n.
std::vector<IntVector> box_points(std::size_t rank, long bound);

/// x - εd lies in the cone spanned by `gens` for all small ε ≥ 0
/// (with d = 0: x lies in the cone). Decided over linearly independent
/// subsets of the generators by Cramer's rule.
bool cone_step(const std::vector<IntVector>& gens, const IntVector& x, const IntVector& d);
bool in_cone(const std::vector<IntVector>& gens, const IntVector& x);
/// x lies in the rational span of `gens`.
bool in_rational_span(const std::vector<IntVector>& gens, const IntVector& x);

/// Indices of the generators spanning the smallest face of cone(gens)
/// containing x (x must lie in the cone): those g with x - εg in the cone.
std::vector<std::size_t> minimal_face(const std::vector<IntVector>& gens, const IntVector& x);

/// x is a nonzero element of the saturated monoid that is not a sum of two
/// nonzero elements of it.
bool irreducible_in_saturation(const std::vector<IntVector>& gens, const IntVector& x);

/// Least k ≥ 1 with kα + γ in the piece of cone(gens) whose open face is the
/// minimal face of `face_point`, searched up to `cap`.
std::optional<long> kmin_incremental(const std::vector<IntVector>& gens, const IntVector& face_point,
                                     const IntVector& alpha, const IntVector& gamma, long cap = 10000);

/// Commutative semirings (unity not required) with exactly `order` elements,
/// counted by checking every pair of commutative tables.
std::size_t count_semirings(std::size_t order);

/// Size of the minimal ideal of (S, +), the intersection of all a + S. The
/// Grothendieck group of a finite commutative semigroup is isomorphic to it.
std::size_t grothendieck_order(const FiniteSemiring& s);

/// a = a + b + a for some b.
bool regular_by_search(const FiniteSemiring& s, Elem a);

struct TwoSidedReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

/// Compares membership in `d` with the closure oracle for gens on all
/// fractions a/q with |a|, q ≤ bound.
TwoSidedReport two_sided_check(const std::vector<Fraction>& gens, const QSubringDescriptor& d,
                               long bound);

}  // namespace tors::oracle
