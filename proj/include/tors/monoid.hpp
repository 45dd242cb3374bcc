#pragma once

// Affine monoids C ⊆ N0^n, their saturation, and the canonical decomposition
// of a saturated monoid into pieces (A ∩ C) ∪ {0}, one per relatively open
// face A of conv(C).

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "tors/polyhedral.hpp"

namespace tors {

/// Submonoid of N0^n generated by finitely many vectors.
class AffineMonoid {
 public:
  AffineMonoid() = default;
  /// Zero and duplicate generators are dropped; negative entries throw.
  AffineMonoid(std::size_t ambient, std::span<const IntVector> generators);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const Subspace& span() const noexcept { return cone_.span(); }
  const Cone& cone() const noexcept { return cone_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> generators_;
  Cone cone_;
};

/// Multiplicities of generators summing to alpha, if alpha lies in the monoid.
/// Decided exactly by dynamic programming over the box [0, alpha].
std::optional<std::vector<Integer>> factorize(const AffineMonoid& m, const IntVector& alpha);
bool member_generated(const AffineMonoid& m, const IntVector& alpha);

/// A saturated monoid: the lattice points of a rational cone in N0^n, with
/// its Hilbert basis.
class SaturatedMonoid {
 public:
  SaturatedMonoid() = default;
  SaturatedMonoid(AffineMonoid base, std::vector<IntVector> hilbert_basis)
      : base_(std::move(base)), hilbert_basis_(std::move(hilbert_basis)) {}

  std::size_t ambient() const noexcept { return base_.ambient(); }
  const AffineMonoid& base() const noexcept { return base_; }
  const Cone& cone() const noexcept { return base_.cone(); }
  const Subspace& span() const noexcept { return base_.span(); }
  const std::vector<IntVector>& hilbert_basis() const noexcept { return hilbert_basis_; }
  /// The monoid generated by the Hilbert basis (same set, minimal generators).
  AffineMonoid as_generated() const { return AffineMonoid(ambient(), hilbert_basis_); }

 private:
  AffineMonoid base_;
  std::vector<IntVector> hilbert_basis_;
};

/// Hilbert basis of the lattice points of a pointed cone in N0^n.
std::vector<IntVector> hilbert_basis(const Cone& cone);

/// Saturation {α ∈ N0^n : kα ∈ C for some k ≥ 1} = conv(C) ∩ Z^n.
SaturatedMonoid saturate(const AffineMonoid& m);
/// Closure <C> ∩ N0^n (lattice points of the whole span inside the orthant).
SaturatedMonoid closure(const AffineMonoid& m);
/// <W> ∩ N0^n for a subspace W spanned by vectors of N0^n.
SaturatedMonoid closure(const Subspace& w);

bool member_saturated(const SaturatedMonoid& s, const IntVector& alpha);
bool is_saturated(const AffineMonoid& m);

/// D = (A ∩ C) ∪ {0} for an open face A of conv(C).
class DecompPiece {
 public:
  DecompPiece(Face face, std::size_t ambient);

  std::size_t id() const noexcept { return face_.id; }
  std::size_t dim() const noexcept { return face_.dim; }
  const Face& face() const noexcept { return face_; }
  const Subspace& support() const noexcept { return face_.support; }

  /// α ∈ D.
  bool contains(const IntVector& alpha) const;
  /// α ∈ D~ = <D> ∩ N0^n.
  bool in_dtilde(const IntVector& alpha) const;
  /// D~ with its Hilbert basis; computed once on first use.
  const SaturatedMonoid& dtilde() const;

 private:
  struct Lazy {
    std::once_flag once;
    std::optional<SaturatedMonoid> value;
  };
  Face face_;
  std::size_t ambient_;
  std::shared_ptr<Lazy> lazy_;
};

struct CanonicalDecomposition {
  SaturatedMonoid monoid;
  FaceDecomposition faces;
  std::vector<DecompPiece> pieces;  ///< pieces[i] belongs to faces.faces[i]
};

CanonicalDecomposition canonical_decomposition(const SaturatedMonoid& s);

/// The piece whose open part contains α; the apex for α = 0.
/// Throws "not in monoid" when α ∉ C.
const DecompPiece& classify(const CanonicalDecomposition& d, const IntVector& alpha);

const SaturatedMonoid& dtilde(const DecompPiece& p);

inline constexpr long kKminSearchCap = 1000000;

/// Minimal k ≥ 1 with kα + γ ∈ D, for α ∈ D \ {0} and γ ∈ D~.
long kmin(const DecompPiece& p, const IntVector& alpha, const IntVector& gamma);

/// The piece E containing α + β, for α ∈ D \ {0} and β ∈ C \ D~; throws if
/// dim E does not exceed dim D.
const DecompPiece& sum_escalation(const CanonicalDecomposition& d, const DecompPiece& p,
                                  const IntVector& alpha, const IntVector& beta);

}  // namespace tors
