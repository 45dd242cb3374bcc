#pragma once

// Pointed rational polyhedral cones inside the nonnegative orthant, their
// faces, and the partition of a cone into relatively open faces.

#include <cstddef>
#include <span>
#include <vector>

#include "tors/linalg.hpp"

namespace tors {

/// Cone generated by lattice points of N0^n. Extreme rays and facet normals
/// are computed at construction by the double description method. Facet
/// normals lie in the span of the cone and point inward.
class Cone {
 public:
  Cone() = default;

  std::size_t ambient() const noexcept { return span_.ambient(); }
  std::size_t dim() const noexcept { return span_.dim(); }
  const Subspace& span() const noexcept { return span_; }
  /// Sorted, deduplicated, zero dropped.
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  /// Primitive, sorted.
  const std::vector<IntVector>& extreme_rays() const noexcept { return rays_; }
  /// Primitive, sorted.
  const std::vector<IntVector>& facet_normals() const noexcept { return normals_; }

  bool contains(const IntVector& x) const;

 private:
  friend Cone cone_from_generators(std::span<const IntVector> gens);
  friend Cone zero_cone(std::size_t ambient);
  Subspace span_;
  std::vector<IntVector> generators_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> normals_;
};

/// Throws on empty input or a generator with a negative coordinate.
Cone cone_from_generators(std::span<const IntVector> gens);
Cone zero_cone(std::size_t ambient);
bool contains(const Cone& cone, const IntVector& x);

/// A face W ∩ K of a cone K together with the data needed to test membership
/// in its relatively open part ri(W ∩ K).
struct Face {
  std::size_t id = 0;
  std::size_t dim = 0;
  Subspace support;
  Cone closed_face;
  /// zero_set[i] is true when the i-th facet normal of the parent vanishes on the face.
  std::vector<bool> zero_set;
  /// Parent facet normals that do not vanish on the face; strictly positive on ri.
  std::vector<IntVector> strict_normals;

  /// Sum of the face's extreme rays, a point of the relatively open face.
  IntVector sample_point() const;
};

bool ri_contains(const Face& face, const IntVector& x);

/// All faces of a cone ordered by (dim, canonical support basis). The apex is
/// its own dim-0 face; every other open face excludes the origin.
struct FaceDecomposition {
  Cone cone;
  std::vector<Face> faces;

  const Face& apex() const { return faces.front(); }
  const Face& top() const { return faces.back(); }
};

FaceDecomposition face_decomposition(const Cone& cone);

/// The unique face whose relatively open part contains x. Throws
/// "point outside cone" when x is not in the cone.
const Face& classify_point(const FaceDecomposition& decomp, const IntVector& x);

/// Extreme rays of {y in Q^d : a y >= 0} for `a` of full column rank d,
/// as primitive integer vectors (double description method).
std::vector<IntVector> extreme_rays_of_inequalities(const IntMatrix& a);

/// Extreme rays of W ∩ R>=0^n. W must meet the open orthant's closure in a
/// set of full dimension in W (true for spans of subsets of N0^n).
std::vector<IntVector> orthant_section_rays(const Subspace& w);

}  // namespace tors
