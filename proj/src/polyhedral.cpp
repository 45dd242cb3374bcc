#include "tors/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tors {

namespace {

IntVector scaled_to_primitive(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * den;
    out[i] = s.get_num();
  }
  return primitive(out);
}

struct DdRay {
  IntVector v;
  std::vector<bool> tight;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t count_true(const std::vector<bool>& a) {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<IntVector> extreme_rays_of_inequalities(const IntMatrix& a) {
  const std::size_t d = a.cols();
  const std::size_t m = a.rows();
  if (d == 0) return {};

  // Greedy choice of d independent rows.
  std::vector<std::size_t> basis_rows;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < m && chosen.size() < d; ++i) {
    chosen.push_back(matrix_row(a, i));
    if (rank_of(chosen, d) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis_rows.size() != d) throw Error("double description: constraint matrix lacks full column rank");

  // Initial simplicial cone: the columns of the inverse of the chosen rows.
  RatMatrix aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = a(basis_rows[i], j);
    aug(i, d + i) = 1;
  }
  RatMatrix inv = rref(aug);
  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = inv(i, d + j);
    DdRay r{scaled_to_primitive(col), std::vector<bool>(m, false)};
    for (std::size_t i : basis_rows) r.tight[i] = dot(matrix_row(a, i), r.v) == 0;
    rays.push_back(std::move(r));
  }

  std::vector<bool> is_basis_row(m, false);
  for (std::size_t i : basis_rows) is_basis_row[i] = true;

  for (std::size_t k = 0; k < m; ++k) {
    if (is_basis_row[k]) continue;
    const IntVector row = matrix_row(a, k);
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(row, rays[r].v);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
    }
    std::vector<DdRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      DdRay kept = rays[r];
      kept.tight[k] = val[r] == 0;
      next.push_back(std::move(kept));
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        std::vector<bool> common(m);
        for (std::size_t i = 0; i < m; ++i) common[i] = rays[p].tight[i] && rays[n].tight[i];
        if (d >= 2 && count_true(common) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (subset_of(common, rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = val[p] * rays[n].v - val[n] * rays[p].v;
        DdRay fresh{primitive(v), common};
        fresh.tight[k] = true;
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  sort_unique(out);
  return out;
}

std::vector<IntVector> orthant_section_rays(const Subspace& w) {
  const std::size_t n = w.ambient();
  const std::size_t d = w.dim();
  if (d == 0) return {};
  // x = B^T y with B the basis rows; constraints x_i >= 0.
  IntMatrix a(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = w.basis()[j][i];
  std::vector<IntVector> out;
  for (const auto& y : extreme_rays_of_inequalities(a)) {
    IntVector x(n);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * w.basis()[j][i];
    out.push_back(primitive(x));
  }
  sort_unique(out);
  return out;
}

Cone zero_cone(std::size_t ambient) {
  Cone c;
  c.span_ = Subspace::zero(ambient);
  return c;
}

Cone cone_from_generators(std::span<const IntVector> gens) {
  if (gens.empty()) throw Error("cone_from_generators: no generators");
  const std::size_t n = gens.front().rank();
  Cone c = zero_cone(n);
  for (const auto& g : gens) {
    if (g.rank() != n) throw Error("cone_from_generators: generators must share the ambient rank");
    if (!g.is_nonnegative()) throw Error("generators must be in the nonnegative orthant");
    if (!g.is_zero()) c.generators_.push_back(g);
  }
  sort_unique(c.generators_);
  c.span_ = span(n, c.generators_);
  const std::size_t d = c.span_.dim();
  if (d == 0) return c;

  // Facets are the extreme rays of the dual cone, expressed in span coordinates.
  std::vector<IntVector> directions;
  for (const auto& g : c.generators_) directions.push_back(primitive(g));
  sort_unique(directions);
  const auto& basis = c.span_.basis();
  IntMatrix a(directions.size(), d);
  for (std::size_t i = 0; i < directions.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = dot(basis[j], directions[i]);
  for (const auto& y : extreme_rays_of_inequalities(a)) {
    IntVector normal(n);
    for (std::size_t j = 0; j < d; ++j) normal += y[j] * basis[j];
    c.normals_.push_back(primitive(normal));
  }
  sort_unique(c.normals_);

  for (const auto& g : directions) {
    std::vector<IntVector> tight;
    for (const auto& normal : c.normals_)
      if (dot(normal, g) == 0) tight.push_back(normal);
    if (rank_of(tight, n) + 1 == d) c.rays_.push_back(g);
  }
  sort_unique(c.rays_);
  return c;
}

bool Cone::contains(const IntVector& x) const {
  if (!span_.contains(x)) return false;
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const IntVector& c) { return dot(c, x) >= 0; });
}

bool contains(const Cone& cone, const IntVector& x) { return cone.contains(x); }

IntVector Face::sample_point() const {
  IntVector s(support.ambient());
  for (const auto& r : closed_face.extreme_rays()) s += r;
  return s;
}

bool ri_contains(const Face& face, const IntVector& x) {
  if (face.dim == 0) return x.is_zero();
  if (!face.support.contains(x)) return false;
  return std::all_of(face.strict_normals.begin(), face.strict_normals.end(),
                     [&](const IntVector& c) { return dot(c, x) > 0; });
}

FaceDecomposition face_decomposition(const Cone& cone) {
  const auto& rays = cone.extreme_rays();
  const auto& normals = cone.facet_normals();
  const std::size_t n = cone.ambient();

  // Faces are identified by the set of extreme rays they contain; walk down
  // the lattice by intersecting with one more facet at a time.
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> all(rays.size(), true);
  queue.push_back(all);
  seen.insert(all);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto current = queue[q];
    for (const auto& c : normals) {
      std::vector<bool> sub(rays.size(), false);
      bool shrinks = false;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (!current[r]) continue;
        if (dot(c, rays[r]) == 0)
          sub[r] = true;
        else
          shrinks = true;
      }
      if (!shrinks) continue;
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  if (cone.dim() == 0) queue.assign(1, std::vector<bool>{});

  FaceDecomposition out;
  out.cone = cone;
  for (const auto& members : queue) {
    Face f;
    std::vector<IntVector> face_rays;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (members[r]) face_rays.push_back(rays[r]);
    f.support = span(n, face_rays);
    f.dim = f.support.dim();
    f.closed_face = face_rays.empty() ? zero_cone(n) : cone_from_generators(face_rays);
    f.zero_set.assign(normals.size(), false);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      bool vanishes = std::all_of(face_rays.begin(), face_rays.end(),
                                  [&](const IntVector& r) { return dot(normals[i], r) == 0; });
      f.zero_set[i] = vanishes;
      if (!vanishes) f.strict_normals.push_back(normals[i]);
    }
    out.faces.push_back(std::move(f));
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.support < b.support;
  });
  for (std::size_t i = 0; i < out.faces.size(); ++i) out.faces[i].id = i;
  return out;
}

const Face& classify_point(const FaceDecomposition& decomp, const IntVector& x) {
  if (!decomp.cone.contains(x)) throw Error("point outside cone");
  const auto& normals = decomp.cone.facet_normals();
  std::vector<bool> tight(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) tight[i] = dot(normals[i], x) == 0;
  for (const auto& f : decomp.faces)
    if (f.zero_set == tight) return f;
  throw Error("classify_point: no face matches the tight set (inconsistent decomposition)");
}

}  // namespace tors
