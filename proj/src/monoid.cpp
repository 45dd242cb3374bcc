#include "tors/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace tors {

namespace {

constexpr std::uint64_t kMaxBoxVolume = 50'000'000;

// Lattice box [0, upper] with a flat row-major index.
struct Box {
  std::vector<std::int64_t> upper;
  std::vector<std::uint64_t> stride;
  std::uint64_t volume = 1;

  explicit Box(const IntVector& bound) {
    const std::size_t n = bound.rank();
    upper.resize(n);
    stride.resize(n);
    for (std::size_t i = n; i-- > 0;) {
      if (!bound[i].fits_slong_p() || bound[i] < 0) throw Error("box bound out of range");
      upper[i] = bound[i].get_si();
      stride[i] = volume;
      const std::uint64_t side = static_cast<std::uint64_t>(upper[i]) + 1;
      if (volume > kMaxBoxVolume / side) throw Error("lattice box too large for exhaustive search");
      volume *= side;
    }
  }

  // Offset of a vector that fits in the box, or nullopt.
  std::optional<std::uint64_t> offset(const IntVector& v) const {
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (v[i] < 0 || v[i] > upper[i]) return std::nullopt;
      off += static_cast<std::uint64_t>(v[i].get_si()) * stride[i];
    }
    return off;
  }

  IntVector point(std::uint64_t idx) const {
    IntVector v(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      v[i] = static_cast<long>(idx / stride[i]);
      idx %= stride[i];
    }
    return v;
  }
};

}  // namespace

AffineMonoid::AffineMonoid(std::size_t ambient, std::span<const IntVector> generators)
    : ambient_(ambient) {
  for (const auto& g : generators) {
    if (g.rank() != ambient) throw Error("monoid generator has the wrong rank");
    if (!g.is_nonnegative()) throw Error("generators must be in the nonnegative orthant");
    if (!g.is_zero()) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  cone_ = generators_.empty() ? zero_cone(ambient) : cone_from_generators(generators_);
}

std::optional<std::vector<Integer>> factorize(const AffineMonoid& m, const IntVector& alpha) {
  if (alpha.rank() != m.ambient()) throw Error("member_generated: rank mismatch");
  if (!alpha.is_nonnegative()) return std::nullopt;
  const auto& gens = m.generators();
  if (alpha.is_zero()) return std::vector<Integer>(gens.size(), Integer(0));

  Box box(alpha);
  std::vector<std::uint64_t> gen_offset;
  std::vector<std::size_t> usable;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (auto off = box.offset(gens[j])) {
      usable.push_back(j);
      gen_offset.push_back(*off);
    }
  }
  // choice[idx]: generator used last to reach idx, -1 unreachable, -2 origin.
  std::vector<std::int32_t> choice(box.volume, -1);
  choice[0] = -2;
  // Index order is lexicographic, so x - g precedes x. A generator g fits
  // below x exactly when every coordinate of x is at least that of g.
  std::vector<std::int64_t> coords(box.upper.size(), 0);
  for (std::uint64_t idx = 1; idx < box.volume; ++idx) {
    for (std::size_t i = coords.size(); i-- > 0;) {
      if (coords[i] < box.upper[i]) {
        ++coords[i];
        break;
      }
      coords[i] = 0;
    }
    for (std::size_t u = 0; u < usable.size(); ++u) {
      const IntVector& g = gens[usable[u]];
      bool fits = true;
      for (std::size_t i = 0; i < coords.size() && fits; ++i) fits = g[i] <= coords[i];
      if (fits && choice[idx - gen_offset[u]] != -1) {
        choice[idx] = static_cast<std::int32_t>(usable[u]);
        break;
      }
    }
  }
  const std::uint64_t target = box.volume - 1;
  if (choice[target] == -1) return std::nullopt;
  std::vector<Integer> mult(gens.size(), Integer(0));
  std::uint64_t idx = target;
  while (choice[idx] != -2) {
    const auto j = static_cast<std::size_t>(choice[idx]);
    mult[j] += 1;
    idx -= *box.offset(gens[j]);
  }
  return mult;
}

bool member_generated(const AffineMonoid& m, const IntVector& alpha) {
  return factorize(m, alpha).has_value();
}

std::vector<IntVector> hilbert_basis(const Cone& cone) {
  if (cone.dim() == 0) return {};
  // Every irreducible element lies below the sum of the primitive extreme rays.
  IntVector bound(cone.ambient());
  for (const auto& r : cone.extreme_rays()) bound += r;
  Box box(bound);

  std::vector<IntVector> candidates;
  for (std::uint64_t idx = 1; idx < box.volume; ++idx) {
    IntVector x = box.point(idx);
    if (cone.contains(x)) candidates.push_back(std::move(x));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const IntVector& a, const IntVector& b) { return a.degree() < b.degree(); });

  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    const Integer deg = x.degree();
    bool reducible = false;
    for (const auto& b : basis) {
      if (b.degree() >= deg || !componentwise_leq(b, x)) continue;
      if (cone.contains(x - b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

SaturatedMonoid saturate(const AffineMonoid& m) { return SaturatedMonoid(m, hilbert_basis(m.cone())); }

SaturatedMonoid closure(const Subspace& w) {
  AffineMonoid section(w.ambient(), orthant_section_rays(w));
  return saturate(section);
}

SaturatedMonoid closure(const AffineMonoid& m) { return closure(m.span()); }

bool member_saturated(const SaturatedMonoid& s, const IntVector& alpha) {
  if (alpha.rank() != s.ambient()) throw Error("member_saturated: rank mismatch");
  return alpha.is_nonnegative() && s.cone().contains(alpha);
}

bool is_saturated(const AffineMonoid& m) {
  const auto s = saturate(m);
  return std::all_of(s.hilbert_basis().begin(), s.hilbert_basis().end(),
                     [&](const IntVector& h) { return member_generated(m, h); });
}

DecompPiece::DecompPiece(Face face, std::size_t ambient)
    : face_(std::move(face)), ambient_(ambient), lazy_(std::make_shared<Lazy>()) {}

bool DecompPiece::contains(const IntVector& alpha) const {
  if (alpha.is_zero()) return true;
  return alpha.is_nonnegative() && ri_contains(face_, alpha);
}

bool DecompPiece::in_dtilde(const IntVector& alpha) const {
  if (alpha.rank() != ambient_) throw Error("rank mismatch");
  return alpha.is_nonnegative() && face_.support.contains(alpha);
}

const SaturatedMonoid& DecompPiece::dtilde() const {
  std::call_once(lazy_->once, [this] { lazy_->value = closure(face_.support); });
  return *lazy_->value;
}

CanonicalDecomposition canonical_decomposition(const SaturatedMonoid& s) {
  CanonicalDecomposition d;
  d.monoid = s;
  d.faces = face_decomposition(s.cone());
  for (const auto& f : d.faces.faces) d.pieces.emplace_back(f, s.ambient());
  return d;
}

const DecompPiece& classify(const CanonicalDecomposition& d, const IntVector& alpha) {
  if (!member_saturated(d.monoid, alpha)) throw Error("not in monoid");
  return d.pieces[classify_point(d.faces, alpha).id];
}

const SaturatedMonoid& dtilde(const DecompPiece& p) { return p.dtilde(); }

long kmin(const DecompPiece& p, const IntVector& alpha, const IntVector& gamma) {
  if (alpha.is_zero() || !p.contains(alpha)) throw Error("kmin: alpha must lie in D \\ {0}");
  if (!p.in_dtilde(gamma)) throw Error("kmin: gamma must lie in D~");
  IntVector point = alpha + gamma;
  for (long k = 1; k <= kKminSearchCap; ++k) {
    if (p.contains(point)) return k;
    point += alpha;
  }
  throw Error("termination bound exceeded");
}

const DecompPiece& sum_escalation(const CanonicalDecomposition& d, const DecompPiece& p,
                                  const IntVector& alpha, const IntVector& beta) {
  if (alpha.is_zero() || !p.contains(alpha))
    throw Error("sum_escalation: alpha must lie in D \\ {0}");
  if (!member_saturated(d.monoid, beta)) throw Error("sum_escalation: beta must lie in the monoid");
  if (p.in_dtilde(beta)) throw Error("sum_escalation: beta must lie outside D~");
  const DecompPiece& e = classify(d, alpha + beta);
  if (e.dim() <= p.dim())
    throw Error("sum_escalation: alpha + beta did not land in a higher-dimensional piece");
  return e;
}

}  // namespace tors
