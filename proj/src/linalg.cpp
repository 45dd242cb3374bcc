#include "tors/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace tors {

IntVector::IntVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

IntVector IntVector::unit(std::size_t rank, std::size_t i) {
  IntVector v(rank);
  v[i] = 1;
  return v;
}

bool IntVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool IntVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c >= 0; });
}

Integer IntVector::degree() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

IntVector& IntVector::operator+=(const IntVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
IntVector operator-(IntVector a) { return a *= Integer(-1); }
IntVector operator*(const Integer& k, IntVector a) { return a *= k; }

void require_same_rank(const IntVector& a, const IntVector& b) {
  if (a.rank() != b.rank())
    throw Error("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_rank(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error("no primitive form: zero vector");
  std::vector<Integer> out;
  out.reserve(v.rank());
  for (const auto& c : v) out.emplace_back(c / g);
  return IntVector(std::move(out));
}

bool componentwise_leq(const IntVector& a, const IntVector& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntMatrix matrix_from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols) throw Error("matrix_from_rows: rank mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector matrix_row(const IntMatrix& m, std::size_t i) {
  IntVector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
  return r;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.rank()) throw Error("matrix-vector product: dimension mismatch");
  IntVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows());
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  Integer q;
  for (std::size_t col = 0; col < h.cols() && r < rows; ++col) {
    // Euclid on the column: move the smallest nonzero entry up, reduce the rest.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        if (best == rows || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
      if (q == 0) continue;
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  // u * a^T = h; the rows of u that hit zero rows of h span the kernel.
  HermiteForm f = hnf(a.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = f.rank; i < f.h.rows(); ++i) basis.push_back(matrix_row(f.u, i));
  return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.rank() != a.rows()) throw Error("solve_integer: dimension mismatch");
  // x^T a^T = b^T; write x^T = y^T u with u a^T = h and solve y^T h = b^T.
  HermiteForm f = hnf(a.transpose());
  const std::size_t n = a.cols();
  std::vector<Integer> y(n, Integer(0));
  for (std::size_t i = 0; i < f.rank; ++i) {
    const std::size_t p = f.pivots[i];
    Integer rhs = b[p];
    for (std::size_t j = 0; j < i; ++j) rhs -= y[j] * f.h(j, p);
    if (!mpz_divisible_p(rhs.get_mpz_t(), f.h(i, p).get_mpz_t())) return std::nullopt;
    y[i] = rhs / f.h(i, p);
  }
  for (std::size_t c = 0; c < f.h.cols(); ++c) {
    Integer s = 0;
    for (std::size_t i = 0; i < f.rank; ++i) s += y[i] * f.h(i, c);
    if (s != b[c]) return std::nullopt;
  }
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * f.u(i, j);
  return x;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      Rational f = -m(i, col);
      m.add_row_multiple(i, r, f);
    }
    piv.push_back(col);
    ++r;
  }
  RatMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(i, c);
  if (pivots) *pivots = std::move(piv);
  return out;
}

namespace {

RatMatrix rational_rows(std::span<const IntVector> vectors, std::size_t ambient) {
  RatMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].rank() != ambient) throw Error("span: vectors must share the ambient rank");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

}  // namespace

std::size_t rank_of(std::span<const IntVector> vectors, std::size_t ambient) {
  return rref(rational_rows(vectors, ambient)).rows();
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

bool Subspace::contains(const IntVector& v) const {
  if (v.rank() != ambient_) throw Error("in_span: rank mismatch");
  std::vector<Rational> r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (r[p] == 0) continue;
    Rational f = r[p] / Rational(basis_[i][p]);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ <=> b.ambient_;
  if (a.basis_.size() != b.basis_.size()) return a.basis_.size() <=> b.basis_.size();
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    auto c = a.basis_[i] <=> b.basis_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Subspace span(std::size_t ambient, std::span<const IntVector> vectors) {
  std::vector<std::size_t> piv;
  RatMatrix e = rref(rational_rows(vectors, ambient), &piv);
  Subspace s = Subspace::zero(ambient);
  s.pivots_ = std::move(piv);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < ambient; ++j) den = lcm(den, Integer(e(i, j).get_den()));
    IntVector row(ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
      Rational x = e(i, j) * den;
      row[j] = x.get_num();
    }
    s.basis_.push_back(primitive(row));
  }
  return s;
}

bool in_span(const IntVector& v, const Subspace& w) { return w.contains(v); }

std::vector<IntVector> lattice_intersection(const Subspace& w) {
  const std::size_t n = w.ambient();
  if (w.dim() == 0) return {};
  std::vector<IntVector> generators;
  if (w.dim() == n) {
    for (std::size_t i = 0; i < n; ++i) generators.push_back(IntVector::unit(n, i));
  } else {
    // W ∩ Z^n is the integer kernel of an integer basis of the orthogonal complement.
    auto normals = integer_kernel(matrix_from_rows(w.basis(), n));
    generators = integer_kernel(matrix_from_rows(normals, n));
  }
  HermiteForm f = hnf(matrix_from_rows(generators, n));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < f.rank; ++i) basis.push_back(matrix_row(f.h, i));
  return basis;
}

}  // namespace tors
