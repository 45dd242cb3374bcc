#pragma once

// Exact integer and rational linear algebra: lattice vectors, dense matrices,
// Hermite normal form, integer kernels and canonical rational subspaces.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tors/error.hpp"

namespace tors {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Z^n. Coordinates are arbitrary precision; the rank is fixed at
/// construction and every binary operation checks that ranks agree.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t rank) : coords_(rank, Integer(0)) {}
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords);

  static IntVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  /// Sum of coordinates.
  Integer degree() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const Integer& k);

  friend bool operator==(const IntVector& a, const IntVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order; shorter vectors first when ranks differ.
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b);

  /// "(1,2,3)"
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator-(IntVector a);
IntVector operator*(const Integer& k, IntVector a);

void require_same_rank(const IntVector& a, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);
/// gcd of the entries (0 for the zero vector).
Integer content(const IntVector& v);
/// v divided by the gcd of its entries. Throws on the zero vector.
IntVector primitive(const IntVector& v);
/// a <= b in every coordinate.
bool componentwise_leq(const IntVector& a, const IntVector& b);

/// Row-major dense matrix over an exact scalar type.
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  /// row_i += k * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Scalar& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  bool row_is_zero(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(i, c) != 0) return false;
    return true;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

/// Matrix whose rows are the given vectors (all of rank `cols`).
IntMatrix matrix_from_rows(std::span<const IntVector> rows, std::size_t cols);
IntVector matrix_row(const IntMatrix& m, std::size_t i);
IntVector operator*(const IntMatrix& m, const IntVector& v);

struct HermiteForm {
  IntMatrix h;  ///< row-style Hermite normal form, zero rows last
  IntMatrix u;  ///< unimodular, h = u * m
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot), entries below zero.
HermiteForm hnf(const IntMatrix& m);

/// Lattice basis of {x in Z^cols : a x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Some x in Z^cols with a x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Reduced row echelon form over Q; nonzero rows only.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank_of(std::span<const IntVector> vectors, std::size_t ambient);

/// A rational subspace of Q^n in canonical form: the reduced row echelon basis
/// with each row scaled to a primitive integer vector. Equal subspaces have
/// identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  bool contains(const IntVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  friend Subspace span(std::size_t ambient, std::span<const IntVector> vectors);
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(std::size_t ambient, std::span<const IntVector> vectors);
bool in_span(const IntVector& v, const Subspace& w);

/// Lattice basis of W ∩ Z^n (HNF-reduced).
std::vector<IntVector> lattice_intersection(const Subspace& w);

}  // namespace tors
