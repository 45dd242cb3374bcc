#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tors/linalg.hpp"
#include "tors/polynomial.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(TORS_SOURCE_DIR) + "/data/" + name; }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline tors::IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::vector<tors::Integer> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(uniform(rng, lo, hi));
  return tors::IntVector(std::move(c));
}

// Laplace expansion.
inline tors::Integer det(const std::vector<std::vector<tors::Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  tors::Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<tors::Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<tors::Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    d += ((j % 2) ? -1 : 1) * m[0][j] * det(minor);
  }
  return d;
}

// Coordinates of y in the independent columns `cols` over Q, by Gauss-Jordan
// on the augmented system; empty if y is outside their span.
inline std::optional<std::vector<tors::Rational>> solve_rational(const std::vector<tors::IntVector>& cols,
                                                                 const tors::IntVector& y) {
  const std::size_t n = y.rank(), r = cols.size();
  std::vector<std::vector<tors::Rational>> a(n, std::vector<tors::Rational>(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = cols[j][i];
    a[i][r] = y[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < r && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const tors::Rational f = a[i][c] / a[row][c];
      for (std::size_t k = c; k <= r; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][r] != 0) return std::nullopt;
  std::vector<tors::Rational> x(r, 0);
  for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = a[i][r] / a[i][pivot_col[i]];
  return x;
}

inline tors::Integer evaluate(const tors::SparsePoly& f, const std::vector<tors::Integer>& at) {
  tors::Integer total = 0;
  for (const auto& [e, c] : f.terms()) {
    tors::Integer term = c;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      tors::Integer p;
      mpz_pow_ui(p.get_mpz_t(), at[i].get_mpz_t(), e[i].get_ui());
      term *= p;
    }
    total += term;
  }
  return total;
}

}  // namespace testing
