#include "tors/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tors::oracle {

namespace {

using Wide = __int128;
using WideMatrix = std::vector<std::vector<Wide>>;

Wide narrow(const Integer& x) {
  if (!x.fits_slong_p()) throw Error("oracle: coordinate too large");
  return x.get_si();
}

std::vector<Wide> narrow(const IntVector& v) {
  std::vector<Wide> out;
  for (const auto& x : v) out.push_back(narrow(x));
  return out;
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

// Bareiss elimination; returns the determinant of a square matrix.
Wide det(WideMatrix m) {
  const std::size_t n = m.size();
  Wide sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(WideMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Wide f = m[i][c], g = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
      Wide content = 0;
      for (auto x : m[i]) content = wide_gcd(content, x);
      if (content > 1)
        for (auto& x : m[i]) x /= content;
    }
    ++r;
  }
  return r;
}

// Row subsets of size r, in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  while (k > 0) {
    --k;
    if (c[k] < n - c.size() + k) {
      ++c[k];
      for (std::size_t j = k + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Coordinates of y in the basis `cols` (columns, linearly independent), as
// numerators over the positive common denominator `den`. Empty when y is
// outside their span.
std::optional<std::vector<Wide>> coordinates(const std::vector<std::vector<Wide>>& cols,
                                             const std::vector<Wide>& y, const std::vector<std::size_t>& rows,
                                             Wide den) {
  const std::size_t r = cols.size();
  std::vector<Wide> num(r);
  for (std::size_t i = 0; i < r; ++i) {
    WideMatrix m(r, std::vector<Wide>(r));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) m[a][b] = (b == i) ? y[rows[a]] : cols[b][rows[a]];
    num[i] = det(std::move(m));
  }
  if (den < 0) {
    for (auto& x : num) x = -x;
    den = -den;
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    Wide s = 0;
    for (std::size_t i = 0; i < r; ++i) s += cols[i][j] * num[i];
    if (s != den * y[j]) return std::nullopt;
  }
  return num;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return out;
}

std::size_t prime_divisor_count(const FiniteSemiring& s, Elem a, std::uint64_t prime_bound) {
  const auto primes = primes_up_to(prime_bound);
  std::vector<bool> hit(primes.size(), false);
  for (Elem c = 0; c < s.order(); ++c) {
    // seq[n-1] = n·c until the first repeat
    std::vector<Elem> seq{c};
    std::vector<long> first(s.order(), -1);
    first[c] = 0;
    while (true) {
      const Elem next = s.add(seq.back(), c);
      if (first[next] >= 0) {
        const std::uint64_t start = static_cast<std::uint64_t>(first[next]);
        const std::uint64_t cycle = seq.size() - start;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          const std::uint64_t n = primes[i] - 1;
          const Elem v = n < seq.size() ? seq[n] : seq[start + (n - start) % cycle];
          if (v == a) hit[i] = true;
        }
        break;
      }
      first[next] = static_cast<long>(seq.size());
      seq.push_back(next);
    }
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

bool sad_by_sampling(const FiniteSemiring& s, Elem a, std::uint64_t prime_bound, std::size_t threshold) {
  return prime_divisor_count(s, a, prime_bound) >= threshold;
}

std::vector<IntVector> box_points(std::size_t rank, long bound) {
  std::vector<IntVector> out;
  std::vector<long> c(rank, 0);
  while (true) {
    out.emplace_back(std::vector<Integer>(c.begin(), c.end()));
    std::size_t i = 0;
    while (i < rank && c[i] == bound) c[i++] = 0;
    if (i == rank) break;
    ++c[i];
  }
  return out;
}

std::set<IntVector> box_combinations(const std::vector<IntVector>& gens, std::size_t rank, long bound) {
  std::set<IntVector> seen{IntVector(rank)};
  std::vector<IntVector> frontier{IntVector(rank)};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        IntVector y = x + g;
        bool inside = true;
        for (const auto& v : y) inside = inside && v <= bound;
        if (inside && seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

bool cone_step(const std::vector<IntVector>& gens, const IntVector& x, const IntVector& d) {
  if (gens.size() > 20) throw Error("oracle: too many generators");
  const std::size_t n = x.rank();
  const auto xw = narrow(x), dw = narrow(d);
  std::vector<std::vector<Wide>> g;
  for (const auto& v : gens) g.push_back(narrow(v));
  if (x.is_zero() && d.is_zero()) return true;

  for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
    std::vector<std::vector<Wide>> cols;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mask & (1u << i)) cols.push_back(g[i]);
    const std::size_t r = cols.size();
    if (r > n) continue;
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    Wide den = 0;
    do {
      WideMatrix m(r, std::vector<Wide>(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) m[a][b] = cols[b][rows[a]];
      den = det(std::move(m));
    } while (den == 0 && next_combination(rows, n));
    if (den == 0) continue;  // dependent subset
    const auto lx = coordinates(cols, xw, rows, den);
    if (!lx) continue;
    const auto ld = coordinates(cols, dw, rows, den);
    if (!ld) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = (*lx)[i] > 0 || ((*lx)[i] == 0 && (*ld)[i] <= 0);
    if (ok) return true;
  }
  return false;
}

bool in_cone(const std::vector<IntVector>& gens, const IntVector& x) {
  return cone_step(gens, x, IntVector(x.rank()));
}

bool in_rational_span(const std::vector<IntVector>& gens, const IntVector& x) {
  WideMatrix m;
  for (const auto& g : gens) m.push_back(narrow(g));
  const std::size_t r = rank(m);
  m.push_back(narrow(x));
  return rank(m) == r;
}

std::vector<std::size_t> minimal_face(const std::vector<IntVector>& gens, const IntVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (cone_step(gens, x, gens[i])) out.push_back(i);
  return out;
}

bool irreducible_in_saturation(const std::vector<IntVector>& gens, const IntVector& x) {
  if (x.is_zero() || !in_cone(gens, x)) return false;
  std::vector<long> hi;
  for (const auto& v : x) hi.push_back(v.get_si());
  std::vector<long> c(x.rank(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < c.size() && c[i] == hi[i]) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
    const IntVector y(std::vector<Integer>(c.begin(), c.end()));
    if (y == x) continue;
    if (in_cone(gens, y) && in_cone(gens, x - y)) return false;
  }
  return true;
}

std::optional<long> kmin_incremental(const std::vector<IntVector>& gens, const IntVector& face_point,
                                     const IntVector& alpha, const IntVector& gamma, long cap) {
  const auto face = minimal_face(gens, face_point);
  for (long k = 1; k <= cap; ++k) {
    const IntVector y = Integer(k) * alpha + gamma;
    if (y.is_nonnegative() && in_cone(gens, y) && minimal_face(gens, y) == face) return k;
  }
  return std::nullopt;
}

std::size_t count_semirings(std::size_t order) {
  if (order == 0 || order > 3) throw Error("oracle: semiring count supports orders 1 to 3");
  const std::size_t m = order, cells = m * m;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= m;
  std::vector<std::vector<std::size_t>> semigroups;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t(cells);
    for (std::size_t i = 0, c = code; i < cells; ++i, c /= m) t[i] = c % m;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b) {
        ok = t[a * m + b] == t[b * m + a];
        for (std::size_t c = 0; c < m && ok; ++c) ok = t[t[a * m + b] * m + c] == t[a * m + t[b * m + c]];
      }
    if (ok) semigroups.push_back(std::move(t));
  }
  std::size_t count = 0;
  for (const auto& add : semigroups)
    for (const auto& mul : semigroups) {
      bool ok = true;
      for (std::size_t a = 0; a < m && ok; ++a)
        for (std::size_t b = 0; b < m && ok; ++b)
          for (std::size_t c = 0; c < m && ok; ++c)
            ok = mul[a * m + add[b * m + c]] == add[mul[a * m + b] * m + mul[a * m + c]];
      count += ok;
    }
  return count;
}

std::size_t grothendieck_order(const FiniteSemiring& s) {
  std::size_t count = 0;
  for (Elem z = 0; z < s.order(); ++z) {
    bool in_all = true;
    for (Elem a = 0; a < s.order() && in_all; ++a) {
      bool hit = false;
      for (Elem t = 0; t < s.order() && !hit; ++t) hit = s.add(a, t) == z;
      in_all = hit;
    }
    count += in_all;
  }
  return count;
}

bool regular_by_search(const FiniteSemiring& s, Elem a) {
  for (Elem b = 0; b < s.order(); ++b)
    if (s.add(s.add(a, b), a) == a) return true;
  return false;
}

TwoSidedReport two_sided_check(const std::vector<Fraction>& gens, const QSubringDescriptor& d, long bound) {
  TwoSidedReport rep;
  const ClosureOracle orc = closure_oracle(gens, bound);
  const Integer d0 = orc.step().den(), g0 = abs(orc.step().num());
  auto small = [&](const Integer& v) { return v.fits_slong_p() ? v.get_si() : bound + 1; };
  const long n = small(d.n), g = small(g0);

  for (long q = 1; q <= bound; ++q) {
    const bool smooth = d.primes.is_smooth(q);
    const bool reached = mpz_divisible_ui_p(d0.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
    for (long a = -bound; a <= bound; ++a) {
      if (std::gcd(a, q) != 1) continue;
      ++rep.checked;
      const bool mem = smooth && a % n == 0;
      const bool in_orc = reached && g != 0 && a % g == 0;
      if (in_orc && !mem)
        rep.violations.push_back("closure contains " + std::to_string(a) + "/" + std::to_string(q) +
                                 " but the descriptor rejects it");
      else if (mem && reached && !in_orc)
        rep.violations.push_back("descriptor accepts " + std::to_string(a) + "/" + std::to_string(q) +
                                 " with a reached denominator but the closure misses it");
      if (rep.violations.size() >= 10) return rep;
    }
  }
  for (const auto& p : d.primes.primes())
    if (mpz_divisible_p(d0.get_mpz_t(), p.get_mpz_t()) == 0)
      rep.violations.push_back("closure never reaches the prime " + p.get_str());
  return rep;
}

}  // namespace tors::oracle
