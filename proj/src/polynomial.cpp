#include "tors/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace tors {

namespace {

CoeffDomain join(const SparsePoly& f, const SparsePoly& g) {
  if (f.rank() != g.rank()) throw Error("polynomial rank mismatch");
  return f.domain() == CoeffDomain::naturals && g.domain() == CoeffDomain::naturals
             ? CoeffDomain::naturals
             : CoeffDomain::integers;
}

void require_domain(const SparsePoly& f) {
  if (f.domain() != CoeffDomain::naturals) return;
  for (const auto& [e, c] : f.terms())
    if (c < 0) throw Error("negative coefficient in a polynomial over N at x^" + e.to_string());
}

Integer parse_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](unsigned char ch) { return std::isdigit(ch); }))
    throw Error("malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

IntVector parse_exponent(const std::string& s, std::size_t rank) {
  // "(e1,...,en)"
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error("malformed exponent '" + s + "'");
  std::vector<Integer> coords;
  std::string inner = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    coords.push_back(parse_integer(inner.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (coords.size() != rank)
    throw Error("exponent " + s + " has rank " + std::to_string(coords.size()) + ", expected " +
                std::to_string(rank));
  IntVector e(std::move(coords));
  if (!e.is_nonnegative()) throw Error("negative exponent " + s);
  return e;
}

// Calls fn on every lattice point of [0, bound], origin first.
template <typename Fn>
bool for_each_below(const IntVector& bound, Fn&& fn) {
  IntVector x(bound.rank());
  while (true) {
    if (fn(x)) return true;
    std::size_t i = 0;
    for (; i < x.rank(); ++i) {
      if (x[i] < bound[i]) {
        x[i] += 1;
        break;
      }
      x[i] = 0;
    }
    if (i == x.rank()) return false;
  }
}

}  // namespace

SparsePoly SparsePoly::monomial(const IntVector& e, const Integer& coeff, CoeffDomain domain) {
  SparsePoly f(e.rank(), domain);
  f.add_term(e, coeff);
  require_domain(f);
  return f;
}

SparsePoly SparsePoly::constant(std::size_t rank, const Integer& c, CoeffDomain domain) {
  return monomial(IntVector(rank), c, domain);
}

Integer SparsePoly::coefficient(const IntVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePoly::add_term(const IntVector& e, const Integer& c) {
  if (e.rank() != rank_) throw Error("term rank mismatch");
  if (!e.is_nonnegative()) throw Error("negative exponent " + e.to_string());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::with_domain(CoeffDomain domain) const {
  SparsePoly f = *this;
  f.domain_ = domain;
  require_domain(f);
  return f;
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly out = f.with_domain(join(f, g));
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

SparsePoly sub(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly out = f.with_domain(CoeffDomain::integers);
  for (const auto& [e, c] : g.terms()) out.add_term(e, -c);
  return out;
}

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly out(f.rank(), join(f, g));
  for (const auto& [e1, c1] : f.terms())
    for (const auto& [e2, c2] : g.terms()) out.add_term(e1 + e2, c1 * c2);
  return out;
}

SparsePoly scale(const Integer& k, const SparsePoly& f) {
  if (f.domain() == CoeffDomain::naturals && k < 1)
    throw Error("scale: a polynomial over N needs a factor k >= 1");
  SparsePoly out(f.rank(), f.domain());
  for (const auto& [e, c] : f.terms()) out.add_term(e, k * c);
  return out;
}

bool support_in(const AffineMonoid& m, const SparsePoly& f) {
  if (f.rank() != m.ambient()) throw Error("support_in: rank mismatch");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return member_generated(m, t.first); });
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*x^" + e.to_string();
  }
  return out;
}

SparsePoly parse_poly(std::string_view text, std::size_t rank, CoeffDomain domain) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty polynomial");

  // Split into signed terms at top-level '+' and '-'.
  std::vector<std::string> pieces;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool sign_starts_term = depth == 0 && i > 0 && s[i - 1] != '+' && s[i - 1] != '*';
    if (depth == 0 && ch == '+') {
      pieces.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == '-' && sign_starts_term) {
      pieces.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  pieces.push_back(cur);

  SparsePoly f(rank, CoeffDomain::integers);
  for (const auto& term : pieces) {
    if (term.empty()) throw Error("malformed polynomial '" + std::string(text) + "'");
    const auto x = term.find("x^");
    if (x == std::string::npos) {
      f.add_term(IntVector(rank), parse_integer(term));
      continue;
    }
    Integer coeff = 1;
    std::string prefix = term.substr(0, x);
    if (prefix == "-") {
      coeff = -1;
    } else if (!prefix.empty()) {
      if (prefix.back() != '*') throw Error("malformed polynomial term '" + term + "'");
      coeff = parse_integer(prefix.substr(0, prefix.size() - 1));
    }
    f.add_term(parse_exponent(term.substr(x + 2), rank), coeff);
  }
  return f.with_domain(domain);
}

ShiftResult shift_into(const SparsePoly& f, const IntVector& alpha, const DecompPiece& p,
                       const AffineMonoid& c) {
  if (f.rank() != c.ambient() || alpha.rank() != c.ambient())
    throw Error("shift_into: rank mismatch");
  if (alpha.is_zero() || !p.contains(alpha)) throw Error("shift_into: alpha must lie in D \\ {0}");

  ShiftResult out;
  long bound = 1;
  for (const auto& [e, coeff] : f.terms()) {
    std::optional<std::pair<IntVector, IntVector>> split;
    for_each_below(e, [&](const IntVector& gamma) {
      if (!p.in_dtilde(gamma) || !member_generated(c, e - gamma)) return false;
      split.emplace(e - gamma, gamma);
      return true;
    });
    if (!split) throw Error("not in C+D~: x^" + e.to_string());
    bound = std::max(bound, kmin(p, alpha, split->second));
    out.splits.push_back(*split);
  }

  for (long k = 1; k <= bound; ++k) {
    const IntVector shift = Integer(k) * alpha;
    const bool lands = std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
      return member_generated(c, shift + t.first);
    });
    if (lands) {
      out.k = k;
      out.shifted = mul(SparsePoly::monomial(shift, 1, f.domain()), f);
      return out;
    }
  }
  throw Error("shift_into: shifted support left C at the kmin bound (C is not saturated)");
}

Ideal make_ideal(AffineMonoid universe, std::vector<SparsePoly> generators) {
  Ideal ideal{std::move(universe), {}};
  for (auto& g : generators) {
    if (g.rank() != ideal.universe.ambient()) throw Error("ideal generator has the wrong rank");
    if (!support_in(ideal.universe, g))
      throw Error("ideal generator " + to_string(g) + " is not supported in the monoid");
    ideal.generators.push_back(g.with_domain(CoeffDomain::integers));
  }
  return ideal;
}

CheckResult check_certificate(const MembershipCertificate& cert, const Ideal& ideal) {
  const std::size_t n = ideal.universe.ambient();
  if (cert.target.rank() != n) return {false, "target has the wrong rank"};
  SparsePoly sum(n);
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
    const auto& cf = cert.cofactors[i];
    if (cf.generator >= ideal.generators.size())
      return {false, "cofactor " + std::to_string(i) + " names generator " +
                         std::to_string(cf.generator) + ", which does not exist"};
    if (cf.f.rank() != n) return {false, "cofactor " + std::to_string(i) + " has the wrong rank"};
    if (!support_in(ideal.universe, cf.f))
      return {false, "cofactor " + std::to_string(i) + " is not supported in the monoid"};
    sum = add(sum, mul(cf.f.with_domain(CoeffDomain::integers), ideal.generators[cf.generator]));
  }
  if (!(sum == cert.target))
    return {false, "expansion " + to_string(sum) + " differs from target " + to_string(cert.target)};
  return {true, ""};
}

Decision<MembershipCertificate> bounded_ideal_membership(const SparsePoly& f, const Ideal& ideal,
                                                         std::span<const IntVector> cap) {
  const std::size_t n = ideal.universe.ambient();
  if (f.rank() != n) throw Error("bounded_ideal_membership: rank mismatch");
  MembershipCertificate cert{f.with_domain(CoeffDomain::integers), {}};
  if (f.is_zero()) return cert;

  std::vector<IntVector> exps;
  for (const auto& e : cap) {
    if (e.rank() != n) throw Error("bounded_ideal_membership: cap exponent has the wrong rank");
    if (member_generated(ideal.universe, e)) exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  // Unknown (j, e): coefficient of x^e in the cofactor of generator j.
  const std::size_t gens = ideal.generators.size();
  std::map<IntVector, std::size_t> row_of;
  for (const auto& [e, c] : f.terms()) row_of.emplace(e, 0);
  for (const auto& h : ideal.generators)
    for (const auto& [he, hc] : h.terms())
      for (const auto& e : exps) row_of.emplace(e + he, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;

  IntMatrix a(row_of.size(), gens * exps.size());
  for (std::size_t j = 0; j < gens; ++j)
    for (std::size_t k = 0; k < exps.size(); ++k)
      for (const auto& [he, hc] : ideal.generators[j].terms())
        a(row_of.at(exps[k] + he), j * exps.size() + k) += hc;
  IntVector b(row_of.size());
  for (const auto& [e, c] : f.terms()) b[row_of.at(e)] = c;

  const auto x = a.cols() == 0 ? std::nullopt : solve_integer(a, b);
  if (!x) return Undecided{"no cofactors supported in the cap"};
  for (std::size_t j = 0; j < gens; ++j) {
    SparsePoly cf(n);
    for (std::size_t k = 0; k < exps.size(); ++k) cf.add_term(exps[k], (*x)[j * exps.size() + k]);
    if (!cf.is_zero()) cert.cofactors.push_back({std::move(cf), j});
  }
  if (auto check = check_certificate(cert, ideal); !check.ok)
    throw Error("bounded_ideal_membership produced an invalid certificate: " + check.diagnostic);
  return cert;
}

CheckResult check_nt_witness(const NTWitness& w, const Ideal& ideal) {
  const std::size_t n = ideal.universe.ambient();
  if (w.alpha.rank() != n) return {false, "alpha has the wrong rank"};
  if (w.q < 1) return {false, "multiplier q must be a positive integer"};
  if (w.ell < 1) return {false, "power l must be a positive integer"};
  if (!member_generated(ideal.universe, w.alpha)) return {false, "alpha is not in the monoid"};
  const auto expected = SparsePoly::monomial(Integer(w.ell) * w.alpha, w.q);
  if (!(w.certificate.target == expected))
    return {false, "certificate target " + to_string(w.certificate.target) + " is not " +
                       to_string(expected)};
  return check_certificate(w.certificate, ideal);
}

}  // namespace tors
