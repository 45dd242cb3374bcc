#include <algorithm>

#include "tors/semiring.hpp"

namespace tors {

namespace {

constexpr std::int32_t kNone = -1;
constexpr std::size_t kMaxNodes = 1024;

struct BudgetExhausted {};

// Nodes stand for elements of the factor; coincident nodes are merged by
// union-find. add_/mul_ are symmetric partial tables on root nodes.
class Enumerator {
 public:
  explicit Enumerator(std::size_t capacity)
      : cap_(capacity), parent_(cap_), add_(cap_ * cap_, kNone), mul_(cap_ * cap_, kNone) {}

  std::int32_t one() const { return 0; }

  std::int32_t new_node() {
    if (count_ == cap_) throw BudgetExhausted{};
    parent_[count_] = static_cast<std::int32_t>(count_);
    changed_ = true;
    return static_cast<std::int32_t>(count_++);
  }

  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::vector<std::int32_t> roots() {
    std::vector<std::int32_t> r;
    for (std::size_t i = 0; i < count_; ++i)
      if (parent_[i] == static_cast<std::int32_t>(i)) r.push_back(static_cast<std::int32_t>(i));
    return r;
  }

  std::int32_t define_add(std::int32_t a, std::int32_t b) { return define(add_, a, b); }
  std::int32_t define_mul(std::int32_t a, std::int32_t b) { return define(mul_, a, b); }

  void pend(std::int32_t a, std::int32_t b) { pending_.emplace_back(a, b); }

  // Applies pending merges and re-keys the tables until no coincidence remains.
  void settle() {
    for (auto [a, b] : pending_) unite(a, b);
    pending_.clear();
    bool again = true;
    while (again) {
      again = false;
      for (auto* t : {&add_, &mul_}) again = rekey(*t) || again;
    }
  }

  // One sweep of unity, associativity and distributivity over all root
  // triples. Entries forced by an instance are filled in; conflicting values
  // become pending merges.
  void deduce() {
    const auto r = roots();
    for (std::int32_t a : r) {
      const std::int32_t v = at(mul_, one(), a);
      if (v == kNone)
        set(mul_, one(), a, a);
      else if (v != a)
        pend(v, a);
    }
    for (std::int32_t a : r)
      for (std::int32_t b : r) {
        const std::int32_t ab = at(add_, a, b);
        const std::int32_t pab = at(mul_, a, b);
        for (std::int32_t c : r) {
          const std::int32_t bc = at(add_, b, c);
          if (ab != kNone && bc != kNone) resolve(add_, ab, c, add_, a, bc);
          const std::int32_t pbc = at(mul_, b, c);
          if (pab != kNone && pbc != kNone) resolve(mul_, pab, c, mul_, a, pbc);
          const std::int32_t pac = at(mul_, a, c);
          if (bc != kNone && pab != kNone && pac != kNone) resolve(mul_, a, bc, add_, pab, pac);
        }
      }
  }

  // Undefined entries among roots, oldest pairs first.
  std::vector<std::tuple<bool, std::int32_t, std::int32_t>> holes() {
    std::vector<std::tuple<bool, std::int32_t, std::int32_t>> out;
    const auto r = roots();
    for (std::size_t j = 0; j < r.size(); ++j)
      for (std::size_t i = 0; i <= j; ++i) {
        if (at(add_, r[i], r[j]) == kNone) out.emplace_back(true, r[i], r[j]);
        if (at(mul_, r[i], r[j]) == kNone) out.emplace_back(false, r[i], r[j]);
      }
    return out;
  }

  // Renumbers root nodes consecutively, keeping their relative order.
  void compact(std::vector<std::int32_t>& handles) {
    const auto r = roots();
    std::vector<std::int32_t> index(count_, kNone);
    for (std::size_t i = 0; i < r.size(); ++i) index[r[i]] = static_cast<std::int32_t>(i);
    for (auto& h : handles) h = index[find(h)];
    std::vector<std::int32_t> add(cap_ * cap_, kNone), mul(cap_ * cap_, kNone);
    for (std::int32_t a : r)
      for (std::int32_t b : r) {
        if (auto v = at(add_, a, b); v != kNone) add[index[a] * cap_ + index[b]] = index[v];
        if (auto v = at(mul_, a, b); v != kNone) mul[index[a] * cap_ + index[b]] = index[v];
      }
    add_.swap(add);
    mul_.swap(mul);
    count_ = r.size();
    for (std::size_t i = 0; i < count_; ++i) parent_[i] = static_cast<std::int32_t>(i);
  }

  std::size_t count() const { return count_; }
  std::size_t capacity() const { return cap_; }
  bool take_changed() { return std::exchange(changed_, false); }
  std::int32_t add_entry(std::int32_t a, std::int32_t b) { return at(add_, a, b); }
  std::int32_t mul_entry(std::int32_t a, std::int32_t b) { return at(mul_, a, b); }

 private:
  std::int32_t at(const std::vector<std::int32_t>& t, std::int32_t a, std::int32_t b) const {
    return t[a * cap_ + b];
  }

  void set(std::vector<std::int32_t>& t, std::int32_t a, std::int32_t b, std::int32_t v) {
    t[a * cap_ + b] = v;
    t[b * cap_ + a] = v;
    changed_ = true;
  }

  std::int32_t define(std::vector<std::int32_t>& t, std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (const std::int32_t v = at(t, a, b); v != kNone) return find(v);
    const std::int32_t n = new_node();
    set(t, a, b, n);
    return n;
  }

  // t1(x1,y1) and t2(x2,y2) must agree.
  void resolve(std::vector<std::int32_t>& t1, std::int32_t x1, std::int32_t y1,
               std::vector<std::int32_t>& t2, std::int32_t x2, std::int32_t y2) {
    const std::int32_t v1 = at(t1, x1, y1), v2 = at(t2, x2, y2);
    if (v1 != kNone && v2 != kNone) {
      if (v1 != v2) pend(v1, v2);
    } else if (v1 != kNone) {
      set(t2, x2, y2, v1);
    } else if (v2 != kNone) {
      set(t1, x1, y1, v2);
    }
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    changed_ = true;
  }

  // Moves every entry to its root position; returns whether a merge happened.
  bool rekey(std::vector<std::int32_t>& t) {
    bool merged = false;
    for (std::size_t i = 0; i < count_; ++i)
      for (std::size_t j = i; j < count_; ++j) {
        const std::int32_t v = t[i * cap_ + j];
        if (v == kNone) continue;
        const std::int32_t ri = find(static_cast<std::int32_t>(i));
        const std::int32_t rj = find(static_cast<std::int32_t>(j));
        const std::int32_t rv = find(v);
        if (ri != static_cast<std::int32_t>(i) || rj != static_cast<std::int32_t>(j)) {
          t[i * cap_ + j] = t[j * cap_ + i] = kNone;
        }
        const std::int32_t cur = t[ri * cap_ + rj];
        if (cur == kNone || find(cur) == rv) {
          t[ri * cap_ + rj] = t[rj * cap_ + ri] = rv;
        } else {
          unite(cur, rv);
          merged = true;
        }
      }
    return merged;
  }

  std::size_t cap_;
  std::size_t count_ = 0;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> add_, mul_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pending_;
  bool changed_ = false;
};

struct Term {
  std::vector<unsigned long> exponents;  // multiplicities of the monoid generators
  Integer coeff;
};

std::vector<Term> terms_of(const SparsePoly& f, const AffineMonoid& m) {
  if (f.rank() != m.ambient()) throw Error("relation has the wrong rank");
  if (f.is_zero()) throw Error("relation sides must be nonzero polynomials over N");
  std::vector<Term> out;
  for (const auto& [e, c] : f.terms()) {
    if (c < 1) throw Error("relation coefficients must be positive");
    const auto mult = factorize(m, e);
    if (!mult) throw Error("relation monomial x^" + e.to_string() + " is not in the monoid");
    Term t{{}, c};
    for (const auto& k : *mult) {
      if (!k.fits_ulong_p()) throw Error("relation exponent too large");
      t.exponents.push_back(k.get_ui());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::int32_t evaluate(Enumerator& en, const std::vector<Term>& terms,
                      const std::vector<std::int32_t>& gens) {
  std::int32_t sum = kNone;
  for (const auto& t : terms) {
    std::int32_t mono = en.one();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::int32_t base = gens[j];
      for (unsigned long k = t.exponents[j]; k > 0; k >>= 1) {
        if (k & 1) mono = en.define_mul(mono, base);
        if (k > 1) base = en.define_mul(base, base);
      }
    }
    std::int32_t acc = kNone, pow = mono;
    for (Integer k = t.coeff; k > 0; k >>= 1) {
      if (mpz_odd_p(k.get_mpz_t())) acc = acc == kNone ? pow : en.define_add(acc, pow);
      if (k > 1) pow = en.define_add(pow, pow);
    }
    sum = sum == kNone ? acc : en.define_add(sum, acc);
  }
  return sum;
}

}  // namespace

Decision<FiniteSemiring> quotient(const CongruencePresentation& p) {
  const AffineMonoid& m = p.monoid;
  if (p.size_cap == 0) throw Error("quotient: size_cap must be positive");
  const auto& gvecs = m.generators();
  if (rank_of(gvecs, m.ambient()) != gvecs.size())
    throw Error("quotient: the monoid generators must be linearly independent");
  std::vector<std::pair<std::vector<Term>, std::vector<Term>>> rels;
  for (const auto& [lhs, rhs] : p.relations) rels.emplace_back(terms_of(lhs, m), terms_of(rhs, m));

  const std::size_t capacity = std::min(kMaxNodes, 4 * p.size_cap + 64);
  Enumerator en(capacity);
  try {
    en.new_node();  // the unity
    std::vector<std::int32_t> gens;
    for (std::size_t j = 0; j < gvecs.size(); ++j) gens.push_back(en.new_node());

    while (true) {
      if (en.count() > capacity / 2) en.compact(gens);
      en.take_changed();
      for (auto& g : gens) g = en.find(g);
      for (const auto& [lhs, rhs] : rels) en.pend(evaluate(en, lhs, gens), evaluate(en, rhs, gens));
      en.settle();
      bool dirty = en.take_changed();
      while (true) {
        en.deduce();
        en.settle();
        if (!en.take_changed()) break;
        dirty = true;
      }
      const auto holes = en.holes();
      if (holes.empty() && !dirty) break;
      const std::size_t batch = std::max<std::size_t>(8, en.roots().size());
      for (std::size_t i = 0; i < holes.size() && i < batch; ++i) {
        const auto [is_add, a, b] = holes[i];
        // Definitions never merge, so a and b stay roots.
        if (is_add)
          en.define_add(a, b);
        else
          en.define_mul(a, b);
      }
    }

    const auto roots = en.roots();
    if (roots.size() > p.size_cap)
      return Undecided{"factor has " + std::to_string(roots.size()) + " elements, more than size_cap " +
                       std::to_string(p.size_cap)};
    std::vector<Elem> index(en.count(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i]] = static_cast<Elem>(i);
    SemiringTables t;
    t.order = roots.size();
    t.add.assign(t.order, std::vector<Elem>(t.order));
    t.mul.assign(t.order, std::vector<Elem>(t.order));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = 0; j < roots.size(); ++j) {
        t.add[i][j] = index[en.find(en.add_entry(roots[i], roots[j]))];
        t.mul[i][j] = index[en.find(en.mul_entry(roots[i], roots[j]))];
      }
    t.unity = index[en.find(en.one())];
    t.generators[IntVector(m.ambient())] = *t.unity;
    for (std::size_t j = 0; j < gvecs.size(); ++j) t.generators[gvecs[j]] = index[en.find(gens[j])];
    return validate(t);
  } catch (const BudgetExhausted&) {
    return Undecided{"enumeration exhausted its budget of " + std::to_string(capacity) +
                     " nodes before closing"};
  }
}

}  // namespace tors
