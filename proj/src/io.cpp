#include "tors/io.hpp"

#include <fstream>
#include <sstream>

namespace tors {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed integer '" + j.get<std::string>() + "'");
    return x;
  }
  throw Error("expected an integer, got " + j.dump());
}

Elem elem_from_json(const json& j) {
  if (!j.is_number_unsigned()) throw Error("expected an element index, got " + j.dump());
  return j.get<Elem>();
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

AffineMonoid read_monoid(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> rank;
  std::vector<IntVector> gens;
  auto fail = [&](const std::string& msg) { throw Error(source + ":" + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!rank) {
      std::string tag;
      long r = -1;
      if (!(ls >> tag >> r) || tag != "n" || r < 0) fail("expected `n <rank>`");
      std::string extra;
      if (ls >> extra) fail("unexpected text after the rank");
      rank = static_cast<std::size_t>(r);
      continue;
    }
    std::vector<Integer> coords;
    std::string tok;
    while (ls >> tok) {
      Integer x;
      if (x.set_str(tok, 10) != 0) fail("malformed integer '" + tok + "'");
      if (x < 0) fail("generator entries must be nonnegative");
      coords.push_back(x);
    }
    if (coords.size() != *rank)
      fail("generator has " + std::to_string(coords.size()) + " entries, expected " + std::to_string(*rank));
    gens.emplace_back(std::move(coords));
  }
  if (!rank) throw Error(source + ": missing `n <rank>` line");
  return AffineMonoid(*rank, gens);
}

AffineMonoid read_monoid_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_monoid(in, path.string());
}

std::string write_monoid(const AffineMonoid& m) {
  std::string out = "n " + std::to_string(m.ambient()) + "\n";
  for (const auto& g : m.generators()) {
    for (std::size_t i = 0; i < g.rank(); ++i) out += (i ? " " : "") + g[i].get_str();
    out += "\n";
  }
  return out;
}

Ideal read_ideal_file(const std::filesystem::path& path) {
  auto in = open(path);
  std::string line;
  std::size_t lineno = 0;
  std::optional<AffineMonoid> monoid;
  std::vector<SparsePoly> gens;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
    if (!monoid) {
      if (line.rfind("monoid ", 0) != 0) throw Error(where + "expected `monoid <path>`");
      std::filesystem::path mp = trim(line.substr(7));
      if (mp.is_relative()) mp = path.parent_path() / mp;
      monoid = read_monoid_file(mp);
      continue;
    }
    try {
      gens.push_back(parse_poly(line, monoid->ambient()));
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  if (!monoid) throw Error(path.string() + ": missing `monoid <path>` line");
  return make_ideal(*monoid, std::move(gens));
}

IntVector parse_vector(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']') s += c;
  if (s.empty()) throw Error("empty vector");
  std::vector<Integer> coords;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Integer x;
    if (tok.empty() || x.set_str(tok, 10) != 0) throw Error("malformed vector '" + text + "'");
    coords.push_back(x);
  }
  return IntVector(std::move(coords));
}

json to_json(const IntVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a vector, got " + j.dump());
  std::vector<Integer> coords;
  for (const auto& x : j) coords.push_back(integer_from_json(x));
  return IntVector(std::move(coords));
}

json to_json(const std::vector<IntVector>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

json to_json(const SparsePoly& f) {
  json j = json::array();
  for (const auto& [e, c] : f.terms()) j.push_back({c.get_str(), to_json(e)});
  return j;
}

SparsePoly poly_from_json(const json& j, std::size_t rank, CoeffDomain domain) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), rank, domain);
  if (j.is_number_integer()) return SparsePoly::constant(rank, integer_from_json(j), domain);
  if (!j.is_array()) throw Error("expected a polynomial, got " + j.dump());
  SparsePoly f(rank, CoeffDomain::integers);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw Error("malformed polynomial term " + term.dump());
    const IntVector e = vector_from_json(term[1]);
    if (e.rank() != rank) throw Error("polynomial term " + term.dump() + " has the wrong rank");
    f.add_term(e, integer_from_json(term[0]));
  }
  return f.with_domain(domain);
}

json to_json(const FiniteSemiring& s) {
  json j;
  j["order"] = s.order();
  json add = json::array(), mul = json::array();
  for (Elem a = 0; a < s.order(); ++a) {
    json ra = json::array(), rm = json::array();
    for (Elem b = 0; b < s.order(); ++b) {
      ra.push_back(s.add(a, b));
      rm.push_back(s.mul(a, b));
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  j["add"] = add;
  j["mul"] = mul;
  if (s.unity()) j["unity"] = *s.unity();
  if (!s.generators().empty()) {
    json g = json::array();
    for (const auto& [e, x] : s.generators()) g.push_back({{"exponent", to_json(e)}, {"element", x}});
    j["generators"] = g;
  }
  return j;
}

FiniteSemiring semiring_from_json(const json& j) {
  if (j.contains("payload") && j["payload"].is_object()) return semiring_from_json(j["payload"]);
  if (j.contains("semiring") && j["semiring"].is_object()) return semiring_from_json(j["semiring"]);
  if (!j.is_object() || !j.contains("add") || !j.contains("mul"))
    throw Error("expected a semiring object with `add` and `mul` tables");
  SemiringTables t;
  auto table = [&](const json& tab, const char* name) {
    if (!tab.is_array()) throw Error(std::string(name) + " must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto& row : tab) {
      if (!row.is_array()) throw Error(std::string(name) + " rows must be arrays");
      std::vector<Elem> r;
      for (const auto& x : row) r.push_back(elem_from_json(x));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  t.add = table(j["add"], "add");
  t.mul = table(j["mul"], "mul");
  t.order = j.contains("order") ? j["order"].get<std::size_t>() : t.add.size();
  if (j.contains("unity") && !j["unity"].is_null()) t.unity = elem_from_json(j["unity"]);
  if (j.contains("generators"))
    for (const auto& g : j["generators"]) t.generators[vector_from_json(g.at("exponent"))] = elem_from_json(g.at("element"));
  return validate(t);
}

json to_json(const CongruencePresentation& p) {
  json rels = json::array();
  for (const auto& [f, g] : p.relations) rels.push_back({to_string(f), to_string(g)});
  return {{"monoid", {{"rank", p.monoid.ambient()}, {"generators", to_json(p.monoid.generators())}}},
          {"relations", rels},
          {"size_cap", p.size_cap}};
}

CongruencePresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("monoid") || !j.contains("relations"))
    throw Error("expected a presentation object with `monoid` and `relations`");
  const auto& m = j["monoid"];
  const std::size_t rank = m.at("rank").get<std::size_t>();
  std::vector<IntVector> gens;
  for (const auto& g : m.at("generators")) {
    gens.push_back(vector_from_json(g));
    if (gens.back().rank() != rank) throw Error("monoid generator " + g.dump() + " has the wrong rank");
  }
  CongruencePresentation p{AffineMonoid(rank, gens), {}, 64};
  for (const auto& r : j["relations"]) {
    if (!r.is_array() || r.size() != 2) throw Error("relation must be a pair, got " + r.dump());
    p.relations.emplace_back(poly_from_json(r[0], rank, CoeffDomain::naturals),
                             poly_from_json(r[1], rank, CoeffDomain::naturals));
  }
  if (j.contains("size_cap")) p.size_cap = j["size_cap"].get<std::size_t>();
  return p;
}

json to_json(const Fraction& f) { return f.to_string(); }

json to_json(const PrimeSet& p) {
  switch (p.kind()) {
    case PrimeSet::Kind::finite: {
      json v = json::array();
      for (const auto& q : p.primes()) v.push_back(q.get_str());
      return {{"kind", "finite"}, {"values", v}};
    }
    case PrimeSet::Kind::all:
      return {{"kind", "all"}};
    case PrimeSet::Kind::coprime_to:
      return {{"kind", "coprime_to"}, {"modulus", p.modulus().get_str()}};
  }
  return {};
}

json to_json(const QSubringDescriptor& d) { return {{"n", d.n.get_str()}, {"primes", to_json(d.primes)}}; }

json to_json(const ElementProfile& p) {
  json w = json::object();
  if (p.regular_witness) w["regular_b"] = *p.regular_witness;
  if (p.sad_witness) w["sad"] = {{"c", p.sad_witness->c}, {"m", p.sad_witness->m}};
  if (p.ad_multiplier) w["ad_k"] = *p.ad_multiplier;
  return {{"element", p.element},
          {"index", p.index},
          {"period", p.period},
          {"idempotent", p.idempotent},
          {"torsion", p.torsion},
          {"regular", p.regular},
          {"divisible", p.divisible},
          {"strongly_almost_divisible", p.strongly_almost_divisible},
          {"almost_divisible", p.almost_divisible},
          {"witnesses", w}};
}

json to_json(const GrothendieckRing& g) {
  json pairs = json::array();
  for (Elem x = 0; x < g.sigma.size(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < g.sigma.size(); ++y) row.push_back(g.pair(x, y));
    pairs.push_back(row);
  }
  return {{"ring", to_json(g.ring)},
          {"zero", g.zero},
          {"negation", g.negation},
          {"sigma", g.sigma},
          {"pair_class", pairs}};
}

json read_json_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace tors
