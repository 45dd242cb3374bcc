// tors: command-line front end. Every run prints one JSON report
// {command, status, payload, timing} and exits 0 (ok), 2 (undecided) or 1 (failed).

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tors/io.hpp"
#include "tors/monoid.hpp"
#include "tors/verify.hpp"

using namespace tors;

namespace {

enum class Status { ok, undecided, failed };

struct Outcome {
  Status status = Status::ok;
  json payload = json::object();
};

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::undecided: return "undecided";
    case Status::failed: return "failed";
  }
  return "failed";
}

json face_json(const Face& f) {
  return {{"id", f.id},
          {"dim", f.dim},
          {"support", to_json(f.support.basis())},
          {"extreme_rays", to_json(f.closed_face.extreme_rays())},
          {"sample_point", to_json(f.sample_point())}};
}

CanonicalDecomposition decompose_file(const std::string& path) {
  return canonical_decomposition(saturate(read_monoid_file(path)));
}

Outcome run_saturate(const std::string& path, const std::string& emit) {
  const auto m = read_monoid_file(path);
  const auto s = saturate(m);
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw Error("cannot write " + emit);
    out << write_monoid(s.as_generated());
  }
  return {Status::ok,
          {{"rank", m.ambient()},
           {"generators", to_json(m.generators())},
           {"hilbert_basis", to_json(s.hilbert_basis())},
           {"extreme_rays", to_json(s.cone().extreme_rays())},
           {"was_saturated", is_saturated(m)}}};
}

Outcome run_decompose(const std::string& path) {
  const auto d = decompose_file(path);
  json pieces = json::array();
  for (const auto& p : d.pieces) pieces.push_back(face_json(p.face()));
  return {Status::ok,
          {{"hilbert_basis", to_json(d.monoid.hilbert_basis())}, {"piece_count", d.pieces.size()}, {"pieces", pieces}}};
}

Outcome run_classify(const std::string& path, const std::string& point) {
  const auto d = decompose_file(path);
  const IntVector x = parse_vector(point);
  if (x.rank() != d.monoid.ambient()) throw Error("point has the wrong rank");
  return {Status::ok, {{"point", to_json(x)}, {"piece", face_json(classify(d, x).face())}}};
}

Outcome run_kmin(const std::string& path, const std::string& alpha_text, const std::string& gamma_text) {
  const auto d = decompose_file(path);
  const IntVector alpha = parse_vector(alpha_text), gamma = parse_vector(gamma_text);
  const auto& piece = classify(d, alpha);
  const long k = kmin(piece, alpha, gamma);
  return {Status::ok,
          {{"alpha", to_json(alpha)}, {"gamma", to_json(gamma)}, {"piece", face_json(piece.face())}, {"k", k}}};
}

Outcome run_shift(const std::string& path, const std::string& alpha_text, const std::string& poly_text) {
  const auto c = read_monoid_file(path);
  const auto d = canonical_decomposition(saturate(c));
  const IntVector alpha = parse_vector(alpha_text);
  const SparsePoly f = parse_poly(poly_text, c.ambient());
  const auto& piece = classify(d, alpha);
  const auto r = shift_into(f, alpha, piece, c);
  json splits = json::array();
  for (const auto& [beta, gamma] : r.splits) splits.push_back({{"beta", to_json(beta)}, {"gamma", to_json(gamma)}});
  return {Status::ok,
          {{"alpha", to_json(alpha)},
           {"piece", face_json(piece.face())},
           {"k", r.k},
           {"shifted", to_string(r.shifted)},
           {"shifted_terms", to_json(r.shifted)},
           {"splits", splits}}};
}

Outcome run_quotient(const std::string& path, std::optional<std::size_t> size_cap) {
  auto p = presentation_from_json(read_json_file(path));
  if (size_cap) p.size_cap = *size_cap;
  auto q = quotient(p);
  if (auto* u = std::get_if<Undecided>(&q))
    return {Status::undecided, {{"presentation", to_json(p)}, {"reason", u->reason}}};
  const auto& s = std::get<FiniteSemiring>(q);
  return {Status::ok, {{"presentation", to_json(p)}, {"order", s.order()}, {"semiring", to_json(s)}}};
}

Outcome run_profile(const std::string& path) {
  const auto s = semiring_from_json(read_json_file(path));
  json elems = json::array();
  for (const auto& p : profile_all(s)) elems.push_back(to_json(p));
  const auto diag = check_diagram(s);
  json violations = json::array();
  for (const auto& v : diag.violations) violations.push_back({{"element", v.element}, {"implication", v.implication}});
  json payload = {{"order", s.order()},
                  {"elements", elems},
                  {"diagram", {{"ok", diag.ok()}, {"implications_checked", diag.implications_checked},
                               {"violations", violations}}}};
  if (s.unity()) {
    payload["unity"] = *s.unity();
    json checks = json::array();
    const auto t5 = check_sad_criterion(s);
    for (const auto& c : t5.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    payload["structure_checks"] = checks;
    payload["np_hom_exists"] = np_hom_exists(s);
    if (!t5.ok()) return {Status::failed, payload};
  }
  return {diag.ok() ? Status::ok : Status::failed, payload};
}

Outcome run_grothendieck(const std::string& path) {
  const auto s = semiring_from_json(read_json_file(path));
  const auto g = grothendieck(s);
  return {Status::ok, {{"order", g.ring.order()}, {"grothendieck", to_json(g)}}};
}

Outcome run_qsub(const std::vector<std::string>& gens_text, const std::vector<std::string>& members) {
  std::vector<Fraction> gens;
  for (const auto& t : gens_text) gens.push_back(parse_fraction(t));
  const auto cf = canonical_form(gens);
  json gj = json::array(), certs = json::array(), mj = json::array();
  for (const auto& f : gens) gj.push_back(to_json(f));
  json bezout = json::array();
  for (const auto& c : cf.gcd.coeffs) bezout.push_back(c.get_str());
  for (const auto& pc : cf.primes)
    certs.push_back({{"p", pc.p.get_str()},
                     {"generator", pc.generator},
                     {"alpha", pc.alpha.get_str()},
                     {"beta", pc.beta.get_str()}});
  for (const auto& t : members) {
    const Fraction x = parse_fraction(t);
    mj.push_back({{"x", to_json(x)}, {"member", member(cf.descriptor, x)}});
  }
  return {Status::ok,
          {{"generators", gj},
           {"descriptor", to_json(cf.descriptor)},
           {"certificates", {{"gcd", bezout}, {"primes", certs}, {"verified", verify_certificates(cf, gens)}}},
           {"finitely_generated", is_finitely_generated(cf.descriptor)},
           {"additively_almost_divisible", is_additively_almost_divisible(cf.descriptor)},
           {"members", mj}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturated monoids, canonical decompositions and finite semirings"};
  app.require_subcommand(1);

  std::string file, point, alpha, gamma = "", poly, emit, suite = "all", out;
  std::vector<std::string> fractions, members;
  std::optional<std::size_t> size_cap;
  SuiteOptions vopts;

  auto* sat = app.add_subcommand("saturate", "Hilbert basis of the saturation of a monoid file");
  sat->add_option("file", file, "monoid file")->required();
  sat->add_option("--emit", emit, "write the saturated monoid as a monoid file");

  auto* dec = app.add_subcommand("decompose", "canonical decomposition of the saturation");
  dec->add_option("file", file, "monoid file")->required();

  auto* cls = app.add_subcommand("classify", "piece containing a point");
  cls->add_option("file", file, "monoid file")->required();
  cls->add_option("--point", point, "e.g. 2,1")->required();

  auto* km = app.add_subcommand("kmin", "least k with k*alpha + gamma in the piece of alpha");
  km->add_option("file", file, "monoid file")->required();
  km->add_option("--alpha", alpha)->required();
  km->add_option("--gamma", gamma)->required();

  auto* sh = app.add_subcommand("shift", "least k with x^(k*alpha) * f supported in the monoid");
  sh->add_option("file", file, "saturated monoid file")->required();
  sh->add_option("--alpha", alpha)->required();
  sh->add_option("--poly", poly, "e.g. \"2*x^(0,7) + 1*x^(1,0)\"")->required();

  auto* quo = app.add_subcommand("quotient", "finite factor of N[C] from a presentation file");
  quo->add_option("file", file, "presentation JSON")->required();

  auto* prof = app.add_subcommand("profile", "additive properties of every element");
  prof->add_option("file", file, "semiring JSON or quotient report")->required();

  auto* gro = app.add_subcommand("grothendieck", "Grothendieck ring of a finite semiring");
  gro->add_option("file", file, "semiring JSON or quotient report")->required();

  auto* qs = app.add_subcommand("qsub", "canonical form of the subring of Q generated by fractions");
  qs->add_option("fractions", fractions, "generators, e.g. 5/2")->required();
  qs->add_option("--member", members, "fractions to test for membership");

  auto* ver = app.add_subcommand("verify", "run property suites against brute-force oracles");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"decomposition", "diagram", "grothendieck", "qsubring",
                                                          "sad-criterion", "all"}));
  ver->add_option("--height", vopts.height)->check(CLI::Range(1L, 40L));
  ver->add_option("--max-order", vopts.max_order)->check(CLI::Range(1, 4));
  ver->add_option("--count", vopts.count);

  for (auto* sub : {quo, ver}) sub->add_option("--size-cap", size_cap);
  app.add_option("--seed", vopts.seed, "random seed");
  app.add_option("--out", out, "write the report here instead of standard output");
  for (auto* sub : {sat, dec, cls, km, sh, quo, prof, gro, qs, ver}) {
    sub->add_option("--seed", vopts.seed, "random seed");
    sub->add_option("--out", out, "write the report here instead of standard output");
  }

  std::string verb;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
    verb = app.get_subcommands().front()->get_name();
    if (verb == "saturate") outcome = run_saturate(file, emit);
    else if (verb == "decompose") outcome = run_decompose(file);
    else if (verb == "classify") outcome = run_classify(file, point);
    else if (verb == "kmin") outcome = run_kmin(file, alpha, gamma);
    else if (verb == "shift") outcome = run_shift(file, alpha, poly);
    else if (verb == "quotient") outcome = run_quotient(file, size_cap);
    else if (verb == "profile") outcome = run_profile(file);
    else if (verb == "grothendieck") outcome = run_grothendieck(file);
    else if (verb == "qsub") outcome = run_qsub(fractions, members);
    else {
      if (size_cap) vopts.size_cap = *size_cap;
      const auto r = run_suite(suite, vopts);
      outcome = {r.ok ? Status::ok : Status::failed, r.payload};
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (argc > 1 && argv[1][0] != '-' && !app.got_subcommand(argv[1]))
      msg = std::string("unknown verb '") + argv[1] + "'";
    outcome = {Status::failed, {{"error", msg}}};
  } catch (const Error& e) {
    outcome = {Status::failed, {{"error", e.what()}}};
  } catch (const json::exception& e) {
    outcome = {Status::failed, {{"error", std::string("malformed JSON input: ") + e.what()}}};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  const json report = {{"command", {{"verb", verb}, {"args", args}}},
                       {"status", status_name(outcome.status)},
                       {"payload", outcome.payload},
                       {"timing", {{"seconds", seconds}}}};
  if (out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "tors: cannot write " << out << "\n";
      return 1;
    }
    f << report.dump(2) << "\n";
  }

  std::cerr << "tors " << (verb.empty() ? "?" : verb) << ": " << status_name(outcome.status);
  if (outcome.payload.contains("error")) std::cerr << ": " << outcome.payload["error"].get<std::string>();
  if (outcome.payload.contains("reason")) std::cerr << ": " << outcome.payload["reason"].get<std::string>();
  std::cerr << " (" << seconds << " s)\n";
  switch (outcome.status) {
    case Status::ok: return 0;
    case Status::undecided: return 2;
    case Status::failed: return 1;
  }
  return 1;
}
