#pragma once

// File formats and JSON encodings.
//
//   monoid / cone file   first line `n <rank>`, then one generator per line
//   ideal file           first line `monoid <path>`, then one polynomial per line
//   vectors              JSON arrays of decimal strings (plain numbers accepted)
//   polynomials          `2*x^(1,1) + 1*x^(2,0)` or [[coeff, [e1,...,en]], ...]
//   semirings            {order, add, mul, unity?, generators?}
//   presentations        {monoid: {rank, generators}, relations: [[f, g], ...], size_cap}

#include <filesystem>
#include <istream>
#include <string>

#include <json.hpp>

#include "tors/polynomial.hpp"
#include "tors/qsubring.hpp"
#include "tors/semiring.hpp"

namespace tors {

using json = nlohmann::json;

AffineMonoid read_monoid(std::istream& in, const std::string& source = "<input>");
AffineMonoid read_monoid_file(const std::filesystem::path& path);
std::string write_monoid(const AffineMonoid& m);

/// Relative monoid paths are resolved against the ideal file's directory.
Ideal read_ideal_file(const std::filesystem::path& path);

/// "1,2,3" or "(1,2,3)".
IntVector parse_vector(const std::string& text);

json to_json(const IntVector& v);
IntVector vector_from_json(const json& j);
json to_json(const std::vector<IntVector>& vs);

json to_json(const SparsePoly& f);
/// A text string or the array form.
SparsePoly poly_from_json(const json& j, std::size_t rank, CoeffDomain domain);

json to_json(const FiniteSemiring& s);
/// Accepts a semiring object, or a CLI report whose payload holds one under `semiring`.
FiniteSemiring semiring_from_json(const json& j);

json to_json(const CongruencePresentation& p);
CongruencePresentation presentation_from_json(const json& j);

json to_json(const Fraction& f);
json to_json(const PrimeSet& p);
json to_json(const QSubringDescriptor& d);

json to_json(const ElementProfile& p);
json to_json(const GrothendieckRing& g);

json read_json_file(const std::filesystem::path& path);

}  // namespace tors
