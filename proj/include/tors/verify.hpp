#pragma once

// Property suites run by `tors verify`, comparing the library with the
// brute-force oracles on seeded random and exhaustive instances.

#include <cstdint>
#include <string>
#include <vector>

#include "tors/io.hpp"

namespace tors {

struct SuiteOptions {
  std::uint64_t seed = 42;
  long height = 15;          ///< box bound for lattice-point enumeration
  std::size_t max_order = 3; ///< exhaustive semiring tables up to this order
  std::size_t count = 200;   ///< random quotients, and kmin triples
  std::size_t size_cap = 16; ///< cap for random quotients
  std::size_t monoids = 50;  ///< random saturated monoids
};

struct SuiteResult {
  std::string name;
  bool ok = false;
  json payload;
};

inline const std::vector<std::string> kSuiteNames = {"decomposition", "diagram", "grothendieck",
                                                     "qsubring", "sad-criterion"};

/// One suite by name, or "all". Throws on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace tors
