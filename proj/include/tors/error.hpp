#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace tors {

/// Raised on contract violations (bad input, broken preconditions) and on
/// internal consistency failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a semi-decision that ran out of budget. Not an error.
struct Undecided {
  std::string reason;
};

template <typename T>
using Decision = std::variant<T, Undecided>;

template <typename T>
bool is_undecided(const Decision<T>& d) {
  return std::holds_alternative<Undecided>(d);
}

}  // namespace tors
