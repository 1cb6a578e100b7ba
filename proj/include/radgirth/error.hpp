#pragma once

#include <stdexcept>
#include <string>

namespace radgirth {

/// Malformed or out-of-contract input (bad vertex ids, unsupported parameters,
/// unparseable files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input was well formed but failed a structural check (a witness set with a
/// forbidden distance, an imported cage below its claimed girth, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radgirth
