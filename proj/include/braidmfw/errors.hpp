#pragma once

#include <stdexcept>
#include <string>

namespace braidmfw {

/// Malformed input: bad braid text, out-of-range generator, bad parameters.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit (strands, letters, search budget) was exceeded.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace braidmfw
