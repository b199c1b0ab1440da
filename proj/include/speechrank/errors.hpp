#pragma once

#include <stdexcept>
#include <string>

namespace speechrank {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: manifests, config files, dates, CSV.
struct ParseError : Error {
  using Error::Error;
};

// Contract violations: bad arguments, degenerate inputs, out-of-domain values.
struct DomainError : Error {
  using Error::Error;
};

// Filesystem trouble.
struct IoError : Error {
  using Error::Error;
};

}  // namespace speechrank
