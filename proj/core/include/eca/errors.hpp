#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace eca {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates its documented range or combination
/// constraints (negative tolerance, percentile outside [0,1], ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The data itself cannot be analysed: length mismatches, missing values
/// where none are allowed, no events left after filtering, unparseable input.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Receives non-fatal diagnostics such as merged duplicate events.
using WarningHandler = std::function<void(const std::string&)>;

/// Writes "warning: <msg>" to standard error.
const WarningHandler& stderr_warnings();

/// Discards all warnings.
const WarningHandler& ignore_warnings();

}  // namespace eca
