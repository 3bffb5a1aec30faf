#pragma once
// Shared exact-arithmetic types and the error taxonomy used across the library.
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ihara {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Violated hypothesis or malformed input (CLI exit code 1).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric pipeline failure: residuals, non-integrality, inexact division
// where exactness was promised (CLI exit code 2).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File / stream problems (CLI exit code 3).
struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ihara
