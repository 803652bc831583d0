#pragma once

#include <stdexcept>
#include <string>

namespace tfpme {

/// Raised when an iterative method fails to converge or produces an
/// impossible intermediate (negative partial sum, empty bracket, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tfpme
