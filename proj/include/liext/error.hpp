#ifndef LIEXT_ERROR_HPP
#define LIEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liext {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch between operands (dimensions, ranges).
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A square matrix required to be invertible is not.
struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/// Malformed textual/JSON input.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A mathematical precondition fails (Jacobi, cocycle membership, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace liext

#endif
