#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggentropy {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two sample rows are exactly equal. Nearest-neighbour log-distances are
// undefined at ties, so this is always a hard error.
class DuplicatePointsError : public std::invalid_argument {
 public:
  DuplicatePointsError(std::size_t first, std::size_t second)
      : std::invalid_argument("duplicate sample points at rows " +
                              std::to_string(first) + " and " +
                              std::to_string(second)),
        first_index(first),
        second_index(second) {}

  std::size_t first_index;
  std::size_t second_index;
};

// Structural size violation, e.g. k >= N or a Shapiro-Wilk input outside
// the supported sample-size range.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid run configuration (replicate counts, significance levels, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A critical-value table does not match the requested (m, s, N, k, alpha).
class TableLookupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A density handed to the quadrature oracle does not integrate to one over
// the stated support.
class InconsistentDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constant input where a spread is required.
class DegenerateSampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cholesky factorization failed; the matrix is not positive definite.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ggentropy
