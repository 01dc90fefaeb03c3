#ifndef CIQ_ERRORS_HPP
#define CIQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ciq {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid user-facing configuration (grid sizes, CLI flags, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Vector-field components do not share one grid, or two fields on
// different grids were combined.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

// A spectrum handed to dft_inverse does not satisfy the conjugate
// symmetry of a real field.
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

// The Hamiltonian quadratic form is degenerate along directions the
// dynamics actually excites; the bracket identification has no solution.
class DegenerateHamiltonian : public Error {
 public:
  using Error::Error;
};

// The given dynamics is not a Hamiltonian flow of the given quadratic
// form on the constraint surface.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

// The dynamics does not map the constraint surface into itself.
class ConstraintDrift : public Error {
 public:
  using Error::Error;
};

// A state handed to the propagator is off the constraint surface.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// A vector field expected to be transverse has a longitudinal part.
class NotTransverse : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed field file; offset is the byte position of the defect.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ciq

#endif  // CIQ_ERRORS_HPP
