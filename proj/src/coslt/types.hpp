#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace coslt {

using Cx = std::complex<double>;

enum class Field { R, C };

inline const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

/// Evaluation status of a meromorphic quantity at a given point.
enum class EvalStatus { Finite, Pole, Removable };

inline const char* status_name(EvalStatus s) {
  switch (s) {
    case EvalStatus::Finite: return "finite";
    case EvalStatus::Pole: return "pole";
    case EvalStatus::Removable: return "removable";
  }
  return "?";
}

/// A spectral eigenvalue together with its pole/finite classification.
struct SpectralValue {
  Cx eta{0.0, 0.0};
  EvalStatus status{EvalStatus::Finite};
};

// Validation and runtime error types. Constructors take a human-readable
// message naming the violated constraint.
struct ConstraintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TrivialCharacter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInLattice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotNeighbors : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoPath : std::logic_error {
  using std::logic_error::logic_error;
};
struct SingularBlock : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct KernelSingular : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInL : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConventionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coslt
