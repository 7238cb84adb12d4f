#pragma once

#include <stdexcept>
#include <string>

namespace panhandle {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact arithmetic
struct NonExactDivision : Error { using Error::Error; };
struct NotInZSubring : Error { using Error::Error; };

// partitions, composite labels, plethysm
struct SizeMismatch : Error { using Error::Error; };
struct RankTooSmall : Error { using Error::Error; };
struct CancellationFailure : Error { using Error::Error; };
struct GradeMismatch : Error { using Error::Error; };

// torus invariants and cables
struct NonIntegralExponent : Error { using Error::Error; };
struct NotAKnot : Error { using Error::Error; };
struct DegreeConditionUnmet : Error { using Error::Error; };
struct InadmissibleFraming : Error { using Error::Error; };
struct ShapeViolation : Error { using Error::Error; };

// diagrams and the skein evaluator
struct BudgetExceeded : Error { using Error::Error; };
struct MalformedDiagram : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// grid diagrams and framing cones
struct NotRealizable : Error { using Error::Error; };
struct NegativeCorrectedFraming : Error { using Error::Error; };

}  // namespace panhandle
