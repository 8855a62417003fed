#pragma once

#include <stdexcept>
#include <string>

namespace hodgering {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exactla
struct AmbientMismatch : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };

// ring
struct DimensionMismatch : Error { using Error::Error; };

// filt
struct NotDegreeTwo : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };

// lefschetz
struct NotInF2H2 : Error { using Error::Error; };
struct NotPureWeight : Error { using Error::Error; };
struct NotPureWeight1 : NotPureWeight { using NotPureWeight::NotPureWeight; };
struct NoConjugation : Error { using Error::Error; };
struct NotGeometric : Error { using Error::Error; };

// A theorem of the underlying theory failed on validated data. This is
// always a bug in the input data or in this library, never a legitimate
// negative result, so it gets its own type (and its own CLI exit code).
struct PaperContradiction : Error { using Error::Error; };

// constructors
struct NotAlternating : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct InvalidFactor : Error { using Error::Error; };

// cli / io
struct ParseError : Error { using Error::Error; };
struct SchemaVersionMismatch : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };

}  // namespace hodgering
