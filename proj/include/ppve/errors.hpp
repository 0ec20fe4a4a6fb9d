#pragma once

#include <stdexcept>

namespace ppve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Erosion would leave a box with a non-positive side.
struct EmptyErosion : Error { using Error::Error; };
// Point too close to the grid edge for a centred 3x3 stencil.
struct OutOfStencil : Error { using Error::Error; };
struct UnknownModel : Error { using Error::Error; };
// Intensity exceeded the thinning bound; retry with a finer probe grid.
struct BoundViolation : Error { using Error::Error; };
struct CholeskyFailure : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct Nonconvergence : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace ppve
