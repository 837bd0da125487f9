#ifndef POLYHEAT_ERRORS_HPP
#define POLYHEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyheat {

struct InvalidPolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// All A_jk(z) vanish for j,k >= 1: the recentred table carries no mixed terms.
struct DegenerateTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SolverDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mass near the grid edge exceeded tolerance; R is too small for this solve.
struct BoundaryContamination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StencilUnderflow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TruncationResidual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonconformingMoments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PatternMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace polyheat

#endif
