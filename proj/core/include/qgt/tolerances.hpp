#pragma once

namespace qgt {

// Validation tolerances for 4x4 density matrices.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

// Tolerance for payoff comparisons and tie detection in classification.
inline constexpr double kNumericTol = 1e-9;

// Angle arguments within this distance of a domain bound are clamped onto
// the bound instead of rejected, so that decimal approximations of pi
// (e.g. 3.1415927 on a command line) stay usable.
inline constexpr double kDomainSlack = 1e-6;

}  // namespace qgt
