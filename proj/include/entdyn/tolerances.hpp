// Central numerical tolerances. Every module validates against these
// rather than hard-coding its own thresholds.

#pragma once

namespace entdyn::tol {

/// Max |M - M^dagger| entry for a matrix to count as Hermitian.
inline constexpr double herm = 1e-10;

/// Eigenvalues above -psd are accepted as nonnegative.
inline constexpr double psd = 1e-9;

/// Unit-norm and Kraus-completeness slack.
inline constexpr double norm = 1e-12;

} // namespace entdyn::tol
