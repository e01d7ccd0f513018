// Spectra of Hermitian matrices and the trace norm derived from them.
// The solver reduces the matrix to real symmetric tridiagonal form with
// Householder reflections and then runs implicit-shift QL on the
// tridiagonal; eigenvectors are never formed. Sized for dim <= 256.

#pragma once

#include <vector>

#include "entdyn/matrix.hpp"

namespace entdyn {

/// Real eigenvalues sorted ascending; length equals the matrix dimension.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/// All eigenvalues of a Hermitian matrix.
/// Throws NotHermitian if the Hermiticity defect exceeds tol::herm,
/// NoConvergence if QL exceeds its iteration budget.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m);

} // namespace entdyn
