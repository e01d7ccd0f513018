// Pure states, density matrices, uniform sampling on the pure-state
// sphere, and the two distances the rest of the library is built on:
// trace distance between density matrices and Euclidean distance between
// state vectors.

#pragma once

#include <vector>

#include "entdyn/matrix.hpp"
#include "entdyn/rng.hpp"

namespace entdyn {

class PureState {
public:
    /// Amplitudes must already be normalized to unit length (within
    /// tol::norm); throws Error otherwise.
    explicit PureState(std::vector<Complex> amplitudes);

    /// Normalizes the given amplitudes; throws DegenerateDraw for a
    /// near-zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);

    static PureState basis_state(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Complex& amplitude(int i) const { return amplitudes_[static_cast<size_t>(i)]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
    struct unchecked_tag {};
    PureState(std::vector<Complex> amplitudes, unchecked_tag);

    std::vector<Complex> amplitudes_;
};

class DensityMatrix {
public:
    /// Validates Hermiticity (tol::herm) and unit trace (1e-10). Positive
    /// semidefiniteness is not recomputed on every construction; use
    /// min_eigenvalue() where a full check is wanted.
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    /// Smallest eigenvalue; >= -tol::psd for every state this library
    /// produces.
    double min_eigenvalue() const;

private:
    ComplexMatrix matrix_;
};

/// Unit vector drawn from the unitarily invariant distribution: 2*dim
/// independent standard normals as real and imaginary parts, normalized.
/// Requires dim >= 2.
PureState sample_haar_pure(int dim, RngStream& rng);

/// Rank-one projector |psi><psi|.
DensityMatrix projector(const PureState& psi);

/// tr |rho - omega|; range [0, 2].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& omega);

/// || |psi> - |chi> ||; range [0, 2].
double euclidean_distance(const PureState& psi, const PureState& chi);

} // namespace entdyn
