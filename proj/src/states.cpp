#include "entdyn/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entdyn/spectral.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {

double norm_squared(const std::vector<Complex>& amplitudes) {
    double sum = 0.0;
    for (const Complex& a : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

} // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw DimensionMismatch("PureState: empty amplitude vector");
    }
    const double n2 = norm_squared(amplitudes_);
    if (std::abs(n2 - 1.0) > tol::norm) {
        throw Error("PureState: squared norm " + std::to_string(n2) + " is not 1");
    }
}

PureState::PureState(std::vector<Complex> amplitudes, unchecked_tag)
    : amplitudes_(std::move(amplitudes)) {}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    if (amplitudes.empty()) {
        throw DimensionMismatch("PureState: empty amplitude vector");
    }
    const double norm = std::sqrt(norm_squared(amplitudes));
    if (norm < 1e-100) {
        throw DegenerateDraw("PureState: vector norm below 1e-100");
    }
    for (Complex& a : amplitudes) {
        a /= norm;
    }
    return PureState(std::move(amplitudes), unchecked_tag{});
}

PureState PureState::basis_state(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw DimensionMismatch("basis_state: index " + std::to_string(index) +
                                " out of range for dim " + std::to_string(dim));
    }
    std::vector<Complex> amplitudes(static_cast<size_t>(dim), Complex{0.0, 0.0});
    amplitudes[static_cast<size_t>(index)] = Complex{1.0, 0.0};
    return PureState(std::move(amplitudes), unchecked_tag{});
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    const double defect = hermiticity_defect(matrix_);
    if (!(defect <= tol::herm)) {
        throw NotHermitian("DensityMatrix: Hermiticity defect " + std::to_string(defect));
    }
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1.0, 0.0}) > 1e-10) {
        throw Error("DensityMatrix: trace " + std::to_string(tr.real()) + "+" +
                    std::to_string(tr.imag()) + "i is not 1");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    ComplexMatrix m(dim);
    const double inv = 1.0 / dim;
    for (int i = 0; i < dim; ++i) {
        m(i, i) = Complex{inv, 0.0};
    }
    return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(matrix_).eigenvalues.front();
}

PureState sample_haar_pure(int dim, RngStream& rng) {
    if (dim < 2) {
        throw DimensionMismatch("sample_haar_pure: dim must be >= 2, got " +
                                std::to_string(dim));
    }
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Complex> amplitudes(static_cast<size_t>(dim));
        for (Complex& a : amplitudes) {
            const double re = rng.normal();
            const double im = rng.normal();
            a = Complex{re, im};
        }
        if (std::sqrt(norm_squared(amplitudes)) >= 1e-100) {
            return PureState::normalized(std::move(amplitudes));
        }
    }
    throw DegenerateDraw("sample_haar_pure: 10 consecutive near-zero draws");
}

DensityMatrix projector(const PureState& psi) {
    const int dim = psi.dim();
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
        }
    }
    return DensityMatrix(std::move(m));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& omega) {
    if (rho.dim() != omega.dim()) {
        throw DimensionMismatch("trace_distance: dims " + std::to_string(rho.dim()) + " and " +
                                std::to_string(omega.dim()) + " differ");
    }
    return trace_norm_hermitian(sub(rho.matrix(), omega.matrix()));
}

double euclidean_distance(const PureState& psi, const PureState& chi) {
    if (psi.dim() != chi.dim()) {
        throw DimensionMismatch("euclidean_distance: dims differ");
    }
    double sum = 0.0;
    for (int i = 0; i < psi.dim(); ++i) {
        sum += std::norm(psi.amplitude(i) - chi.amplitude(i));
    }
    return std::sqrt(sum);
}

} // namespace entdyn
