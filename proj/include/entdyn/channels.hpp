// Completely positive trace-preserving maps in Kraus form, the local
// dephasing model and its unitary dilation, and a sampled estimate of the
// trace-distance contraction coefficient.
//
// Amplitude damping and depolarizing channels are extensions beyond the
// dephasing model; they ride on the same Kraus machinery.

#pragma once

#include <vector>

#include "entdyn/matrix.hpp"
#include "entdyn/rng.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

class QuantumChannel {
public:
    /// Kraus operators must be dim x dim and satisfy
    /// sum_k K_k^dagger K_k = I within tol::norm.
    QuantumChannel(int dim, std::vector<ComplexMatrix> kraus_ops);

    static QuantumChannel identity(int dim);

    int dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }

private:
    int dim_;
    std::vector<ComplexMatrix> kraus_ops_;
};

/// sum_k K_k rho K_k^dagger, evaluated with dense Kraus operators.
DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);

/// Phase damping with decoherence probability p:
/// K0 = diag(1, sqrt(1-p)), K1 = diag(0, sqrt(p)).
QuantumChannel dephasing_qubit(double p);

/// Amplitude damping with decay probability gamma (extension).
QuantumChannel amplitude_damping_qubit(double gamma);

/// Depolarizing channel with error probability p (extension).
QuantumChannel depolarizing_qubit(double p);

/// Product channel of single-qubit factors; the Kraus set is every tensor
/// product of per-factor Kraus operators.
QuantumChannel tensor_local_channels(const std::vector<QuantumChannel>& per_qubit);

/// Applies one single-qubit channel per qubit without materializing the
/// product Kraus set. Matches
/// apply_channel(tensor_local_channels(per_qubit), rho) entrywise; this is
/// the path the ensemble runner uses for large registers.
DensityMatrix apply_local_channels(const std::vector<QuantumChannel>& per_qubit,
                                   const DensityMatrix& rho);

/// Markov decoherence probability p = 1 - exp(-gamma * t).
double markov_p(double gamma, double t);

/// A channel presented as a joint unitary on system (x) environment with a
/// fixed initial environment state; the system is the leading factor.
struct Dilation {
    /// Throws NotUnitary if U^dagger U deviates from I by more than 1e-10,
    /// DimensionMismatch on inconsistent dimensions.
    Dilation(int dim_system, int dim_env, ComplexMatrix unitary, DensityMatrix env_state);

    int dim_system;
    int dim_env;
    ComplexMatrix unitary;
    DensityMatrix env_state;
};

/// tr_E[ U (rho (x) rho_E) U^dagger ].
DensityMatrix apply_dilation(const Dilation& d, const DensityMatrix& rho);

/// Dilation of single-qubit dephasing(p): environment qubit in |0>, rotated
/// by an angle with sin^2(theta) = p conditioned on the system being |1>.
Dilation dephasing_dilation(double p);

/// Max over n_pairs random pure-state pairs of
/// D_tr(ch(rho), ch(omega)) / D_tr(rho, omega): a sampled lower bound on
/// the channel's contraction coefficient. Pairs closer than 1e-12 in trace
/// distance are redrawn.
double estimate_contraction(const QuantumChannel& ch, int n_pairs, RngStream& rng);

} // namespace entdyn
