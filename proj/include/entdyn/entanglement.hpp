// Negativity across a bipartition of a qubit register, its Lipschitz
// constants, and the three-step chain that bounds the entanglement
// difference of two evolved states by the Euclidean distance of their
// initial vectors.

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "entdyn/channels.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

/// Division of an n-qubit register into side A and its complement. Side A
/// is always the smaller side: a constructor argument selecting more than
/// half the qubits is relabeled to its complement, so dim_a() <= dim_b()
/// holds for every instance. Qubit 0 is the leftmost tensor factor.
class BipartiteSplit {
public:
    BipartiteSplit(int n_qubits, const std::set<int>& side_a);

    /// The least balanced partition: one qubit against the rest.
    static BipartiteSplit one_vs_rest(int n_qubits, int qubit = 0);

    int n_qubits() const { return n_qubits_; }
    const std::vector<int>& side_a() const { return side_a_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }

    /// True when side A is {0, 1, ..., |A|-1}, so no factor permutation is
    /// needed before the partial transpose.
    bool is_leading_block() const;

private:
    int n_qubits_;
    std::vector<int> side_a_;
    int dim_a_;
    int dim_b_;
};

/// Largest negativity attainable across a split with smaller dimension
/// dim_a: (dim_a - 1) / 2.
double max_negativity(int dim_a);

/// Lipschitz constant of negativity with respect to trace distance: dim_a / 2.
double lipschitz_negativity(int dim_a);

/// Lipschitz constant of normalized negativity: dim_a / (dim_a - 1).
double lipschitz_normalized_negativity(int dim_a);

struct LipschitzConstants {
    double eta_negativity;
    double eta_normalized;
    double negativity_max;
};

LipschitzConstants lipschitz_constants(int dim_a);

/// (trace norm of the partial transpose - 1) / 2. Nonnegative up to
/// rounding; raw values in (-1e-10, 0) are clamped to 0. For a side A that
/// is not a leading block, tensor factors are permuted first.
double negativity(const DensityMatrix& rho, const BipartiteSplit& split);

/// Negativity without the rounding clamp, for debugging and property tests.
double negativity_raw(const DensityMatrix& rho, const BipartiteSplit& split);

/// negativity / max_negativity(dim_a); range [0, 1].
double normalized_negativity(const DensityMatrix& rho, const BipartiteSplit& split);

/// Reorders the tensor factors of an n-qubit operator so that the split's
/// side-A qubits occupy the leading positions. Exposed for tests.
ComplexMatrix permute_to_leading(const ComplexMatrix& m, const BipartiteSplit& split);

/// The three quantities chaining the negativity difference of two evolved
/// states down to the Euclidean distance of the initial vectors, with the
/// channel contraction coefficient bounded by 1:
///   |N(rho) - N(omega)|                        (difference)
///     <= eta_N * D_tr(ch(chi), ch(psi))        (lipschitz_bound)
///     <= eta_N * D_tr(|chi><chi|, |psi><psi|)  (contraction_bound)
///     <= 2 * eta_N * || |chi> - |psi> ||       (euclidean_bound)
struct ChainReport {
    double difference;
    double lipschitz_bound;
    double contraction_bound;
    double euclidean_bound;
    bool holds_lipschitz;
    bool holds_contraction;
    bool holds_euclidean;

    bool all_hold() const { return holds_lipschitz && holds_contraction && holds_euclidean; }
};

ChainReport check_entanglement_difference_chain(const PureState& chi, const PureState& psi,
                                                const QuantumChannel& ch,
                                                const BipartiteSplit& split);

/// An entanglement quantifier with a known Lipschitz constant. Negativity
/// is the only computable implementation shipped; distance-based measures
/// would require a minimization over the separable set and are out of
/// scope.
class EntanglementMeasure {
public:
    virtual ~EntanglementMeasure() = default;
    virtual std::string name() const = 0;
    virtual double value(const DensityMatrix& rho, const BipartiteSplit& split) const = 0;
    virtual double lipschitz_constant(int dim_a) const = 0;
};

class NegativityMeasure final : public EntanglementMeasure {
public:
    std::string name() const override { return "negativity"; }
    double value(const DensityMatrix& rho, const BipartiteSplit& split) const override {
        return negativity(rho, split);
    }
    double lipschitz_constant(int dim_a) const override { return lipschitz_negativity(dim_a); }
};

} // namespace entdyn
