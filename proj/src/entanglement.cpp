#include "entdyn/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entdyn/spectral.hpp"

namespace entdyn {

BipartiteSplit::BipartiteSplit(int n_qubits, const std::set<int>& side_a)
    : n_qubits_(n_qubits) {
    if (n_qubits < 2) {
        throw DimensionMismatch("BipartiteSplit: need at least 2 qubits, got " +
                                std::to_string(n_qubits));
    }
    if (side_a.empty() || static_cast<int>(side_a.size()) >= n_qubits) {
        throw DimensionMismatch("BipartiteSplit: side A must be a nonempty proper subset");
    }
    for (const int q : side_a) {
        if (q < 0 || q >= n_qubits) {
            throw DimensionMismatch("BipartiteSplit: qubit index " + std::to_string(q) +
                                    " out of range");
        }
    }
    // Side A is kept as the smaller side; a larger selection is relabeled to
    // its complement so dim_a <= dim_b always holds.
    if (2 * static_cast<int>(side_a.size()) > n_qubits) {
        for (int q = 0; q < n_qubits; ++q) {
            if (!side_a.contains(q)) {
                side_a_.push_back(q);
            }
        }
    } else {
        side_a_.assign(side_a.begin(), side_a.end());
    }
    dim_a_ = 1 << side_a_.size();
    dim_b_ = 1 << (n_qubits_ - static_cast<int>(side_a_.size()));
}

BipartiteSplit BipartiteSplit::one_vs_rest(int n_qubits, int qubit) {
    return BipartiteSplit(n_qubits, std::set<int>{qubit});
}

bool BipartiteSplit::is_leading_block() const {
    for (size_t k = 0; k < side_a_.size(); ++k) {
        if (side_a_[k] != static_cast<int>(k)) {
            return false;
        }
    }
    return true;
}

double max_negativity(int dim_a) {
    if (dim_a < 2) {
        throw OutOfRange("max_negativity: dim_a must be >= 2");
    }
    return (dim_a - 1) / 2.0;
}

double lipschitz_negativity(int dim_a) {
    if (dim_a < 2) {
        throw OutOfRange("lipschitz_negativity: dim_a must be >= 2");
    }
    return dim_a / 2.0;
}

double lipschitz_normalized_negativity(int dim_a) {
    if (dim_a < 2) {
        throw OutOfRange("lipschitz_normalized_negativity: dim_a must be >= 2");
    }
    return static_cast<double>(dim_a) / (dim_a - 1);
}

LipschitzConstants lipschitz_constants(int dim_a) {
    return LipschitzConstants{lipschitz_negativity(dim_a), lipschitz_normalized_negativity(dim_a),
                              max_negativity(dim_a)};
}

ComplexMatrix permute_to_leading(const ComplexMatrix& m, const BipartiteSplit& split) {
    const int n = split.n_qubits();
    const int d = 1 << n;
    if (m.dim() != d) {
        throw DimensionMismatch("permute_to_leading: matrix dim " + std::to_string(m.dim()) +
                                " is not 2^" + std::to_string(n));
    }

    // New factor order: side-A qubits first, then the rest, both ascending.
    std::vector<int> order(split.side_a());
    for (int q = 0; q < n; ++q) {
        if (std::find(split.side_a().begin(), split.side_a().end(), q) == split.side_a().end()) {
            order.push_back(q);
        }
    }

    std::vector<int> map(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        int out = 0;
        for (int k = 0; k < n; ++k) {
            const int bit = (i >> (n - 1 - order[static_cast<size_t>(k)])) & 1;
            out |= bit << (n - 1 - k);
        }
        map[static_cast<size_t>(i)] = out;
    }

    ComplexMatrix result(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            result(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = m(r, c);
        }
    }
    return result;
}

double negativity_raw(const DensityMatrix& rho, const BipartiteSplit& split) {
    const int d = 1 << split.n_qubits();
    if (rho.dim() != d) {
        throw DimensionMismatch("negativity: state dim " + std::to_string(rho.dim()) +
                                " is not 2^" + std::to_string(split.n_qubits()));
    }
    const ComplexMatrix& base = rho.matrix();
    const ComplexMatrix arranged = split.is_leading_block() ? base : permute_to_leading(base, split);
    const ComplexMatrix transposed = partial_transpose(arranged, split.dim_a(), split.dim_b());
    return (trace_norm_hermitian(transposed) - 1.0) / 2.0;
}

double negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
    const double raw = negativity_raw(rho, split);
    if (raw < 0.0 && raw > -1e-10) {
        return 0.0;
    }
    return raw;
}

double normalized_negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
    return negativity(rho, split) / max_negativity(split.dim_a());
}

ChainReport check_entanglement_difference_chain(const PureState& chi, const PureState& psi,
                                                const QuantumChannel& ch,
                                                const BipartiteSplit& split) {
    const int d = 1 << split.n_qubits();
    if (chi.dim() != d || psi.dim() != d || ch.dim() != d) {
        throw DimensionMismatch("check_entanglement_difference_chain: dimensions disagree");
    }
    const double eta = lipschitz_negativity(split.dim_a());

    const DensityMatrix rho_chi = projector(chi);
    const DensityMatrix rho_psi = projector(psi);
    const DensityMatrix evolved_chi = apply_channel(ch, rho_chi);
    const DensityMatrix evolved_psi = apply_channel(ch, rho_psi);

    ChainReport report{};
    report.difference =
        std::abs(negativity(evolved_chi, split) - negativity(evolved_psi, split));
    report.lipschitz_bound = eta * trace_distance(evolved_chi, evolved_psi);
    report.contraction_bound = eta * trace_distance(rho_chi, rho_psi);
    report.euclidean_bound = 2.0 * eta * euclidean_distance(chi, psi);

    constexpr double slack = 1e-9;
    report.holds_lipschitz = report.difference <= report.lipschitz_bound + slack;
    report.holds_contraction = report.lipschitz_bound <= report.contraction_bound + slack;
    report.holds_euclidean = report.contraction_bound <= report.euclidean_bound + slack;
    return report;
}

} // namespace entdyn
