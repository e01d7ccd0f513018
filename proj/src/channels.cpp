#include "entdyn/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw OutOfRange(std::string(what) + ": probability " + std::to_string(p) +
                         " outside [0, 1]");
    }
}

// rho <- sum_k K_k rho K_k^dagger for a one-qubit channel acting on the
// qubit with bit mask `mask` (qubit 0 is the most significant bit).
void apply_one_qubit_channel(const std::vector<ComplexMatrix>& kraus, int mask,
                             ComplexMatrix& rho, ComplexMatrix& tmp, ComplexMatrix& acc) {
    const int d = rho.dim();
    Complex* out = acc.data();
    std::fill(out, out + static_cast<size_t>(d) * d, Complex{0.0, 0.0});

    for (const ComplexMatrix& k : kraus) {
        const Complex k00 = k(0, 0);
        const Complex k01 = k(0, 1);
        const Complex k10 = k(1, 0);
        const Complex k11 = k(1, 1);

        // rows: tmp = (K on target qubit) * rho
        for (int i = 0; i < d; ++i) {
            if (i & mask) {
                continue;
            }
            const Complex* r0 = rho.data() + static_cast<size_t>(i) * d;
            const Complex* r1 = rho.data() + static_cast<size_t>(i | mask) * d;
            Complex* t0 = tmp.data() + static_cast<size_t>(i) * d;
            Complex* t1 = tmp.data() + static_cast<size_t>(i | mask) * d;
            for (int j = 0; j < d; ++j) {
                t0[j] = k00 * r0[j] + k01 * r1[j];
                t1[j] = k10 * r0[j] + k11 * r1[j];
            }
        }
        // columns: acc += tmp * K^dagger
        const Complex c00 = std::conj(k00);
        const Complex c01 = std::conj(k01);
        const Complex c10 = std::conj(k10);
        const Complex c11 = std::conj(k11);
        for (int i = 0; i < d; ++i) {
            Complex* t = tmp.data() + static_cast<size_t>(i) * d;
            Complex* a = acc.data() + static_cast<size_t>(i) * d;
            for (int j = 0; j < d; ++j) {
                if (j & mask) {
                    continue;
                }
                const Complex t0 = t[j];
                const Complex t1 = t[j | mask];
                a[j] += t0 * c00 + t1 * c01;
                a[j | mask] += t0 * c10 + t1 * c11;
            }
        }
    }
    std::swap(rho, acc);
}

} // namespace

QuantumChannel::QuantumChannel(int dim, std::vector<ComplexMatrix> kraus_ops)
    : dim_(dim), kraus_ops_(std::move(kraus_ops)) {
    if (dim < 1) {
        throw DimensionMismatch("QuantumChannel: dim must be >= 1");
    }
    if (kraus_ops_.empty()) {
        throw InvalidChannel("QuantumChannel: at least one Kraus operator required");
    }
    for (const ComplexMatrix& k : kraus_ops_) {
        if (k.dim() != dim_) {
            throw DimensionMismatch("QuantumChannel: Kraus operator dim " +
                                    std::to_string(k.dim()) + " does not match channel dim " +
                                    std::to_string(dim_));
        }
    }
    ComplexMatrix completeness(dim_);
    for (const ComplexMatrix& k : kraus_ops_) {
        completeness = add(completeness, matmul(adjoint(k), k));
    }
    const double defect = max_abs_diff(completeness, ComplexMatrix::identity(dim_));
    if (!(defect <= tol::norm)) {
        throw InvalidChannel("QuantumChannel: completeness defect " + std::to_string(defect));
    }
}

QuantumChannel QuantumChannel::identity(int dim) {
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(ComplexMatrix::identity(dim));
    return QuantumChannel(dim, std::move(kraus));
}

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim()) {
        throw DimensionMismatch("apply_channel: channel dim " + std::to_string(ch.dim()) +
                                " does not match state dim " + std::to_string(rho.dim()));
    }
    ComplexMatrix out(rho.dim());
    for (const ComplexMatrix& k : ch.kraus_ops()) {
        out = add(out, matmul(matmul(k, rho.matrix()), adjoint(k)));
    }
    return DensityMatrix(std::move(out));
}

QuantumChannel dephasing_qubit(double p) {
    require_probability(p, "dephasing_qubit");
    ComplexMatrix k0(2);
    k0(0, 0) = Complex{1.0, 0.0};
    k0(1, 1) = Complex{std::sqrt(1.0 - p), 0.0};
    ComplexMatrix k1(2);
    k1(1, 1) = Complex{std::sqrt(p), 0.0};
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::move(k0));
    kraus.push_back(std::move(k1));
    return QuantumChannel(2, std::move(kraus));
}

QuantumChannel amplitude_damping_qubit(double gamma) {
    require_probability(gamma, "amplitude_damping_qubit");
    ComplexMatrix k0(2);
    k0(0, 0) = Complex{1.0, 0.0};
    k0(1, 1) = Complex{std::sqrt(1.0 - gamma), 0.0};
    ComplexMatrix k1(2);
    k1(0, 1) = Complex{std::sqrt(gamma), 0.0};
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::move(k0));
    kraus.push_back(std::move(k1));
    return QuantumChannel(2, std::move(kraus));
}

QuantumChannel depolarizing_qubit(double p) {
    require_probability(p, "depolarizing_qubit");
    const double s0 = std::sqrt(1.0 - 3.0 * p / 4.0);
    const double s = std::sqrt(p / 4.0);
    ComplexMatrix k0(2);
    k0(0, 0) = k0(1, 1) = Complex{s0, 0.0};
    ComplexMatrix kx(2);
    kx(0, 1) = kx(1, 0) = Complex{s, 0.0};
    ComplexMatrix ky(2);
    ky(0, 1) = Complex{0.0, -s};
    ky(1, 0) = Complex{0.0, s};
    ComplexMatrix kz(2);
    kz(0, 0) = Complex{s, 0.0};
    kz(1, 1) = Complex{-s, 0.0};
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::move(k0));
    kraus.push_back(std::move(kx));
    kraus.push_back(std::move(ky));
    kraus.push_back(std::move(kz));
    return QuantumChannel(2, std::move(kraus));
}

QuantumChannel tensor_local_channels(const std::vector<QuantumChannel>& per_qubit) {
    if (per_qubit.empty()) {
        throw DimensionMismatch("tensor_local_channels: empty factor list");
    }
    for (const QuantumChannel& ch : per_qubit) {
        if (ch.dim() != 2) {
            throw DimensionMismatch("tensor_local_channels: factor dim " +
                                    std::to_string(ch.dim()) + " is not a single qubit");
        }
    }
    std::vector<ComplexMatrix> products;
    products.push_back(ComplexMatrix::identity(1));
    for (const QuantumChannel& ch : per_qubit) {
        std::vector<ComplexMatrix> next;
        next.reserve(products.size() * ch.kraus_ops().size());
        for (const ComplexMatrix& left : products) {
            for (const ComplexMatrix& k : ch.kraus_ops()) {
                next.push_back(kron(left, k));
            }
        }
        products = std::move(next);
    }
    const int dim = products.front().dim();
    return QuantumChannel(dim, std::move(products));
}

DensityMatrix apply_local_channels(const std::vector<QuantumChannel>& per_qubit,
                                   const DensityMatrix& rho) {
    const int n = static_cast<int>(per_qubit.size());
    if (n == 0) {
        throw DimensionMismatch("apply_local_channels: empty factor list");
    }
    if (rho.dim() != (1 << n)) {
        throw DimensionMismatch("apply_local_channels: state dim " + std::to_string(rho.dim()) +
                                " is not 2^" + std::to_string(n));
    }
    ComplexMatrix work = rho.matrix();
    ComplexMatrix tmp(work.dim());
    ComplexMatrix acc(work.dim());
    for (int q = 0; q < n; ++q) {
        if (per_qubit[static_cast<size_t>(q)].dim() != 2) {
            throw DimensionMismatch("apply_local_channels: factor is not a single qubit");
        }
        const int mask = 1 << (n - 1 - q);
        apply_one_qubit_channel(per_qubit[static_cast<size_t>(q)].kraus_ops(), mask, work, tmp,
                                acc);
    }
    return DensityMatrix(std::move(work));
}

double markov_p(double gamma, double t) {
    if (!(gamma >= 0.0)) {
        throw OutOfRange("markov_p: rate " + std::to_string(gamma) + " is negative");
    }
    if (!(t >= 0.0)) {
        throw OutOfRange("markov_p: time " + std::to_string(t) + " is negative");
    }
    return 1.0 - std::exp(-gamma * t);
}

Dilation::Dilation(int dim_system_in, int dim_env_in, ComplexMatrix unitary_in,
                   DensityMatrix env_state_in)
    : dim_system(dim_system_in),
      dim_env(dim_env_in),
      unitary(std::move(unitary_in)),
      env_state(std::move(env_state_in)) {
    if (dim_system < 1 || dim_env < 1 || unitary.dim() != dim_system * dim_env ||
        env_state.dim() != dim_env) {
        throw DimensionMismatch("Dilation: inconsistent dimensions");
    }
    const double defect =
        max_abs_diff(matmul(adjoint(unitary), unitary), ComplexMatrix::identity(unitary.dim()));
    if (!(defect <= 1e-10)) {
        throw NotUnitary("Dilation: U^dagger U defect " + std::to_string(defect));
    }
}

DensityMatrix apply_dilation(const Dilation& d, const DensityMatrix& rho) {
    if (rho.dim() != d.dim_system) {
        throw DimensionMismatch("apply_dilation: state dim " + std::to_string(rho.dim()) +
                                " does not match system dim " + std::to_string(d.dim_system));
    }
    const ComplexMatrix joint = kron(rho.matrix(), d.env_state.matrix());
    const ComplexMatrix evolved = matmul(matmul(d.unitary, joint), adjoint(d.unitary));
    return DensityMatrix(partial_trace(evolved, d.dim_system, d.dim_env, true));
}

Dilation dephasing_dilation(double p) {
    require_probability(p, "dephasing_dilation");
    const double theta = std::asin(std::sqrt(p));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // Joint basis |system, env>: rotate the environment iff the system is |1>.
    ComplexMatrix u(4);
    u(0, 0) = Complex{1.0, 0.0};
    u(1, 1) = Complex{1.0, 0.0};
    u(2, 2) = Complex{c, 0.0};
    u(3, 2) = Complex{s, 0.0};
    u(2, 3) = Complex{-s, 0.0};
    u(3, 3) = Complex{c, 0.0};
    return Dilation(2, 2, std::move(u), projector(PureState::basis_state(2, 0)));
}

double estimate_contraction(const QuantumChannel& ch, int n_pairs, RngStream& rng) {
    if (n_pairs < 1) {
        throw OutOfRange("estimate_contraction: n_pairs must be >= 1");
    }
    double worst = 0.0;
    for (int pair = 0; pair < n_pairs; ++pair) {
        int rejected = 0;
        for (;;) {
            const DensityMatrix rho = projector(sample_haar_pure(ch.dim(), rng));
            const DensityMatrix omega = projector(sample_haar_pure(ch.dim(), rng));
            const double before = trace_distance(rho, omega);
            if (before < 1e-12) {
                if (++rejected >= 10) {
                    throw DegeneratePair("estimate_contraction: 10 consecutive degenerate pairs");
                }
                continue;
            }
            const double after = trace_distance(apply_channel(ch, rho), apply_channel(ch, omega));
            worst = std::max(worst, after / before);
            break;
        }
    }
    return worst;
}

} // namespace entdyn
