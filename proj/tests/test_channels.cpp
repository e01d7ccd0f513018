#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "entdyn/channels.hpp"
#include "entdyn/matrix.hpp"
#include "entdyn/rng.hpp"
#include "entdyn/states.hpp"
#include "oracles.hpp"

using namespace entdyn;

namespace {

DensityMatrix plus_state() {
    return projector(PureState::normalized({Complex{1.0, 0.0}, Complex{1.0, 0.0}}));
}

DensityMatrix random_mixed(int dim, RngStream& rng) {
    // convex mixture of two random pure states
    const DensityMatrix a = projector(sample_haar_pure(dim, rng));
    const DensityMatrix b = projector(sample_haar_pure(dim, rng));
    return DensityMatrix(
        add(scale(Complex{0.7, 0.0}, a.matrix()), scale(Complex{0.3, 0.0}, b.matrix())));
}

} // namespace

TEST_CASE("dephasing endpoints") {
    const DensityMatrix plus = plus_state();

    const DensityMatrix unchanged = apply_channel(dephasing_qubit(0.0), plus);
    CHECK(max_abs_diff(unchanged.matrix(), plus.matrix()) < 1e-14);

    const DensityMatrix killed = apply_channel(dephasing_qubit(1.0), plus);
    CHECK(std::abs(killed.matrix()(0, 1)) < 1e-14);
    CHECK(killed.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(killed.matrix()(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("dephasing scales coherences by sqrt(1 - p)") {
    for (const double p : {0.1, 0.4, 0.75}) {
        const DensityMatrix out = apply_channel(dephasing_qubit(p), plus_state());
        CHECK(out.matrix()(0, 1).real() ==
              doctest::Approx(0.5 * std::sqrt(1.0 - p)).epsilon(1e-13));
        CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("probability arguments are range checked") {
    CHECK_THROWS_AS(dephasing_qubit(-0.1), OutOfRange);
    CHECK_THROWS_AS(dephasing_qubit(1.1), OutOfRange);
    CHECK_THROWS_AS(amplitude_damping_qubit(2.0), OutOfRange);
    CHECK_THROWS_AS(depolarizing_qubit(-1.0), OutOfRange);
    CHECK_THROWS_AS(markov_p(-1.0, 1.0), OutOfRange);
    CHECK_THROWS_AS(markov_p(1.0, -1.0), OutOfRange);
}

TEST_CASE("kraus completeness is enforced") {
    // half an identity is not trace preserving
    std::vector<ComplexMatrix> bad;
    bad.push_back(scale(Complex{0.5, 0.0}, ComplexMatrix::identity(2)));
    CHECK_THROWS_AS(QuantumChannel(2, std::move(bad)), InvalidChannel);
    CHECK_THROWS_AS(QuantumChannel(2, std::vector<ComplexMatrix>{}), InvalidChannel);

    CHECK_NOTHROW(QuantumChannel::identity(3));
}

TEST_CASE("identity channel leaves states alone") {
    RngStream rng(41, 0);
    const DensityMatrix rho = random_mixed(4, rng);
    const DensityMatrix out = apply_channel(QuantumChannel::identity(4), rho);
    CHECK(max_abs_diff(out.matrix(), rho.matrix()) < 1e-14);
}

TEST_CASE("dephasing composes as a semigroup") {
    // applying p1 then p2 equals a single application with
    // p12 = 1 - (1 - p1)(1 - p2)
    const double p1 = 0.3;
    const double p2 = 0.55;
    const double p12 = 1.0 - (1.0 - p1) * (1.0 - p2);

    RngStream rng(42, 0);
    const DensityMatrix rho = random_mixed(2, rng);
    const DensityMatrix two_step =
        apply_channel(dephasing_qubit(p2), apply_channel(dephasing_qubit(p1), rho));
    const DensityMatrix one_step = apply_channel(dephasing_qubit(p12), rho);
    CHECK(max_abs_diff(two_step.matrix(), one_step.matrix()) < 1e-13);
}

TEST_CASE("markov probability") {
    CHECK(markov_p(1.0, 0.0) == 0.0);
    CHECK(markov_p(0.0, 5.0) == 0.0);
    CHECK(markov_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(markov_p(2.0, 50.0) == doctest::Approx(1.0).epsilon(1e-12));

    // time additivity matches probability composition
    const double gamma = 0.8;
    const double t1 = 0.4;
    const double t2 = 1.3;
    const double combined = 1.0 - (1.0 - markov_p(gamma, t1)) * (1.0 - markov_p(gamma, t2));
    CHECK(markov_p(gamma, t1 + t2) == doctest::Approx(combined).epsilon(1e-14));
}

TEST_CASE("tensor product channel enumerates all kraus combinations") {
    const std::vector<QuantumChannel> per_qubit(3, dephasing_qubit(0.25));
    const QuantumChannel product = tensor_local_channels(per_qubit);
    CHECK(product.dim() == 8);
    CHECK(product.kraus_ops().size() == 8); // 2^3 combinations
}

TEST_CASE("product channel factorizes on product states") {
    RngStream rng(43, 0);
    const PureState a = sample_haar_pure(2, rng);
    const PureState b = sample_haar_pure(2, rng);
    const DensityMatrix ra = projector(a);
    const DensityMatrix rb = projector(b);
    const DensityMatrix joint = DensityMatrix(kron(ra.matrix(), rb.matrix()));

    const QuantumChannel ca = dephasing_qubit(0.2);
    const QuantumChannel cb = amplitude_damping_qubit(0.6);
    const DensityMatrix out = apply_channel(tensor_local_channels({ca, cb}), joint);
    const ComplexMatrix expected =
        kron(apply_channel(ca, ra).matrix(), apply_channel(cb, rb).matrix());
    CHECK(max_abs_diff(out.matrix(), expected) < 1e-13);
}

TEST_CASE("fast local application matches the dense product channel") {
    RngStream rng(44, 0);
    for (const int n : {1, 2, 3}) {
        std::vector<QuantumChannel> per_qubit;
        per_qubit.push_back(dephasing_qubit(0.3));
        if (n > 1) per_qubit.push_back(amplitude_damping_qubit(0.45));
        if (n > 2) per_qubit.push_back(depolarizing_qubit(0.2));

        const DensityMatrix rho = random_mixed(1 << n, rng);
        const DensityMatrix fast = apply_local_channels(per_qubit, rho);
        const DensityMatrix dense = apply_channel(tensor_local_channels(per_qubit), rho);
        CHECK(max_abs_diff(fast.matrix(), dense.matrix()) < 1e-12);
    }
}

TEST_CASE("uniform local dephasing damps by hamming distance") {
    // With s = sqrt(1 - p), entry (i, j) must pick up s^popcount(i xor j).
    const double p = 0.6;
    const double s = std::sqrt(1.0 - p);
    const int n = 3;
    RngStream rng(45, 0);
    const DensityMatrix rho = random_mixed(1 << n, rng);
    const std::vector<QuantumChannel> per_qubit(n, dephasing_qubit(p));
    const DensityMatrix out = apply_local_channels(per_qubit, rho);
    for (int i = 0; i < (1 << n); ++i) {
        for (int j = 0; j < (1 << n); ++j) {
            const int hamming = std::popcount(static_cast<unsigned>(i ^ j));
            const Complex expected = rho.matrix()(i, j) * std::pow(s, hamming);
            CHECK(std::abs(out.matrix()(i, j) - expected) < 1e-13);
        }
    }
}

TEST_CASE("amplitude damping at full strength resets to the ground state") {
    RngStream rng(46, 0);
    const DensityMatrix out = apply_channel(amplitude_damping_qubit(1.0), random_mixed(2, rng));
    CHECK(out.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(out.matrix()(1, 1)) < 1e-13);
    CHECK(std::abs(out.matrix()(0, 1)) < 1e-13);
}

TEST_CASE("full depolarizing outputs the maximally mixed state") {
    RngStream rng(47, 0);
    const DensityMatrix out = apply_channel(depolarizing_qubit(1.0), random_mixed(2, rng));
    CHECK(max_abs_diff(out.matrix(), DensityMatrix::maximally_mixed(2).matrix()) < 1e-13);
}

TEST_CASE("dilation constructor validates the unitary") {
    ComplexMatrix not_unitary = ComplexMatrix::identity(4);
    not_unitary(0, 0) = Complex{2.0, 0.0};
    CHECK_THROWS_AS(Dilation(2, 2, not_unitary, projector(PureState::basis_state(2, 0))),
                    NotUnitary);
    CHECK_THROWS_AS(Dilation(2, 3, ComplexMatrix::identity(4),
                             projector(PureState::basis_state(3, 0))),
                    DimensionMismatch);
}

TEST_CASE("identity dilation acts trivially") {
    RngStream rng(48, 0);
    const DensityMatrix rho = random_mixed(2, rng);
    const Dilation d(2, 2, ComplexMatrix::identity(4), DensityMatrix::maximally_mixed(2));
    CHECK(max_abs_diff(apply_dilation(d, rho).matrix(), rho.matrix()) < 1e-13);
}

TEST_CASE("swap dilation replaces the system with the environment state") {
    ComplexMatrix swap_u(4);
    swap_u(0, 0) = Complex{1.0, 0.0};
    swap_u(1, 2) = Complex{1.0, 0.0};
    swap_u(2, 1) = Complex{1.0, 0.0};
    swap_u(3, 3) = Complex{1.0, 0.0};

    RngStream rng(49, 0);
    const DensityMatrix env = random_mixed(2, rng);
    const Dilation d(2, 2, swap_u, env);
    const DensityMatrix out = apply_dilation(d, random_mixed(2, rng));
    CHECK(max_abs_diff(out.matrix(), env.matrix()) < 1e-13);
}

TEST_CASE("dephasing dilation reproduces the kraus channel") {
    RngStream rng(50, 0);
    for (const double p : {0.0, 0.3, 0.7, 1.0}) {
        const Dilation d = dephasing_dilation(p);
        const QuantumChannel ch = dephasing_qubit(p);
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_mixed(2, rng);
            CHECK(max_abs_diff(apply_dilation(d, rho).matrix(),
                               apply_channel(ch, rho).matrix()) < 1e-12);
        }
    }
}

TEST_CASE("unitary channels have contraction ratio one") {
    RngStream rng(51, 0);
    const ComplexMatrix u = oracles::random_unitary(2, rng);
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(u);
    const QuantumChannel ch(2, std::move(kraus));
    const double est = estimate_contraction(ch, 50, rng);
    CHECK(est == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sampled contraction ratios never exceed one") {
    RngStream rng(52, 0);
    for (const double p : {0.2, 0.5, 0.9}) {
        const double est = estimate_contraction(dephasing_qubit(p), 200, rng);
        CHECK(est <= 1.0 + 1e-9);
        CHECK(est > 0.1); // dephasing never collapses all distances
    }
    CHECK_THROWS_AS(estimate_contraction(dephasing_qubit(0.5), 0, rng), OutOfRange);
}
