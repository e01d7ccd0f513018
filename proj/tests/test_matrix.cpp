#include <doctest.h>

#include <cmath>

#include "entdyn/matrix.hpp"
#include "entdyn/rng.hpp"
#include "oracles.hpp"

using namespace entdyn;

TEST_CASE("identity and trace") {
    const ComplexMatrix id4 = ComplexMatrix::identity(4);
    CHECK(trace(id4) == Complex{4.0, 0.0});
    CHECK(hermiticity_defect(id4) == 0.0);
}

TEST_CASE("adjoint is an involution") {
    RngStream rng(11, 0);
    const ComplexMatrix a = oracles::random_matrix(5, rng);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
}

TEST_CASE("matmul matches the triple-loop reference") {
    RngStream rng(12, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracles::random_matrix(3, rng);
        const ComplexMatrix b = oracles::random_matrix(3, rng);
        CHECK(max_abs_diff(matmul(a, b), oracles::matmul_loop(a, b)) < 1e-13);
    }
}

TEST_CASE("trace of A A^dagger is nonnegative") {
    RngStream rng(13, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracles::random_matrix(4, rng);
        const Complex t = trace(matmul(a, adjoint(a)));
        CHECK(t.real() >= 0.0);
        CHECK(std::abs(t.imag()) < 1e-12);
    }
}

TEST_CASE("dimension mismatches throw") {
    const ComplexMatrix a(2);
    const ComplexMatrix b(3);
    CHECK_THROWS_AS(matmul(a, b), DimensionMismatch);
    CHECK_THROWS_AS(add(a, b), DimensionMismatch);
    CHECK_THROWS_AS(partial_transpose(b, 2, 2), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(b, 2, 2, true), DimensionMismatch);
    CHECK_THROWS_AS(ComplexMatrix(0), DimensionMismatch);
}

TEST_CASE("kron of identities and diagonal blocks") {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(id2, id2), ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix diag(2);
    diag(0, 0) = Complex{2.0, 0.0};
    diag(1, 1) = Complex{-3.0, 0.0};
    const ComplexMatrix out = kron(diag, id2);
    CHECK(out.dim() == 4);
    CHECK(out(0, 0) == Complex{2.0, 0.0});
    CHECK(out(1, 1) == Complex{2.0, 0.0});
    CHECK(out(2, 2) == Complex{-3.0, 0.0});
    CHECK(out(3, 3) == Complex{-3.0, 0.0});
}

TEST_CASE("kron matches the four-index loop reference") {
    RngStream rng(14, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = oracles::random_matrix(2, rng);
        const ComplexMatrix b = oracles::random_matrix(2, rng);
        CHECK(max_abs_diff(kron(a, b), oracles::kron_loop(a, b)) == 0.0);
    }
}

TEST_CASE("partial transpose of a product transposes the trailing factor") {
    RngStream rng(15, 0);
    const ComplexMatrix a = oracles::random_hermitian(2, rng);
    const ComplexMatrix b = oracles::random_hermitian(2, rng);
    ComplexMatrix bt(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) bt(i, j) = b(j, i);
    CHECK(max_abs_diff(partial_transpose(kron(a, b), 2, 2), kron(a, bt)) == 0.0);
}

TEST_CASE("partial transpose is an involution and preserves structure") {
    RngStream rng(16, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix m = oracles::random_hermitian(6, rng);
        const ComplexMatrix once = partial_transpose(m, 2, 3);
        CHECK(max_abs_diff(partial_transpose(once, 2, 3), m) == 0.0);
        CHECK(hermiticity_defect(once) == 0.0);
        CHECK(std::abs(trace(once) - trace(m)) == 0.0);
    }
}

TEST_CASE("partial trace of a product recovers the kept factor") {
    RngStream rng(17, 0);
    const ComplexMatrix a = oracles::random_matrix(3, rng);
    const ComplexMatrix b = oracles::random_matrix(2, rng);
    const Complex tb = trace(b);

    const ComplexMatrix over_last = partial_trace(kron(a, b), 3, 2, true);
    CHECK(max_abs_diff(over_last, scale(tb, a)) < 1e-12);

    const ComplexMatrix over_first = partial_trace(kron(b, a), 3, 2, false);
    CHECK(max_abs_diff(over_first, scale(tb, a)) < 1e-12);
}

TEST_CASE("partial trace matches the index-sum reference on random input") {
    RngStream rng(18, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix m = oracles::random_hermitian(4, rng);
        const ComplexMatrix traced = partial_trace(m, 2, 2, true);
        CHECK(max_abs_diff(traced, oracles::partial_trace_last_loop(m, 2, 2)) == 0.0);
        CHECK(std::abs(trace(traced) - trace(m)) < 1e-13);
        CHECK(hermiticity_defect(traced) < 1e-14);
    }
}
