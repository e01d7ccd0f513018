// Dense square complex matrices and the tensor-index operations built on
// them: Kronecker products, partial transpose, partial trace. Row-major
// storage; subsystem ordering is most-significant-factor-first, i.e. the
// composite index of an element of H_A (x) H_B is i_A * dim_B + i_B.

#pragma once

#include <complex>
#include <vector>

#include "entdyn/errors.hpp"

namespace entdyn {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(int dim);

    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return data_[static_cast<size_t>(row) * dim_ + col]; }
    const Complex& operator()(int row, int col) const {
        return data_[static_cast<size_t>(row) * dim_ + col];
    }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

private:
    int dim_;
    std::vector<Complex> data_;
};

// Elementwise and product arithmetic.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex factor, const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return sub(a, b); }
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& m) { return scale(factor, m); }
inline ComplexMatrix operator*(double factor, const ComplexMatrix& m) {
    return scale(Complex{factor, 0.0}, m);
}

/// Kronecker product; result dimension dim(a) * dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposition of the trailing tensor factor of a bipartite operator on
/// H_A (x) H_B with dim(m) = dim_a * dim_b:
///   out[(i,k),(j,l)] = m[(i,l),(j,k)],  i,j < dim_a,  k,l < dim_b.
/// An involution; preserves Hermiticity and trace exactly.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b);

/// Trace out one tensor factor of an operator on a product space with
/// dim(m) = dim_keep * dim_traced. If traced_last, the traced factor is the
/// trailing (least significant) one; otherwise it is the leading factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_keep, int dim_traced,
                            bool traced_last);

/// Max entrywise |m - m^dagger|; zero for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);

/// Max entrywise |a - b|. Test and validation helper.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace entdyn
