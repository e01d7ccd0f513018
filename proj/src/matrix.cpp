#include "entdyn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace entdyn {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), data_(dim >= 1 ? static_cast<size_t>(dim) * dim : 0) {
    if (dim < 1) {
        throw DimensionMismatch("ComplexMatrix: dimension must be >= 1, got " +
                                std::to_string(dim));
    }
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim < 1) {
        throw DimensionMismatch("ComplexMatrix: dimension must be >= 1, got " +
                                std::to_string(dim));
    }
    if (data_.size() != static_cast<size_t>(dim) * dim) {
        throw DimensionMismatch("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                " does not match dim " + std::to_string(dim));
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matmul");
    const int n = a.dim();
    ComplexMatrix c(n);
    // i-k-j order keeps the inner loop contiguous in row-major storage.
    for (int i = 0; i < n; ++i) {
        const Complex* arow = a.data() + static_cast<size_t>(i) * n;
        Complex* crow = c.data() + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const Complex aik = arow[k];
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            const Complex* brow = b.data() + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    const int n = a.dim();
    ComplexMatrix out(n);
    const size_t count = static_cast<size_t>(n) * n;
    for (size_t i = 0; i < count; ++i) {
        out.data()[i] = a.data()[i] + b.data()[i];
    }
    return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "sub");
    const int n = a.dim();
    ComplexMatrix out(n);
    const size_t count = static_cast<size_t>(n) * n;
    for (size_t i = 0; i < count; ++i) {
        out.data()[i] = a.data()[i] - b.data()[i];
    }
    return out;
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    const size_t count = static_cast<size_t>(n) * n;
    for (size_t i = 0; i < count; ++i) {
        out.data()[i] = factor * m.data()[i];
    }
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (int k = 0; k < db; ++k) {
                for (int l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1 || m.dim() != dim_a * dim_b) {
        throw DimensionMismatch("partial_transpose: dim " + std::to_string(m.dim()) +
                                " is not " + std::to_string(dim_a) + " * " +
                                std::to_string(dim_b));
    }
    ComplexMatrix out(m.dim());
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
            for (int k = 0; k < dim_b; ++k) {
                for (int l = 0; l < dim_b; ++l) {
                    out(i * dim_b + k, j * dim_b + l) = m(i * dim_b + l, j * dim_b + k);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_keep, int dim_traced,
                            bool traced_last) {
    if (dim_keep < 1 || dim_traced < 1 || m.dim() != dim_keep * dim_traced) {
        throw DimensionMismatch("partial_trace: dim " + std::to_string(m.dim()) + " is not " +
                                std::to_string(dim_keep) + " * " + std::to_string(dim_traced));
    }
    ComplexMatrix out(dim_keep);
    if (traced_last) {
        for (int i = 0; i < dim_keep; ++i) {
            for (int j = 0; j < dim_keep; ++j) {
                Complex sum{0.0, 0.0};
                for (int k = 0; k < dim_traced; ++k) {
                    sum += m(i * dim_traced + k, j * dim_traced + k);
                }
                out(i, j) = sum;
            }
        }
    } else {
        for (int i = 0; i < dim_keep; ++i) {
            for (int j = 0; j < dim_keep; ++j) {
                Complex sum{0.0, 0.0};
                for (int k = 0; k < dim_traced; ++k) {
                    sum += m(k * dim_keep + i, k * dim_keep + j);
                }
                out(i, j) = sum;
            }
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    const size_t count = static_cast<size_t>(a.dim()) * a.dim();
    for (size_t i = 0; i < count; ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

} // namespace entdyn
