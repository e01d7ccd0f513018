#include "entdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {

// Reduces a Hermitian matrix (row-major, modified in place) to real
// symmetric tridiagonal form d/e via Householder reflections. The
// subdiagonal of the unitarily similar tridiagonal matrix can be made real
// by a diagonal phase similarity, so only |subdiagonal| is kept.
void tridiagonalize(std::vector<Complex>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<size_t>(i) * n + j]; };

    std::vector<Complex> v(n);
    std::vector<Complex> w(n);

    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1; // length of the column below the diagonal

        double xnorm_sq = 0.0;
        double off_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            const double h = std::norm(at(k + 1 + i, k));
            xnorm_sq += h;
            if (i > 0) {
                off_sq += h;
            }
        }
        if (off_sq == 0.0) {
            continue; // column already tridiagonal at this step
        }

        const Complex x0 = at(k + 1, k);
        const double xnorm = std::sqrt(xnorm_sq);
        const Complex phase =
            std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
        const Complex alpha = -phase * xnorm;

        // v = x - alpha e1; with this sign choice v^dagger x is real, so
        // H = I - tau v v^dagger with tau = 2 / |v|^2 is unitary.
        for (int i = 0; i < m; ++i) {
            v[i] = at(k + 1 + i, k);
        }
        v[0] -= alpha;
        double vnorm_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            vnorm_sq += std::norm(v[i]);
        }
        const double tau = 2.0 / vnorm_sq;

        // p = tau * B * v over the trailing block B = a[k+1.., k+1..]
        for (int i = 0; i < m; ++i) {
            Complex sum{0.0, 0.0};
            const Complex* row = &a[static_cast<size_t>(k + 1 + i) * n + (k + 1)];
            for (int j = 0; j < m; ++j) {
                sum += row[j] * v[j];
            }
            w[i] = tau * sum;
        }
        Complex vdotp{0.0, 0.0};
        for (int i = 0; i < m; ++i) {
            vdotp += std::conj(v[i]) * w[i];
        }
        const Complex kappa = 0.5 * tau * vdotp;
        for (int i = 0; i < m; ++i) {
            w[i] -= kappa * v[i];
        }

        // B <- B - v w^dagger - w v^dagger
        for (int i = 0; i < m; ++i) {
            Complex* row = &a[static_cast<size_t>(k + 1 + i) * n + (k + 1)];
            const Complex vi = v[i];
            const Complex wi = w[i];
            for (int j = 0; j < m; ++j) {
                row[j] -= vi * std::conj(w[j]) + wi * std::conj(v[j]);
            }
        }

        at(k + 1, k) = alpha;
    }

    for (int i = 0; i < n; ++i) {
        d[static_cast<size_t>(i)] = at(i, i).real();
    }
    for (int i = 0; i + 1 < n; ++i) {
        e[static_cast<size_t>(i)] = std::abs(at(i + 1, i));
    }
}

// Implicit-shift QL on a real symmetric tridiagonal matrix, eigenvalues
// only. Budget: 100 shift iterations per eigenvalue.
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 1) {
        return;
    }
    e[static_cast<size_t>(n) - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m != l) {
                if (iter++ == 100) {
                    throw NoConvergence("hermitian_eigenvalues: QL exceeded 100 iterations");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        // underflowed rotation: deflate and restart
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) {
                    continue;
                }
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    const double defect = hermiticity_defect(m);
    if (!(defect <= tol::herm)) {
        throw NotHermitian("hermitian_eigenvalues: defect " + std::to_string(defect) +
                           " exceeds tolerance");
    }

    const int n = m.dim();
    std::vector<Complex> work(m.data(), m.data() + static_cast<size_t>(n) * n);
    std::vector<double> d(static_cast<size_t>(n));
    std::vector<double> e(static_cast<size_t>(n), 0.0);

    tridiagonalize(work, n, d, e);
    ql_eigenvalues(d, e);
    std::sort(d.begin(), d.end());
    return Spectrum{std::move(d)};
}

double trace_norm_hermitian(const ComplexMatrix& m) {
    const Spectrum spec = hermitian_eigenvalues(m);
    double sum = 0.0;
    for (const double lambda : spec.eigenvalues) {
        sum += std::abs(lambda);
    }
    return sum;
}

} // namespace entdyn
