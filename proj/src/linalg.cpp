#include "aitchison/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace aitchison {

ComplexMatrix EigenDecomposition::reconstruct() const {
    const int n = eigenvectors.rows();
    ComplexMatrix scaled = eigenvectors;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[static_cast<std::size_t>(j)];
    return scaled * eigenvectors.adjoint();
}

namespace {

constexpr double kOffDiagTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating the (p, q) pivot.
//
// With beta = M(p,q) = |beta| e^{i phi}, the similarity first strips the
// phase (diag(1, e^{-i phi}) on the p/q block) and then applies the real
// rotation [[c, s], [-s, c]] chosen so the phase-stripped 2x2 block
// diagonalizes: tau = (M_qq - M_pp) / (2 |beta|),
// t = sign(tau) / (|tau| + sqrt(1 + tau^2)), c = 1/sqrt(1 + t^2), s = t c.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& v, int p, int q) {
    const Complex beta = m(p, q);
    const double abs_beta = std::abs(beta);
    if (abs_beta == 0.0) return;

    const Complex phase = beta / abs_beta;
    const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * abs_beta);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Combined block G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
    const Complex gqp = -s * std::conj(phase);
    const Complex gqq = c * std::conj(phase);

    const int n = m.rows();

    // M <- M G (columns p, q)
    for (int r = 0; r < n; ++r) {
        const Complex mp = m(r, p);
        const Complex mq = m(r, q);
        m(r, p) = mp * c + mq * gqp;
        m(r, q) = mp * s + mq * gqq;
    }
    // M <- G^* M (rows p, q)
    for (int cidx = 0; cidx < n; ++cidx) {
        const Complex mp = m(p, cidx);
        const Complex mq = m(q, cidx);
        m(p, cidx) = c * mp + std::conj(gqp) * mq;
        m(q, cidx) = s * mp + std::conj(gqq) * mq;
    }
    // The rotation annihilates the pivot in exact arithmetic.
    m(p, q) = Complex{0.0, 0.0};
    m(q, p) = Complex{0.0, 0.0};

    // V <- V G
    for (int r = 0; r < n; ++r) {
        const Complex vp = v(r, p);
        const Complex vq = v(r, q);
        v(r, p) = vp * c + vq * gqp;
        v(r, q) = vp * s + vq * gqq;
    }
}

} // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& input) {
    const int n = input.dim();
    ComplexMatrix m = input.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, m.frobenius_norm());
    bool converged = off_diagonal_frobenius(m) <= kOffDiagTol * scale;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(m, v, p, q);
        converged = off_diagonal_frobenius(m) <= kOffDiagTol * scale;
    }
    if (!converged) {
        throw EigNonConvergence("hermitian_eig: no convergence after " +
                                std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&m](int a, int b) { return m(a, a).real() < m(b, b).real(); });

    EigenDecomposition eig;
    eig.eigenvalues.resize(static_cast<std::size_t>(n));
    eig.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        eig.eigenvalues[static_cast<std::size_t>(j)] = m(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) eig.eigenvectors(i, j) = v(i, order[j]);
    }
    return eig;
}

namespace {

template <typename F>
HermitianMatrix spectral_map(const EigenDecomposition& eig, F f) {
    const int n = eig.eigenvectors.rows();
    ComplexMatrix scaled = eig.eigenvectors;
    for (int j = 0; j < n; ++j) {
        const double fj = f(eig.eigenvalues[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) scaled(i, j) *= fj;
    }
    return HermitianMatrix::symmetrized(scaled * eig.eigenvectors.adjoint());
}

} // namespace

HermitianMatrix matrix_log_pd(const HermitianMatrix& m, double eps_pd) {
    EigenDecomposition eig = hermitian_eig(m);
    if (eig.eigenvalues.front() <= eps_pd) {
        throw NotPositiveDefinite("matrix_log_pd: min eigenvalue " +
                                  std::to_string(eig.eigenvalues.front()) + " <= eps_pd");
    }
    return spectral_map(eig, [](double x) { return std::log(x); });
}

HermitianMatrix matrix_exp_h(const HermitianMatrix& m) {
    EigenDecomposition eig = hermitian_eig(m);
    if (eig.eigenvalues.back() > 700.0) {
        throw std::overflow_error("matrix_exp_h: max eigenvalue " +
                                  std::to_string(eig.eigenvalues.back()) + " > 700");
    }
    return spectral_map(eig, [](double x) { return std::exp(x); });
}

HermitianMatrix matrix_inverse_pd(const HermitianMatrix& m, double eps_pd) {
    EigenDecomposition eig = hermitian_eig(m);
    if (eig.eigenvalues.front() <= eps_pd) {
        throw NotPositiveDefinite("matrix_inverse_pd: min eigenvalue " +
                                  std::to_string(eig.eigenvalues.front()) + " <= eps_pd");
    }
    return spectral_map(eig, [](double x) { return 1.0 / x; });
}

double Rng::uniform() {
    // 53 high bits of the engine output; exact on every platform.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex{re, im};
}

HermitianMatrix random_density(int dim, std::uint64_t seed) {
    if (dim < 2) throw DimensionMismatch("random_density: dim must be >= 2");
    Rng rng(seed);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix w = g * g.adjoint();
    constexpr double kFloor = 1e-3;
    for (int i = 0; i < dim; ++i) w(i, i) += kFloor;
    const double tr = w.trace().real();
    w *= Complex{1.0 / tr, 0.0};
    return HermitianMatrix::symmetrized(w);
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
    if (dim < 2) throw DimensionMismatch("random_unitary: dim must be >= 2");
    Rng rng(seed);
    ComplexMatrix u(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) u(i, j) = rng.complex_gaussian();

    // Modified Gram-Schmidt over columns, run twice; the implicit R keeps a
    // positive diagonal, which fixes the phase convention.
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < j; ++k) {
                Complex proj{0.0, 0.0};
                for (int i = 0; i < dim; ++i) proj += std::conj(u(i, k)) * u(i, j);
                for (int i = 0; i < dim; ++i) u(i, j) -= proj * u(i, k);
            }
            double nrm = 0.0;
            for (int i = 0; i < dim; ++i) nrm += std::norm(u(i, j));
            nrm = std::sqrt(nrm);
            for (int i = 0; i < dim; ++i) u(i, j) /= nrm;
        }
    }
    return u;
}

} // namespace aitchison
