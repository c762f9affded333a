#include "aitchison/state_space.hpp"

#include <cmath>
#include <string>

namespace aitchison {

namespace {

void require_same_dim(int a, int b, const char* op) {
    if (a != b) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a) +
                                " and " + std::to_string(b) + " differ");
    }
}

// Trace computed with extended-precision accumulation.
long double trace_long(const HermitianMatrix& m) {
    long double t = 0.0L;
    for (int i = 0; i < m.dim(); ++i) t += static_cast<long double>(m(i, i).real());
    return t;
}

HermitianMatrix subtract_trace_multiple(const HermitianMatrix& m) {
    ComplexMatrix out = m.matrix();
    const int n = m.dim();
    long double mean = trace_long(m) / n;
    for (int i = 0; i < n; ++i) out(i, i) -= static_cast<double>(mean);
    // Second pass flushes the leftover rounding in the diagonal.
    long double rest = 0.0L;
    for (int i = 0; i < n; ++i) rest += static_cast<long double>(out(i, i).real());
    const double correction = static_cast<double>(rest / n);
    for (int i = 0; i < n; ++i) out(i, i) -= correction;
    return HermitianMatrix::symmetrized(out);
}

} // namespace

DensityState::DensityState(const HermitianMatrix& m, double eps_pd) {
    const double tr = m.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw NotUnitTrace("DensityState: trace " + std::to_string(tr) + " deviates from 1");
    }
    HermitianMatrix scaled = (1.0 / tr) * m;
    EigenDecomposition eig = hermitian_eig(scaled);
    if (eig.eigenvalues.front() <= eps_pd) {
        throw NotPositiveDefinite("DensityState: min eigenvalue " +
                                  std::to_string(eig.eigenvalues.front()) + " <= eps_pd");
    }
    matrix_ = std::move(scaled);
    eig_ = std::move(eig);
}

DensityState DensityState::normalized(const HermitianMatrix& m, double eps_pd) {
    const double tr = m.trace();
    if (!(tr > 0.0)) {
        throw NotPositiveDefinite("DensityState::normalized: trace " + std::to_string(tr) +
                                  " not positive");
    }
    HermitianMatrix scaled = (1.0 / tr) * m;
    EigenDecomposition eig = hermitian_eig(scaled);
    if (eig.eigenvalues.front() <= eps_pd) {
        throw NotPositiveDefinite("DensityState::normalized: min eigenvalue " +
                                  std::to_string(eig.eigenvalues.front()) + " <= eps_pd");
    }
    DensityState d;
    d.matrix_ = std::move(scaled);
    d.eig_ = std::move(eig);
    return d;
}

DensityState DensityState::maximally_mixed(int n) {
    if (n < 2) throw DimensionMismatch("maximally_mixed: dim must be >= 2");
    return DensityState((1.0 / n) * HermitianMatrix::identity(n));
}

namespace {

HermitianMatrix spectral_from(const EigenDecomposition& eig, double (*f)(double)) {
    const int n = eig.eigenvectors.rows();
    ComplexMatrix scaled = eig.eigenvectors;
    for (int j = 0; j < n; ++j) {
        const double fj = f(eig.eigenvalues[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) scaled(i, j) *= fj;
    }
    return HermitianMatrix::symmetrized(scaled * eig.eigenvectors.adjoint());
}

} // namespace

HermitianMatrix DensityState::log_matrix() const {
    return spectral_from(eig_, [](double x) { return std::log(x); });
}

double DensityState::log_trace() const {
    long double t = 0.0L;
    for (double lam : eig_.eigenvalues) t += std::log(static_cast<long double>(lam));
    return static_cast<double>(t);
}

HermitianMatrix DensityState::sqrt_matrix() const {
    return spectral_from(eig_, [](double x) { return std::sqrt(x); });
}

HermitianMatrix DensityState::inverse_matrix() const {
    return spectral_from(eig_, [](double x) { return 1.0 / x; });
}

Hamiltonian::Hamiltonian(const HermitianMatrix& m, bool traceless)
    : matrix_(m), traceless_(traceless) {
    if (traceless_ && std::abs(matrix_.trace()) > 1e-10) {
        throw NotTraceless("Hamiltonian: trace " + std::to_string(matrix_.trace()) +
                           " exceeds traceless tolerance");
    }
}

InverseTemperature::InverseTemperature(double b) : beta(b) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("InverseTemperature: beta must be positive, got " +
                                    std::to_string(b));
    }
}

DensityState perturb(const DensityState& a, const DensityState& b) {
    require_same_dim(a.dim(), b.dim(), "perturb");
    return DensityState::normalized(matrix_exp_h(a.log_matrix() + b.log_matrix()));
}

DensityState perturb(const HermitianMatrix& a, const HermitianMatrix& b, double eps_pd) {
    return perturb(DensityState::normalized(a, eps_pd), DensityState::normalized(b, eps_pd));
}

DensityState power(double lambda, const DensityState& a) {
    return DensityState::normalized(matrix_exp_h(lambda * a.log_matrix()));
}

DensityState power(double lambda, const HermitianMatrix& a, double eps_pd) {
    return power(lambda, DensityState::normalized(a, eps_pd));
}

DensityState negate(const DensityState& a) { return power(-1.0, a); }

DensityState subtract(const DensityState& a, const DensityState& b) {
    require_same_dim(a.dim(), b.dim(), "subtract");
    return perturb(a, negate(b));
}

double inner(const DensityState& a, const DensityState& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    const double n = a.dim();
    // (1/n) Tr(log A log B) - (1/n^2) Tr(log A) Tr(log B), evaluated through
    // trace-centered logs: algebraically identical, but free of the
    // catastrophic cancellation that would otherwise floor small norms near
    // sqrt(ulp).
    const HermitianMatrix ca = subtract_trace_multiple(a.log_matrix());
    const HermitianMatrix cb = subtract_trace_multiple(b.log_matrix());
    return hs_inner(ca, cb) / n;
}

double inner(const HermitianMatrix& a, const HermitianMatrix& b, double eps_pd) {
    return inner(DensityState::normalized(a, eps_pd), DensityState::normalized(b, eps_pd));
}

double norm(const DensityState& a) {
    return std::sqrt(std::max(0.0, inner(a, a)));
}

double distance(const DensityState& a, const DensityState& b) {
    return norm(subtract(a, b));
}

Hamiltonian clr(const DensityState& a) {
    return Hamiltonian(subtract_trace_multiple(a.log_matrix()), /*traceless=*/true);
}

DensityState gibbs(const Hamiltonian& h, InverseTemperature beta) {
    return DensityState::normalized(matrix_exp_h(-beta.beta * h.matrix()));
}

DensityState clr_inverse(const Hamiltonian& x) { return clr_inverse(x.matrix()); }

DensityState clr_inverse(const HermitianMatrix& x) {
    return DensityState::normalized(matrix_exp_h(x));
}

DensityState arc(const DensityState& a, const DensityState& b, double t) {
    require_same_dim(a.dim(), b.dim(), "arc");
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("arc: t = " + std::to_string(t) + " outside [0, 1]");
    }
    return perturb(power(t, a), power(1.0 - t, b));
}

DensityState tensor(const DensityState& a, const DensityState& b) {
    return DensityState(
        HermitianMatrix::symmetrized(kron(a.matrix().matrix(), b.matrix().matrix())));
}

DensityState conjugate(const DensityState& a, const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw NotUnitary("conjugate: U not square");
    require_same_dim(a.dim(), u.rows(), "conjugate");
    const double residual = max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
    if (residual > 1e-10) {
        throw NotUnitary("conjugate: U^*U residual " + std::to_string(residual));
    }
    return DensityState(
        HermitianMatrix::symmetrized(u * a.matrix().matrix() * u.adjoint()));
}

} // namespace aitchison
