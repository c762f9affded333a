#ifndef AITCHISON_STATE_SPACE_HPP
#define AITCHISON_STATE_SPACE_HPP

// The core geometry on the interior of the quantum state space:
// perturbation, powering, inner product, centered log-ratio transform and
// its Gibbs-state inverse, arcs and tensor products. All operations are
// pure functions over immutable values.

#include <vector>

#include "aitchison/linalg.hpp"
#include "aitchison/matrix.hpp"

namespace aitchison {

// Positive-definite Hermitian matrix with unit trace. The constructor
// validates and caches the eigendecomposition; every downstream operation
// reuses it.
class DensityState {
public:
    // Requires |Tr - 1| <= 1e-10; renormalizes to exact unit trace, then
    // rejects any eigenvalue at or below eps_pd (boundary states are not
    // admitted).
    explicit DensityState(const HermitianMatrix& m, double eps_pd = kEpsPd);

    // Projection onto the ray: accepts any positive-definite matrix and
    // scales it to unit trace. The entry point for operations defined on
    // all positive matrices.
    static DensityState normalized(const HermitianMatrix& m, double eps_pd = kEpsPd);

    static DensityState maximally_mixed(int n);

    int dim() const { return matrix_.dim(); }
    const HermitianMatrix& matrix() const { return matrix_; }
    const std::vector<double>& eigenvalues() const { return eig_.eigenvalues; }
    const ComplexMatrix& eigenvectors() const { return eig_.eigenvectors; }
    double min_eigenvalue() const { return eig_.eigenvalues.front(); }

    HermitianMatrix log_matrix() const;   // U diag(log lambda) U^*
    double log_trace() const;             // sum of log eigenvalues
    HermitianMatrix sqrt_matrix() const;
    HermitianMatrix inverse_matrix() const;

private:
    DensityState() = default;
    HermitianMatrix matrix_ = HermitianMatrix::zero(0);
    EigenDecomposition eig_;
};

// Hermitian generator; traceless ones are the clr images.
class Hamiltonian {
public:
    explicit Hamiltonian(const HermitianMatrix& m, bool traceless = false);

    int dim() const { return matrix_.dim(); }
    const HermitianMatrix& matrix() const { return matrix_; }
    bool traceless() const { return traceless_; }

private:
    HermitianMatrix matrix_;
    bool traceless_;
};

struct InverseTemperature {
    explicit InverseTemperature(double b);
    double beta;
};

// A (+) B = e^{log A + log B} / Tr(...). Scale invariant in both inputs.
DensityState perturb(const DensityState& a, const DensityState& b);
DensityState perturb(const HermitianMatrix& a, const HermitianMatrix& b, double eps_pd = kEpsPd);

// lambda (.) A = e^{lambda log A} / Tr(...); any real lambda.
DensityState power(double lambda, const DensityState& a);
DensityState power(double lambda, const HermitianMatrix& a, double eps_pd = kEpsPd);

// (-1) (.) A, the additive inverse.
DensityState negate(const DensityState& a);

// A (+) negate(B).
DensityState subtract(const DensityState& a, const DensityState& b);

// <A,B> = (1/n) Tr(log A log B) - (1/n^2) Tr(log A) Tr(log B).
double inner(const DensityState& a, const DensityState& b);
double inner(const HermitianMatrix& a, const HermitianMatrix& b, double eps_pd = kEpsPd);

double norm(const DensityState& a);
double distance(const DensityState& a, const DensityState& b);

// log A - (Tr log A / n) I, projected exactly traceless.
Hamiltonian clr(const DensityState& a);

// e^{-beta H} / Tr e^{-beta H}.
DensityState gibbs(const Hamiltonian& h, InverseTemperature beta);

// e^{X} / Tr e^{X}; inverse of clr on traceless inputs.
DensityState clr_inverse(const Hamiltonian& x);
DensityState clr_inverse(const HermitianMatrix& x);

// (t (.) A) (+) ((1-t) (.) B), t in [0, 1]; t=1 gives A, t=0 gives B.
DensityState arc(const DensityState& a, const DensityState& b, double t);

// Kronecker product state on the composite system.
DensityState tensor(const DensityState& a, const DensityState& b);

// U A U^* for unitary U (residual <= 1e-10 enforced).
DensityState conjugate(const DensityState& a, const ComplexMatrix& u);

} // namespace aitchison

#endif
