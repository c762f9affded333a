#ifndef AITCHISON_LINALG_HPP
#define AITCHISON_LINALG_HPP

// Hermitian eigendecomposition (cyclic complex Jacobi) and the matrix
// functions built on it, plus seeded generators for random test objects.

#include <cstdint>
#include <random>
#include <vector>

#include "aitchison/matrix.hpp"

namespace aitchison {

// Smallest eigenvalue admitted when validating positive definiteness.
// The geometry lives on the open interior of the state space; anything at
// or below this floor is rejected, not regularized.
inline constexpr double kEpsPd = 1e-12;

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // unitary, columns

    ComplexMatrix reconstruct() const;  // U diag(lambda) U^*
};

// Cyclic complex Jacobi sweeps. Off-diagonal Frobenius tolerance 1e-13
// relative to the input scale, cap 100 sweeps; throws EigNonConvergence
// past the cap.
EigenDecomposition hermitian_eig(const HermitianMatrix& m);

// U diag(log lambda) U^*. Requires all eigenvalues > eps_pd.
HermitianMatrix matrix_log_pd(const HermitianMatrix& m, double eps_pd = kEpsPd);

// U diag(exp lambda) U^*. Throws std::overflow_error when max lambda > 700
// (unusable scale; reported, not clamped).
HermitianMatrix matrix_exp_h(const HermitianMatrix& m);

// U diag(1/lambda) U^*. Requires all eigenvalues > eps_pd.
HermitianMatrix matrix_inverse_pd(const HermitianMatrix& m, double eps_pd = kEpsPd);

// mt19937_64 with an explicit uniform mapping and Box-Muller, so the same
// seed yields the same stream on every platform (std::normal_distribution
// is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1)
    Complex complex_gaussian();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// (G G^* + eps I) / Tr(...) for a seeded complex Gaussian G, eps = 1e-3.
// Unit trace, eigenvalues bounded away from zero.
HermitianMatrix random_density(int dim, std::uint64_t seed);

// Orthonormalized seeded complex Gaussian (modified Gram-Schmidt, two
// passes), diagonal of the implicit R positive.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

} // namespace aitchison

#endif
