#ifndef AITCHISON_CLASSICAL_HPP
#define AITCHISON_CLASSICAL_HPP

// Aitchison geometry on the open probability simplex: perturbation,
// powering and the log-ratio inner product. Serves as the commutative
// oracle for diagonal quantum states.

#include <vector>

#include "aitchison/linalg.hpp"

namespace aitchison {

class DensityState;

class SimplexVector {
public:
    // Strictly positive components; normalized to unit sum.
    explicit SimplexVector(std::vector<double> components, double eps_pd = kEpsPd);

    static SimplexVector uniform(int n);

    int size() const { return static_cast<int>(components_.size()); }
    const std::vector<double>& components() const { return components_; }
    double operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

private:
    std::vector<double> components_;
};

// Componentwise product, renormalized.
SimplexVector c_perturb(const SimplexVector& p, const SimplexVector& q);

// Componentwise powers, renormalized.
SimplexVector c_power(double lambda, const SimplexVector& p);

// Centered single-sum form:
// (1/n) sum_i log p_i log q_i - (1/n^2) (sum log p_i)(sum log q_i).
// This is the normalization under which diagonal embedding is an isometry
// into the quantum state space.
double c_inner(const SimplexVector& p, const SimplexVector& q);

// Pairwise double-sum form (1/2n^2) sum_ij log(p_i/p_j) log(q_i/q_j).
// Algebraically equal to c_inner; kept as the cross-validation route. The
// classical literature often carries 1/(2n) here, which is n times this
// inner product; the 1/(2n^2) normalization is the one the diagonal
// restriction of the quantum geometry induces.
double c_inner_pairwise(const SimplexVector& p, const SimplexVector& q);

// diag(p) as a density state — the classical-quantum bridge.
DensityState embed_diagonal(const SimplexVector& p);

} // namespace aitchison

#endif
