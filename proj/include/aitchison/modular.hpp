#ifndef AITCHISON_MODULAR_HPP
#define AITCHISON_MODULAR_HPP

// Superoperator (Hilbert-Schmidt space) formulation: left/right
// multiplications, relative modular operators, Araki relative entropy and
// the modular-operator expression of the state-space inner product.
//
// Vectorization is column-major throughout: vec(X)[j*n + i] = X(i, j), so
// L_X maps to I (x) X and R_X maps to X^T (x) I as n^2 x n^2 matrices.

#include "aitchison/state_space.hpp"

namespace aitchison {

class Superoperator {
public:
    Superoperator(int base_dim, ComplexMatrix mat);

    static Superoperator identity(int base_dim);

    int base_dim() const { return base_dim_; }
    const ComplexMatrix& matrix() const { return mat_; }

    // Reshape, multiply, reshape back.
    ComplexMatrix apply(const ComplexMatrix& x) const;

    Superoperator compose(const Superoperator& other) const;  // this after other

private:
    int base_dim_;
    ComplexMatrix mat_;
};

ComplexMatrix vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexMatrix& v, int n);

// A -> X A.
Superoperator left_mult(const ComplexMatrix& x);

// A -> A X.
Superoperator right_mult(const ComplexMatrix& x);

// Delta_{D1/D2} = L_{D1} R_{D2^{-1}} : A -> D1 A D2^{-1}.
Superoperator relative_modular(const DensityState& d1, const DensityState& d2);

// Spectral log of the modular operator's n^2 x n^2 matrix.
Superoperator log_modular(const DensityState& d1, const DensityState& d2);

// The same operator assembled as L_{log D1} - R_{log D2}; kept separate so
// the two routes can be cross-checked rather than trusting either alone.
Superoperator log_modular_decomposed(const DensityState& d1, const DensityState& d2);

// Araki form: S(D1, D2) = -< D1^{1/2}, log(Delta_{D2/D1}) D1^{1/2} >.
// Natural-log units.
double relative_entropy(const DensityState& d1, const DensityState& d2);

// (1/2n^2) Tr( log(Delta_A) log(Delta_B) ), evaluated through the
// superoperator spectral logs; agrees with state_space::inner.
double inner_via_modular(const DensityState& a, const DensityState& b);

} // namespace aitchison

#endif
