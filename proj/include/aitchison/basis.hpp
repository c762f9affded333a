#ifndef AITCHISON_BASIS_HPP
#define AITCHISON_BASIS_HPP

// The orthonormal basis of the state space: n^2 - 1 Gibbs states generated
// by normalized Hamiltonians (symmetric pair couplings A_kl, antisymmetric
// pair couplings B_kl, diagonal ladder C_k), plus the coordinate maps in
// both directions.
//
// Basis states are always built as e^H / Tr e^H from the generating
// Hamiltonians. The printed closed forms for the diagonal family carry
// normalizing constants that do not match the trace of the displayed
// matrices (k - 2 where the trace has n - k - 2, and n - a + 2 cosh a where
// the trace has n - 2 + 2 cosh a); normalizing by the actual trace keeps
// the family orthonormal, and the A/B closed forms come out identical
// either way.

#include <string>
#include <vector>

#include "aitchison/state_space.hpp"

namespace aitchison {

enum class BasisKind { A, B, C };

struct BasisLabel {
    BasisKind kind;
    int k = 0;
    int l = 0;  // unused for kind C

    std::string to_string() const;  // "A_1_2", "B_1_3", "C_2"
};

// All n^2 - 1 labels in the fixed order: A block, B block (each
// lexicographic in (k, l)), then C_1 ... C_{n-1}.
std::vector<BasisLabel> basis_labels(int n);

struct CoordinateVector {
    int dim = 0;                 // n of the underlying state space
    std::vector<double> coords;  // length n^2 - 1, basis-label order
};

// The generating Hamiltonian for one label; traceless, and normalized so
// (1/n) Tr(H^2) = 1. With a = sqrt(n/2) and alpha = sqrt(n/(k^2+3k+2)):
//   A_kl -> a (E_kl + E_lk)
//   B_kl -> i a (E_kl - E_lk)
//   C_k (k <= n-2) -> alpha diag(1 x k, -(k+1), 0 x (n-k-2), 1)
//   C_{n-1} -> a (E_11 - E_nn)
Hamiltonian basis_hamiltonian(const BasisLabel& label, int n);

// e^H / Tr e^H of the generating Hamiltonian.
DensityState basis_state(const BasisLabel& label, int n);

// All n^2 - 1 basis states in label order.
std::vector<DensityState> full_basis(int n);

// coords[i] = <e_i, A> = (1/n) Tr(H_i clr A).
CoordinateVector coordinates(const DensityState& a);

// clr_inverse( sum_i c_i H_i ).
DensityState synthesize(const CoordinateVector& c);

} // namespace aitchison

#endif
