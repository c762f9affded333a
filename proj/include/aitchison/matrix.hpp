#ifndef AITCHISON_MATRIX_HPP
#define AITCHISON_MATRIX_HPP

// Dense complex matrices, row-major. ComplexMatrix is a plain value type;
// HermitianMatrix additionally guarantees an exactly Hermitian stored form
// (symmetrized at construction).

#include <complex>
#include <vector>

#include "aitchison/errors.hpp"

namespace aitchison {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

// max_ij |A - B|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; dims multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Hilbert-Schmidt inner product Tr(A^* B). Real when both arguments are
// Hermitian; the HermitianMatrix overload returns that real part directly.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermiticity residual tolerance accepted from external inputs.
inline constexpr double kHermTol = 1e-10;

class HermitianMatrix {
public:
    // Validates squareness, finiteness and residual max|M - M^*| <= 1e-10,
    // then stores (M + M^*)/2 so downstream code never sees asymmetry noise.
    explicit HermitianMatrix(const ComplexMatrix& m);

    // Symmetrize without the residual check. For internal results that are
    // Hermitian by construction (spectral reconstructions U f(L) U^*), where
    // an absolute residual test is meaningless at extreme scales.
    static HermitianMatrix symmetrized(const ComplexMatrix& m);

    static HermitianMatrix zero(int n);
    static HermitianMatrix identity(int n);

    int dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }
    const Complex& operator()(int i, int j) const { return mat_(i, j); }

    double trace() const;  // real part; imaginary part is exactly zero
    double max_abs() const { return mat_.max_abs(); }

    HermitianMatrix& operator+=(const HermitianMatrix& other);
    HermitianMatrix& operator-=(const HermitianMatrix& other);
    HermitianMatrix& operator*=(double scalar);

private:
    HermitianMatrix() = default;
    ComplexMatrix mat_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double scalar, HermitianMatrix m);

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);

} // namespace aitchison

#endif
