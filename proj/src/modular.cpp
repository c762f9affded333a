#include "aitchison/modular.hpp"

#include <cmath>
#include <string>

namespace aitchison {

Superoperator::Superoperator(int base_dim, ComplexMatrix mat)
    : base_dim_(base_dim), mat_(std::move(mat)) {
    if (mat_.rows() != base_dim * base_dim || mat_.cols() != base_dim * base_dim) {
        throw DimensionMismatch("Superoperator: matrix must be n^2 x n^2");
    }
}

Superoperator Superoperator::identity(int base_dim) {
    return Superoperator(base_dim, ComplexMatrix::identity(base_dim * base_dim));
}

ComplexMatrix vec(const ComplexMatrix& x) {
    ComplexMatrix out(x.rows() * x.cols(), 1);
    for (int j = 0; j < x.cols(); ++j)
        for (int i = 0; i < x.rows(); ++i) out(j * x.rows() + i, 0) = x(i, j);
    return out;
}

ComplexMatrix unvec(const ComplexMatrix& v, int n) {
    if (v.rows() != n * n || v.cols() != 1) {
        throw DimensionMismatch("unvec: expected n^2 x 1 column");
    }
    ComplexMatrix out(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j) = v(j * n + i, 0);
    return out;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
    if (x.rows() != base_dim_ || x.cols() != base_dim_) {
        throw DimensionMismatch("Superoperator::apply: operand dim mismatch");
    }
    return unvec(mat_ * vec(x), base_dim_);
}

Superoperator Superoperator::compose(const Superoperator& other) const {
    if (base_dim_ != other.base_dim_) {
        throw DimensionMismatch("Superoperator::compose: base dims differ");
    }
    return Superoperator(base_dim_, mat_ * other.mat_);
}

Superoperator left_mult(const ComplexMatrix& x) {
    if (x.rows() != x.cols()) throw DimensionMismatch("left_mult: X not square");
    return Superoperator(x.rows(), kron(ComplexMatrix::identity(x.rows()), x));
}

Superoperator right_mult(const ComplexMatrix& x) {
    if (x.rows() != x.cols()) throw DimensionMismatch("right_mult: X not square");
    return Superoperator(x.rows(), kron(x.transpose(), ComplexMatrix::identity(x.rows())));
}

Superoperator relative_modular(const DensityState& d1, const DensityState& d2) {
    if (d1.dim() != d2.dim()) throw DimensionMismatch("relative_modular: dims differ");
    return left_mult(d1.matrix().matrix())
        .compose(right_mult(d2.inverse_matrix().matrix()));
}

namespace {

// The relative modular operator of two positive states is Hermitian and
// positive definite as an n^2 x n^2 matrix, so its log is spectral.
HermitianMatrix log_of_positive_superop(const ComplexMatrix& m) {
    return matrix_log_pd(HermitianMatrix::symmetrized(m), 0.0);
}

} // namespace

Superoperator log_modular(const DensityState& d1, const DensityState& d2) {
    const Superoperator delta = relative_modular(d1, d2);
    return Superoperator(d1.dim(), log_of_positive_superop(delta.matrix()).matrix());
}

Superoperator log_modular_decomposed(const DensityState& d1, const DensityState& d2) {
    if (d1.dim() != d2.dim()) throw DimensionMismatch("log_modular_decomposed: dims differ");
    const ComplexMatrix l = left_mult(d1.log_matrix().matrix()).matrix();
    const ComplexMatrix r = right_mult(d2.log_matrix().matrix()).matrix();
    return Superoperator(d1.dim(), l - r);
}

double relative_entropy(const DensityState& d1, const DensityState& d2) {
    if (d1.dim() != d2.dim()) throw DimensionMismatch("relative_entropy: dims differ");
    const Superoperator log_delta = log_modular(d2, d1);
    const ComplexMatrix root = d1.sqrt_matrix().matrix();
    return -hs_inner(root, log_delta.apply(root)).real();
}

double inner_via_modular(const DensityState& a, const DensityState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("inner_via_modular: dims differ");
    const double n = a.dim();
    const HermitianMatrix log_da = log_of_positive_superop(relative_modular(a, a).matrix());
    const HermitianMatrix log_db = log_of_positive_superop(relative_modular(b, b).matrix());
    return hs_inner(log_da, log_db) / (2.0 * n * n);
}

} // namespace aitchison
