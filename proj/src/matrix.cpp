#include "aitchison/matrix.hpp"

#include <cmath>
#include <string>

namespace aitchison {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw DimensionMismatch("ComplexMatrix: negative dimensions");
    }
    entries_.assign(static_cast<std::size_t>(rows) * cols, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix +: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix -: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix *: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("hs_inner: shape mismatch");
    Complex s{0.0, 0.0};
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

namespace {

ComplexMatrix half_sum_with_adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        out(i, i) = Complex{m(i, i).real(), 0.0};
        for (int j = i + 1; j < m.rows(); ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

} // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw NotHermitian("HermitianMatrix: not square");
    if (m.rows() == 0) throw DimensionMismatch("HermitianMatrix: empty");
    if (!m.all_finite()) throw NotHermitian("HermitianMatrix: non-finite entries");
    double residual = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.rows(); ++j)
            residual = std::max(residual, std::abs(m(i, j) - std::conj(m(j, i))));
    if (residual > kHermTol) {
        throw NotHermitian("HermitianMatrix: residual " + std::to_string(residual) +
                           " exceeds tolerance");
    }
    mat_ = half_sum_with_adjoint(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw NotHermitian("HermitianMatrix: not square");
    if (m.rows() == 0) throw DimensionMismatch("HermitianMatrix: empty");
    HermitianMatrix h;
    h.mat_ = half_sum_with_adjoint(m);
    return h;
}

HermitianMatrix HermitianMatrix::zero(int n) {
    HermitianMatrix h;
    h.mat_ = ComplexMatrix(n, n);
    return h;
}

HermitianMatrix HermitianMatrix::identity(int n) {
    HermitianMatrix h;
    h.mat_ = ComplexMatrix::identity(n);
    return h;
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += mat_(i, i).real();
    return t;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
    mat_ += other.mat_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
    mat_ -= other.mat_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scalar) {
    mat_ *= Complex{scalar, 0.0};
    return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
HermitianMatrix operator*(double scalar, HermitianMatrix m) { return m *= scalar; }

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
    return hs_inner(a.matrix(), b.matrix()).real();
}

} // namespace aitchison
