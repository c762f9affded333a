#include <doctest.h>

#include <cmath>

#include "aitchison/linalg.hpp"
#include "test_helpers.hpp"

using namespace aitchison;
using aitchison::testing::random_hermitian;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("hermitian_eig: identity") {
    const auto eig = hermitian_eig(HermitianMatrix::identity(2));
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors,
                       ComplexMatrix::identity(2)) <= 1e-11);
}

TEST_CASE("hermitian_eig: 2x2 flip matrix has eigenvalues -1, 1") {
    ComplexMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const auto eig = hermitian_eig(HermitianMatrix(x));
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: random reconstruction and unitarity residuals") {
    for (int dim : {2, 3, 5, 8}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const HermitianMatrix m = random_hermitian(dim, 1000 * dim + seed, 2.0);
            const auto eig = hermitian_eig(m);
            const double scale = std::max(1.0, m.max_abs());
            CHECK(max_abs_diff(eig.reconstruct(), m.matrix()) <= 1e-11 * scale);
            CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors,
                               ComplexMatrix::identity(dim)) <= 1e-11);
            for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i)
                CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
        }
    }
}

TEST_CASE("matrix_log_pd: identity maps to zero") {
    const HermitianMatrix l = matrix_log_pd(HermitianMatrix::identity(3));
    CHECK(l.max_abs() <= 1e-14);
}

TEST_CASE("matrix_log_pd: diagonal case") {
    ComplexMatrix d(2, 2);
    d(0, 0) = std::exp(1.0);
    d(1, 1) = std::exp(-1.0);
    const HermitianMatrix l = matrix_log_pd(HermitianMatrix(d));
    CHECK(l(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(l(0, 1)) <= 1e-14);
}

TEST_CASE("matrix_log_pd: rejects boundary input") {
    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 0.0;
    CHECK_THROWS_AS(matrix_log_pd(HermitianMatrix(d)), NotPositiveDefinite);
}

TEST_CASE("matrix_exp_h: zero maps to identity, diagonal case") {
    CHECK(max_abs_diff(matrix_exp_h(HermitianMatrix::zero(3)).matrix(),
                       ComplexMatrix::identity(3)) <= 1e-14);
    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -1.0;
    const HermitianMatrix e = matrix_exp_h(HermitianMatrix(d));
    CHECK(e(0, 0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(e(1, 1).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("matrix_exp_h: reports unusable scale") {
    ComplexMatrix d(2, 2);
    d(0, 0) = 701.0;
    d(1, 1) = 0.0;
    CHECK_THROWS_AS(matrix_exp_h(HermitianMatrix(d)), std::overflow_error);
}

TEST_CASE("exp and log are mutually inverse") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const HermitianMatrix h = random_hermitian(3, 40 + seed);
        CHECK(max_abs_diff(matrix_log_pd(matrix_exp_h(h)).matrix(), h.matrix()) <= 1e-10);

        const HermitianMatrix pd = random_density(3, 70 + seed);
        CHECK(max_abs_diff(matrix_exp_h(matrix_log_pd(pd)).matrix(), pd.matrix()) <= 1e-10);
    }
}

TEST_CASE("kron: identities and diagonal case") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(6)) == 0.0);
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    b(0, 0) = 5.0;
    b(1, 1) = 7.0;
    const ComplexMatrix k = kron(a, b);
    CHECK(k(0, 0).real() == 10.0);
    CHECK(k(1, 1).real() == 14.0);
    CHECK(k(2, 2).real() == 15.0);
    CHECK(k(3, 3).real() == 21.0);
}

TEST_CASE("kron: mixed product and trace factorization") {
    Rng rng(99);
    auto fill = [&rng](int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
        return m;
    };
    const ComplexMatrix a = fill(2), c = fill(2), b = fill(3), d = fill(3);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12);
}

TEST_CASE("hs_inner: values and conjugate symmetry") {
    CHECK(hs_inner(ComplexMatrix::identity(4), ComplexMatrix::identity(4)).real() ==
          doctest::Approx(4.0));
    ComplexMatrix e12(3, 3);
    e12(0, 1) = 1.0;
    CHECK(hs_inner(e12, e12).real() == doctest::Approx(1.0));

    Rng rng(7);
    ComplexMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a(i, j) = rng.complex_gaussian();
            b(i, j) = rng.complex_gaussian();
        }
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) <= 1e-13);
    CHECK(hs_inner(a, a).real() >= 0.0);
    CHECK(hs_inner(a, a).real() ==
          doctest::Approx(a.frobenius_norm() * a.frobenius_norm()).epsilon(1e-12));
    CHECK_THROWS_AS(hs_inner(a, ComplexMatrix::identity(2)), DimensionMismatch);
}

TEST_CASE("random_density: unit trace, spectral floor, determinism") {
    for (int dim : {2, 4, 8}) {
        const HermitianMatrix d = random_density(dim, 123);
        CHECK(std::abs(d.trace() - 1.0) <= 1e-12);
        const auto eig = hermitian_eig(d);
        CHECK(eig.eigenvalues.front() > 1e-6);
        const HermitianMatrix again = random_density(dim, 123);
        CHECK(max_abs_diff(d.matrix(), again.matrix()) == 0.0);
        const HermitianMatrix other = random_density(dim, 124);
        CHECK(max_abs_diff(d.matrix(), other.matrix()) > 1e-6);
    }
}

TEST_CASE("random_unitary: unitarity, unit determinant modulus, determinism") {
    for (int dim : {2, 3, 6}) {
        const ComplexMatrix u = random_unitary(dim, 55);
        CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(dim)) <= 1e-11);
        const ComplexMatrix again = random_unitary(dim, 55);
        CHECK(max_abs_diff(u, again) == 0.0);
    }
    const ComplexMatrix u2 = random_unitary(2, 90);
    const Complex det = u2(0, 0) * u2(1, 1) - u2(0, 1) * u2(1, 0);
    CHECK(std::abs(std::abs(det) - 1.0) <= 1e-10);
}

TEST_CASE("HermitianMatrix: residual check and symmetrization") {
    ComplexMatrix bad(2, 2);
    bad(0, 1) = Complex{0.0, 0.5};
    bad(1, 0) = Complex{0.0, 0.5};  // conj would be -0.5i
    CHECK_THROWS_AS(HermitianMatrix{bad}, NotHermitian);

    ComplexMatrix okay(2, 2);
    okay(0, 0) = 1.0 + 4e-11;
    okay(0, 1) = Complex{0.3, 2e-11};
    okay(1, 0) = Complex{0.3, -5e-11};
    okay(1, 1) = 2.0;
    const HermitianMatrix h(okay);
    CHECK(h(0, 1) == std::conj(h(1, 0)));
    CHECK(h(0, 0).imag() == 0.0);
}

TEST_SUITE_END();
