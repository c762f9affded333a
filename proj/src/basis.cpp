#include "aitchison/basis.hpp"

#include <cmath>

namespace aitchison {

std::string BasisLabel::to_string() const {
    switch (kind) {
        case BasisKind::A: return "A_" + std::to_string(k) + "_" + std::to_string(l);
        case BasisKind::B: return "B_" + std::to_string(k) + "_" + std::to_string(l);
        case BasisKind::C: return "C_" + std::to_string(k);
    }
    return "?";
}

std::vector<BasisLabel> basis_labels(int n) {
    if (n < 2) throw InvalidLabel("basis_labels: n must be >= 2");
    std::vector<BasisLabel> labels;
    labels.reserve(static_cast<std::size_t>(n) * n - 1);
    for (int k = 1; k < n; ++k)
        for (int l = k + 1; l <= n; ++l) labels.push_back({BasisKind::A, k, l});
    for (int k = 1; k < n; ++k)
        for (int l = k + 1; l <= n; ++l) labels.push_back({BasisKind::B, k, l});
    for (int k = 1; k <= n - 1; ++k) labels.push_back({BasisKind::C, k, 0});
    return labels;
}

namespace {

void validate_label(const BasisLabel& label, int n) {
    if (n < 2) throw InvalidLabel("basis_hamiltonian: n must be >= 2");
    switch (label.kind) {
        case BasisKind::A:
        case BasisKind::B:
            if (!(1 <= label.k && label.k < label.l && label.l <= n)) {
                throw InvalidLabel("basis_hamiltonian: pair label (" +
                                   std::to_string(label.k) + "," + std::to_string(label.l) +
                                   ") out of range for n=" + std::to_string(n));
            }
            break;
        case BasisKind::C:
            if (!(1 <= label.k && label.k <= n - 1)) {
                throw InvalidLabel("basis_hamiltonian: C index " + std::to_string(label.k) +
                                   " out of range for n=" + std::to_string(n));
            }
            break;
    }
}

} // namespace

Hamiltonian basis_hamiltonian(const BasisLabel& label, int n) {
    validate_label(label, n);
    const double a = std::sqrt(n / 2.0);
    ComplexMatrix m(n, n);
    const int k = label.k - 1;  // 0-based
    const int l = label.l - 1;
    switch (label.kind) {
        case BasisKind::A:
            m(k, l) = a;
            m(l, k) = a;
            break;
        case BasisKind::B:
            m(k, l) = Complex{0.0, a};
            m(l, k) = Complex{0.0, -a};
            break;
        case BasisKind::C:
            if (label.k <= n - 2) {
                const double kk = label.k;
                const double alpha = std::sqrt(n / (kk * kk + 3.0 * kk + 2.0));
                for (int i = 0; i < label.k; ++i) m(i, i) = alpha;
                m(label.k, label.k) = -alpha * (kk + 1.0);
                m(n - 1, n - 1) = alpha;
            } else {
                m(0, 0) = a;
                m(n - 1, n - 1) = -a;
            }
            break;
    }
    return Hamiltonian(HermitianMatrix::symmetrized(m), /*traceless=*/true);
}

DensityState basis_state(const BasisLabel& label, int n) {
    return clr_inverse(basis_hamiltonian(label, n));
}

std::vector<DensityState> full_basis(int n) {
    std::vector<DensityState> states;
    const auto labels = basis_labels(n);
    states.reserve(labels.size());
    for (const BasisLabel& label : labels) states.push_back(basis_state(label, n));
    return states;
}

CoordinateVector coordinates(const DensityState& a) {
    const int n = a.dim();
    const HermitianMatrix x = clr(a).matrix();
    CoordinateVector out;
    out.dim = n;
    const auto labels = basis_labels(n);
    out.coords.reserve(labels.size());
    for (const BasisLabel& label : labels) {
        const Hamiltonian h = basis_hamiltonian(label, n);
        out.coords.push_back(hs_inner(h.matrix(), x) / n);
    }
    return out;
}

DensityState synthesize(const CoordinateVector& c) {
    const int n = c.dim;
    const auto labels = basis_labels(n);
    if (labels.size() != c.coords.size()) {
        throw LengthMismatch("synthesize: expected " + std::to_string(labels.size()) +
                             " coordinates, got " + std::to_string(c.coords.size()));
    }
    HermitianMatrix sum = HermitianMatrix::zero(n);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!std::isfinite(c.coords[i])) {
            throw std::invalid_argument("synthesize: non-finite coordinate");
        }
        sum += c.coords[i] * basis_hamiltonian(labels[i], n).matrix();
    }
    return clr_inverse(sum);
}

} // namespace aitchison
