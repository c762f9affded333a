#include "aitchison/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aitchison {

namespace {

constexpr double kBallGuard = 1e-12;

double cos_angle(const BlochVector& v1, const BlochVector& v2) {
    const double n1 = v1.norm();
    const double n2 = v2.norm();
    if (n1 == 0.0 || n2 == 0.0) return 0.0;  // annihilated by the atanh factor anyway
    const double dot = v1.x * v2.x + v1.y * v2.y + v1.z * v2.z;
    return std::clamp(dot / (n1 * n2), -1.0, 1.0);
}

} // namespace

BlochVector::BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(r) || r >= 1.0 - kBallGuard) {
        throw OutsideBall("BlochVector: radius " + std::to_string(r) +
                          " not inside the unit ball");
    }
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityState bloch_to_state(const BlochVector& v) {
    ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + v.z);
    m(0, 1) = Complex{0.5 * v.x, 0.5 * v.y};
    m(1, 0) = Complex{0.5 * v.x, -0.5 * v.y};
    m(1, 1) = 0.5 * (1.0 - v.z);
    return DensityState(HermitianMatrix(m));
}

BlochVector state_to_bloch(const DensityState& d) {
    if (d.dim() != 2) {
        throw WrongDimension("state_to_bloch: dim " + std::to_string(d.dim()) + " != 2");
    }
    const Complex off = d.matrix()(0, 1);
    return BlochVector(2.0 * off.real(), 2.0 * off.imag(),
                       d.matrix()(0, 0).real() - d.matrix()(1, 1).real());
}

double inner_closed(const BlochVector& v1, const BlochVector& v2) {
    return std::atanh(v1.norm()) * std::atanh(v2.norm()) * cos_angle(v1, v2);
}

double norm_closed(const BlochVector& v) { return std::atanh(v.norm()); }

double distance_closed(const BlochVector& v1, const BlochVector& v2) {
    const double a = std::atanh(v1.norm());
    const double b = std::atanh(v2.norm());
    const double sq = a * a + b * b - 2.0 * cos_angle(v1, v2) * a * b;
    return std::sqrt(std::max(0.0, sq));
}

BlochVector negate_closed(const BlochVector& v) { return BlochVector(-v.x, -v.y, -v.z); }

BlochVector dilate_closed(double lambda, const BlochVector& v) {
    const double r = v.norm();
    if (r == 0.0) return v;
    const double scaled = std::tanh(lambda * std::atanh(r)) / r;
    return BlochVector(scaled * v.x, scaled * v.y, scaled * v.z);
}

} // namespace aitchison
