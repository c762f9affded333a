#include "aitchison/classical.hpp"

#include <cmath>
#include <string>

#include "aitchison/state_space.hpp"

namespace aitchison {

SimplexVector::SimplexVector(std::vector<double> components, double eps_pd)
    : components_(std::move(components)) {
    if (components_.size() < 2) {
        throw LengthMismatch("SimplexVector: needs at least 2 components");
    }
    double sum = 0.0;
    for (double x : components_) {
        if (!(x > 0.0) || !std::isfinite(x)) {
            throw NotPositiveDefinite("SimplexVector: components must be strictly positive");
        }
        sum += x;
    }
    for (double& x : components_) x /= sum;
    for (double x : components_) {
        if (x <= eps_pd) {
            throw NotPositiveDefinite("SimplexVector: component " + std::to_string(x) +
                                      " at or below eps_pd after normalization");
        }
    }
}

SimplexVector SimplexVector::uniform(int n) {
    return SimplexVector(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

namespace {

void require_same_size(const SimplexVector& p, const SimplexVector& q, const char* op) {
    if (p.size() != q.size()) {
        throw LengthMismatch(std::string(op) + ": lengths " + std::to_string(p.size()) +
                             " and " + std::to_string(q.size()) + " differ");
    }
}

} // namespace

SimplexVector c_perturb(const SimplexVector& p, const SimplexVector& q) {
    require_same_size(p, q, "c_perturb");
    std::vector<double> out(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(i)] = p[i] * q[i];
    return SimplexVector(std::move(out));
}

SimplexVector c_power(double lambda, const SimplexVector& p) {
    std::vector<double> out(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(i)] = std::pow(p[i], lambda);
    return SimplexVector(std::move(out));
}

double c_inner(const SimplexVector& p, const SimplexVector& q) {
    require_same_size(p, q, "c_inner");
    const int n = p.size();
    double mean_p = 0.0, mean_q = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_p += std::log(p[i]);
        mean_q += std::log(q[i]);
    }
    mean_p /= n;
    mean_q /= n;
    // Centered accumulation of
    // (1/n) sum log p_i log q_i - (1/n^2)(sum log p_i)(sum log q_i).
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += (std::log(p[i]) - mean_p) * (std::log(q[i]) - mean_q);
    return s / n;
}

double c_inner_pairwise(const SimplexVector& p, const SimplexVector& q) {
    require_same_size(p, q, "c_inner_pairwise");
    const int n = p.size();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s += std::log(p[i] / p[j]) * std::log(q[i] / q[j]);
    return s / (2.0 * static_cast<double>(n) * n);
}

DensityState embed_diagonal(const SimplexVector& p) {
    ComplexMatrix m(p.size(), p.size());
    for (int i = 0; i < p.size(); ++i) m(i, i) = p[i];
    return DensityState(HermitianMatrix::symmetrized(m));
}

} // namespace aitchison
