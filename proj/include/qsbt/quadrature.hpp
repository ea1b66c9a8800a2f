#pragma once

// Gaussian quadrature for the two measures the transform lives on:
//
//   RealLineRule     integrates g(x) dx over R for Gaussian-damped g. Gauss-Hermite
//                    nodes t_k are mapped to x_k = t_k / sqrt(scale) and the
//                    e^{-t^2} weight is folded back into the weights, so
//                    sum W_k g(x_k) is exact when g(x) = e^{-scale x^2} * poly(x)
//                    with deg poly <= 2n - 1.
//
//   SliceQuadrature  integrates g(p) e^{-nu |p|^2} dx dy over a slice C_I in polar
//                    form: Gauss-Legendre in r on [0, R], equispaced trapezoid in
//                    theta (exact for trigonometric polynomials of degree < M).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"

namespace qsbt {

struct NodesWeights {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

/// Eigenvalues of the symmetric tridiagonal matrix (diag d, off-diagonal e[1..n-1]),
/// by implicit QL with Wilkinson shifts. Destroys e. Returned ascending.
inline std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const std::size_t n = d.size();
    if (n == 0) {
        return d;
    }
    for (std::size_t i = 1; i < n; ++i) {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        for (int iter = 0; iter < 200; ++iter) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-17 * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            std::size_t i = m;
            bool underflow = false;
            while (i-- > l) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

/// Gauss-Hermite rule for the weight e^{-t^2} (physicists' convention).
/// Nodes start from the Jacobi-matrix eigenvalues and are polished by Newton on
/// the orthonormal recurrence; weights come from the recurrence derivative, which
/// keeps the far-tail weights relatively accurate.
inline NodesWeights gauss_hermite(std::size_t n) {
    if (n == 0) {
        throw parameter_error("gauss_hermite: need at least one node");
    }
    constexpr double pi_m4 = 0.7511255444649425;  // pi^{-1/4}
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        off[k] = std::sqrt(0.5 * static_cast<double>(k));
    }
    NodesWeights r{detail::tridiagonal_eigenvalues(diag, off), std::vector<double>(n)};
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z = r.nodes[i];
        double pp = 0.0;
        for (int it = 0; it < 20; ++it) {
            double p1 = pi_m4;
            double p2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double p3 = p2;
                p2 = p1;
                const double kd = static_cast<double>(k);
                p1 = z * std::sqrt(2.0 / (kd + 1.0)) * p2 - std::sqrt(kd / (kd + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * nd) * p2;
            const double step = p1 / pp;
            z -= step;
            if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(z))) {
                break;
            }
        }
        r.nodes[i] = z;
        r.weights[i] = 2.0 / (pp * pp);
    }
    // Exact symmetry.
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double x = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
        const double w = 0.5 * (r.weights[n - 1 - i] + r.weights[i]);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        r.nodes[n / 2] = 0.0;
    }
    return r;
}

/// Gauss-Legendre rule on [a, b].
inline NodesWeights gauss_legendre(std::size_t n, double a, double b) {
    if (n == 0) {
        throw parameter_error("gauss_legendre: need at least one node");
    }
    NodesWeights r{std::vector<double>(n), std::vector<double>(n)};
    const double mid = 0.5 * (a + b);
    const double half_len = 0.5 * (b - a);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double p3 = p2;
                p2 = p1;
                const double kd = static_cast<double>(k);
                p1 = ((2.0 * kd + 1.0) * z * p2 - kd * p3) / (kd + 1.0);
            }
            pp = nd * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-16) {
                break;
            }
        }
        r.nodes[i] = mid - half_len * z;
        r.nodes[n - 1 - i] = mid + half_len * z;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 * half_len / ((1.0 - z * z) * pp * pp);
    }
    return r;
}

/// Real-line rule: Gauss-Hermite in t = sqrt(scale) x with the Gaussian folded back.
class RealLineRule {
public:
    RealLineRule(std::size_t order, double scale) : order_(order), scale_(scale) {
        detail::require_positive_weight(scale, "RealLineRule");
        const NodesWeights gh = gauss_hermite(order);
        const double inv_sqrt = 1.0 / std::sqrt(scale);
        nodes_.resize(order);
        weights_.resize(order);
        for (std::size_t k = 0; k < order; ++k) {
            const double t = gh.nodes[k];
            nodes_[k] = t * inv_sqrt;
            weights_[k] = gh.weights[k] * std::exp(t * t) * inv_sqrt;
        }
    }

    std::size_t order() const noexcept { return order_; }
    double scale() const noexcept { return scale_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    /// Polynomial degree (in front of e^{-scale x^2}) integrated exactly.
    std::size_t exact_degree() const noexcept { return 2 * order_ - 1; }

    /// Outermost node.
    double reach() const noexcept { return nodes_.back(); }

    void require_degree(std::size_t degree, const char* where) const {
        if (degree > exact_degree()) {
            throw quadrature_under_resolved(std::string(where) + ": rule of order " + std::to_string(order_) +
                                            " integrates degree <= " + std::to_string(exact_degree()) +
                                            ", need " + std::to_string(degree));
        }
    }

    /// Fixed-order sum of W_k g(x_k). Works for real or quaternion valued g.
    template <typename F>
    auto integrate(F&& g) const {
        using R = std::decay_t<decltype(g(0.0))>;
        R acc{};
        for (std::size_t k = 0; k < order_; ++k) {
            acc += g(nodes_[k]) * weights_[k];
        }
        return acc;
    }

private:
    std::size_t order_;
    double scale_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Smallest radius R beyond which r^power e^{-decay r^2 + growth r} stays below
/// 1e-18 of its maximum. This bounds the tail of a slice integrand whose
/// polar-coordinate density (Jacobian r included) is dominated by that profile.
inline double slice_radius(double decay, std::size_t power, double growth = 0.0) {
    detail::require_positive_weight(decay, "slice_radius");
    const double d = static_cast<double>(power);
    auto log_profile = [&](double r) { return (d > 0.0 ? d * std::log(r) : 0.0) - decay * r * r + growth * r; };
    // Maximizer of the concave log-profile.
    const double r_peak = (growth + std::sqrt(growth * growth + 8.0 * decay * d)) / (4.0 * decay);
    const double target = log_profile(r_peak) - std::log(1e18);
    double lo = r_peak;
    double hi = std::max(2.0 * r_peak, 1.0);
    while (log_profile(hi) > target) {
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double m = 0.5 * (lo + hi);
        (log_profile(m) > target ? lo : hi) = m;
    }
    return hi;
}

/// Polar rule on a slice for the Fock measure e^{-nu |p|^2} d lambda_I(p).
class SliceQuadrature {
public:
    SliceQuadrature(double nu, std::size_t radial_nodes, std::size_t angular_count, double radius)
        : nu_(nu), radius_(radius), angular_count_(angular_count) {
        detail::require_positive_weight(nu, "SliceQuadrature");
        if (angular_count == 0 || !(radius > 0.0)) {
            throw parameter_error("SliceQuadrature: angular_count and radius must be positive");
        }
        const NodesWeights gl = gauss_legendre(radial_nodes, 0.0, radius);
        radii_ = gl.nodes;
        // r dr dtheta with the Gaussian weight folded in.
        const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angular_count);
        radial_weights_.resize(radial_nodes);
        for (std::size_t k = 0; k < radial_nodes; ++k) {
            const double r = radii_[k];
            radial_weights_[k] = gl.weights[k] * r * std::exp(-nu * r * r) * dtheta;
        }
        cos_.resize(angular_count);
        sin_.resize(angular_count);
        for (std::size_t m = 0; m < angular_count; ++m) {
            const double theta = dtheta * static_cast<double>(m);
            cos_[m] = std::cos(theta);
            sin_[m] = std::sin(theta);
        }
    }

    /// Rule sized for integrands |poly of degree `degree`|^2 (times e^{growth |p|}).
    static SliceQuadrature for_degree(double nu, std::size_t degree, std::size_t radial_nodes,
                                      std::size_t angular_count, double growth = 0.0, double decay_fraction = 1.0) {
        const double r = slice_radius(nu * decay_fraction, 2 * degree + 1, growth);
        return SliceQuadrature(nu, radial_nodes, angular_count, r);
    }

    double nu() const noexcept { return nu_; }
    double radius() const noexcept { return radius_; }
    std::size_t radial_nodes() const noexcept { return radii_.size(); }
    std::size_t angular_count() const noexcept { return angular_count_; }
    std::size_t radial_capacity() const noexcept { return 2 * radii_.size() - 1; }

    /// Throws unless the rule resolves |f|^2 for f of the given degree.
    void require_degree(std::size_t degree, const char* where) const {
        if (radial_capacity() < 2 * degree || angular_count_ <= 2 * degree) {
            throw quadrature_under_resolved(std::string(where) + ": slice rule (" + std::to_string(radii_.size()) +
                                            " radial, " + std::to_string(angular_count_) +
                                            " angular) cannot resolve degree " + std::to_string(degree));
        }
    }

    std::size_t node_count() const noexcept { return radii_.size() * angular_count_; }

    /// Calls visit(z, p, weight) for every node, in the same order integrate() uses.
    template <typename F>
    void for_each_node(const ImaginaryUnit& unit, F&& visit) const {
        for (std::size_t k = 0; k < radii_.size(); ++k) {
            const double r = radii_[k];
            for (std::size_t m = 0; m < angular_count_; ++m) {
                const std::complex<double> z{r * cos_[m], r * sin_[m]};
                visit(z, unit.embed(z), radial_weights_[k]);
            }
        }
    }

    /// Same as integrate(), for values already sampled in for_each_node() order.
    template <typename T, typename F>
    auto integrate_samples(const ImaginaryUnit& unit, const std::vector<T>& samples, F&& g) const {
        if (samples.size() != node_count()) {
            throw parameter_error("SliceQuadrature: sample count does not match the rule");
        }
        std::size_t idx = 0;
        return integrate(unit, [&](std::complex<double> z, const Quaternion& p) { return g(z, p, samples[idx++]); });
    }

    /// Integral of g(p) e^{-nu|p|^2} over C_I. g receives the slice coordinate
    /// z = x + i y (as std::complex) and the quaternion p = x + y I.
    template <typename F>
    auto integrate(const ImaginaryUnit& unit, F&& g) const {
        using R = std::decay_t<decltype(g(std::complex<double>{}, Quaternion{}))>;
        R total{};
        for (std::size_t k = 0; k < radii_.size(); ++k) {
            const double r = radii_[k];
            R ring{};
            for (std::size_t m = 0; m < angular_count_; ++m) {
                const std::complex<double> z{r * cos_[m], r * sin_[m]};
                ring += g(z, unit.embed(z));
            }
            total += ring * radial_weights_[k];
        }
        return total;
    }

private:
    double nu_;
    double radius_;
    std::size_t angular_count_;
    std::vector<double> radii_;
    std::vector<double> radial_weights_;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

}  // namespace qsbt
