#pragma once

// Weighted Hermite functions
//
//     h_n(x) = (-1)^n e^{nu x^2 / 2} d^n/dx^n e^{-nu x^2}
//            = nu^{n/2} e^{-nu x^2 / 2} H_n(sqrt(nu) x),
//
// with ||h_n||^2 = 2^n nu^n n! (pi/nu)^{1/2}, and their normalized versions
// psi_n = h_n / ||h_n||. Quaternion-valued L^2(R) functions are stored as right
// coefficients against psi_n; the inner product is <phi, psi> = int conj(psi) phi.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"

namespace qsbt {

/// h_n(x) by the three-term recurrence h_{n+1} = 2 nu x h_n - 2 nu n h_{n-1}.
inline double hermite_h(std::size_t n, double x, double nu) {
    detail::require_positive_weight(nu, "hermite_h");
    const double h0 = std::exp(-0.5 * nu * x * x);
    if (n == 0) {
        return h0;
    }
    double prev = h0;
    double cur = 2.0 * nu * x * h0;
    for (std::size_t k = 1; k < n; ++k) {
        const double next = 2.0 * nu * x * cur - 2.0 * nu * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// log ||h_n||^2.
inline double log_hermite_norm_sq(std::size_t n, double nu) {
    detail::require_positive_weight(nu, "hermite_norm_sq");
    const double nd = static_cast<double>(n);
    return nd * std::log(2.0 * nu) + std::lgamma(nd + 1.0) + 0.5 * std::log(std::numbers::pi / nu);
}

/// ||h_n||^2 = 2^n nu^n n! (pi/nu)^{1/2}.
inline double hermite_norm_sq(std::size_t n, double nu) {
    detail::require_positive_weight(nu, "hermite_norm_sq");
    if (n <= 20) {
        double v = std::sqrt(std::numbers::pi / nu);
        for (std::size_t k = 1; k <= n; ++k) {
            v *= 2.0 * nu * static_cast<double>(k);
        }
        return v;
    }
    return std::exp(log_hermite_norm_sq(n, nu));
}

/// psi_0 .. psi_n at x, by the normalized recurrence (no overflow for n ~ 10^3).
inline std::vector<double> psi_all(std::size_t n, double x, double nu) {
    detail::require_positive_weight(nu, "psi_n");
    std::vector<double> out(n + 1);
    out[0] = std::pow(nu / std::numbers::pi, 0.25) * std::exp(-0.5 * nu * x * x);
    if (n >= 1) {
        out[1] = x * std::sqrt(2.0 * nu) * out[0];
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        out[k + 1] = x * std::sqrt(2.0 * nu / (kd + 1.0)) * out[k] - std::sqrt(kd / (kd + 1.0)) * out[k - 1];
    }
    return out;
}

inline double psi_n(std::size_t n, double x, double nu) { return psi_all(n, x, nu)[n]; }

/// Quaternion-valued function on R given by psi-coefficients: psi(x) = sum psi_n(x) c_n.
class HermiteExpansion {
public:
    HermiteExpansion(double nu, std::vector<Quaternion> coeffs) : nu_(nu), coeffs_(std::move(coeffs)) {
        detail::require_positive_weight(nu, "HermiteExpansion");
        if (coeffs_.empty()) {
            coeffs_.emplace_back();
        }
    }

    /// c * psi_n.
    static HermiteExpansion basis(double nu, std::size_t n, const Quaternion& c = Quaternion{1.0}) {
        std::vector<Quaternion> coeffs(n + 1);
        coeffs[n] = c;
        return {nu, std::move(coeffs)};
    }

    double nu() const noexcept { return nu_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Quaternion>& coeffs() const noexcept { return coeffs_; }
    const Quaternion& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// sum |c_n|^2, the squared L^2 norm.
    double norm_sq() const {
        double s = 0.0;
        for (const auto& c : coeffs_) {
            s += norm_sq_of(c);
        }
        return s;
    }

    Quaternion operator()(double x) const {
        const auto psi = psi_all(degree(), x, nu_);
        Quaternion acc;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            acc += coeffs_[n] * psi[n];
        }
        return acc;
    }

    /// Right multiplication by a quaternion scalar.
    friend HermiteExpansion operator*(const HermiteExpansion& f, const Quaternion& q) {
        std::vector<Quaternion> c = f.coeffs_;
        for (auto& a : c) {
            a = a * q;
        }
        return {f.nu_, std::move(c)};
    }

    /// Left multiplication by a quaternion scalar.
    friend HermiteExpansion operator*(const Quaternion& q, const HermiteExpansion& f) {
        std::vector<Quaternion> c = f.coeffs_;
        for (auto& a : c) {
            a = q * a;
        }
        return {f.nu_, std::move(c)};
    }

private:
    static double norm_sq_of(const Quaternion& q) { return qsbt::norm_sq(q); }

    double nu_;
    std::vector<Quaternion> coeffs_;
};

inline void require_same_weight(double a, double b, const char* where) {
    if (a != b) {
        throw mismatched_weight(std::string(where) + ": nu " + std::to_string(a) + " != " + std::to_string(b));
    }
}

/// <phi, psi> = int conj(psi) phi dx = sum conj(b_n) a_n. Right-linear in phi.
inline Quaternion l2_inner(const HermiteExpansion& phi, const HermiteExpansion& psi) {
    require_same_weight(phi.nu(), psi.nu(), "l2_inner");
    const std::size_t shared = std::min(phi.coeffs().size(), psi.coeffs().size());
    Quaternion acc;
    for (std::size_t n = 0; n < shared; ++n) {
        acc += conj(psi.coeffs()[n]) * phi.coeffs()[n];
    }
    return acc;
}

/// A quaternion-valued callable on R, effectively supported on [-R, R].
struct SampledFunction {
    std::function<Quaternion(double)> evaluator;
    double support_hint = 10.0;

    Quaternion operator()(double x) const { return evaluator(x); }

    static SampledFunction from(const HermiteExpansion& f) {
        const double reach = std::sqrt((2.0 * static_cast<double>(f.degree()) + 1.0 + 80.0) / f.nu());
        return {[f](double x) { return f(x); }, reach};
    }
};

namespace detail {

/// Values of f at the rule's nodes. Checks coverage of the support and finiteness.
inline std::vector<Quaternion> sample(const SampledFunction& f, const RealLineRule& rule, const char* where) {
    if (rule.reach() < f.support_hint) {
        throw quadrature_under_resolved(std::string(where) + ": outermost node " + std::to_string(rule.reach()) +
                                        " does not cover support " + std::to_string(f.support_hint));
    }
    std::vector<Quaternion> values(rule.order());
    for (std::size_t k = 0; k < rule.order(); ++k) {
        const double x = rule.nodes()[k];
        values[k] = f(x);
        if (std::fabs(x) <= f.support_hint && !is_finite(values[k])) {
            throw parameter_error(std::string(where) + ": non-finite sample at x = " + std::to_string(x));
        }
    }
    return values;
}

}  // namespace detail

/// c_n = int psi_n(x) f(x) dx, n <= degree, by the real-line rule.
/// The rule's scale should match the weight nu; it must carry at least 2 * degree nodes.
inline HermiteExpansion project(const SampledFunction& f, double nu, std::size_t degree, const RealLineRule& rule) {
    detail::require_positive_weight(nu, "project");
    if (rule.order() < 2 * degree) {
        throw quadrature_under_resolved("project: rule of order " + std::to_string(rule.order()) +
                                        " is below 2N = " + std::to_string(2 * degree));
    }
    const auto values = detail::sample(f, rule, "project");
    std::vector<Quaternion> coeffs(degree + 1);
    for (std::size_t k = 0; k < rule.order(); ++k) {
        const auto psi = psi_all(degree, rule.nodes()[k], nu);
        const Quaternion wv = values[k] * rule.weights()[k];
        for (std::size_t n = 0; n <= degree; ++n) {
            coeffs[n] += wv * psi[n];
        }
    }
    return {nu, std::move(coeffs)};
}

/// Relative L^2 energy of f missed by a truncated expansion: 1 - ||P f||^2 / ||f||^2.
/// A value well above quadrature noise means f carries modes beyond the truncation.
inline double projection_residual(const SampledFunction& f, const HermiteExpansion& projected,
                                  const RealLineRule& rule) {
    const auto values = detail::sample(f, rule, "projection_residual");
    double total = 0.0;
    for (std::size_t k = 0; k < rule.order(); ++k) {
        total += norm_sq(values[k]) * rule.weights()[k];
    }
    if (total == 0.0) {
        return 0.0;
    }
    return (total - projected.norm_sq()) / total;
}

/// int e^{-a x^2 + b x} dx = (pi/a)^{1/2} exp(b^2 / (4a)), for b in any slice.
inline Quaternion gaussian_integral(double a, const Quaternion& b) {
    if (!(a > 0.0)) {
        throw parameter_error("gaussian_integral: a must be > 0");
    }
    return qexp(b * b / (4.0 * a)) * std::sqrt(std::numbers::pi / a);
}

}  // namespace qsbt
