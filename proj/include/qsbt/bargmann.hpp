#pragma once

// Quaternionic Segal-Bargmann transform
//
//     B(psi)(q) = int A(q; x) psi(x) dx,
//     A(q; x)   = (nu/pi)^{3/4} exp(-nu/2 (q^2 + x^2) + nu sqrt(2) q x),
//
// an isometry of L^2(R; H) onto the slice Fock space. It sends the orthonormal
// Hermite function psi_n to the orthonormal monomial sqrt(nu^{n+1} / (pi n!)) q^n,
// so on coefficients it is a diagonal rescaling (the canonical path). The integral
// forms in both directions are kept as independent cross-checks.
//
// For fixed x the exponent of A lies in the slice of q, so the kernel is a
// complex exponential evaluated in C_I and acts on psi(x) from the left.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fock_space.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"
#include "slice_series.hpp"

namespace qsbt {

namespace detail {

/// Slice unit of q, or i when q is real up to axis_epsilon (any unit then gives
/// the same values to that precision).
inline ImaginaryUnit unit_or_i(const Quaternion& q) {
    return vector_modulus(q) > axis_epsilon ? ImaginaryUnit::normalized(q) : ImaginaryUnit::i();
}

inline std::complex<double> kernel_exponent(std::complex<double> z, double x, double nu) {
    return -0.5 * nu * (z * z + x * x) + nu * std::numbers::sqrt2 * z * x;
}

inline double kernel_prefactor(double nu) { return std::pow(nu / std::numbers::pi, 0.75); }

}  // namespace detail

/// A(q; x).
inline Quaternion kernel_A(const Quaternion& q, double x, double nu) {
    detail::require_positive_weight(nu, "kernel_A");
    const ImaginaryUnit I = detail::unit_or_i(q);
    return I.embed(detail::kernel_prefactor(nu) * std::exp(detail::kernel_exponent(I.project(q), x, nu)));
}

/// sqrt(nu^{n+1} / (pi n!)) = 1 / ||e_n||, the image of psi_n in front of q^n.
inline double fock_basis_scale(std::size_t n, double nu) {
    const double nd = static_cast<double>(n);
    return std::exp(0.5 * ((nd + 1.0) * std::log(nu) - std::log(std::numbers::pi) - std::lgamma(nd + 1.0)));
}

/// sum_{n<=N} psi_n(x) q^n / ||e_n||, converging to A(q; x).
inline Quaternion generating_partial_sum(const Quaternion& q, double x, double nu, std::size_t N) {
    detail::require_positive_weight(nu, "generating_partial_sum");
    const auto psi = psi_all(N, x, nu);
    Quaternion qn{std::sqrt(nu / std::numbers::pi)};
    Quaternion acc = qn * psi[0];
    for (std::size_t n = 1; n <= N; ++n) {
        qn = qn * q * std::sqrt(nu / static_cast<double>(n));
        acc += qn * psi[n];
    }
    return acc;
}

/// Forward transform on coefficients: a_n = c_n sqrt(nu^{n+1} / (pi n!)).
inline FockElement bargmann_coeff(const HermiteExpansion& psi) {
    std::vector<Quaternion> a(psi.coeffs().size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        a[n] = psi.coeffs()[n] * fock_basis_scale(n, psi.nu());
    }
    return {PowerSeries(std::move(a)), psi.nu()};
}

/// Inverse transform on coefficients: c_n = a_n sqrt(pi n! / nu^{n+1}).
inline HermiteExpansion inverse_coeff(const FockElement& f) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = f.coeffs()[n] / fock_basis_scale(n, f.nu);
    }
    return {f.nu, std::move(c)};
}

/// Real-line rule matched to transform integrands e^{-nu x^2} * poly.
inline RealLineRule transform_rule(std::size_t order, double nu) { return RealLineRule(order, nu); }

/// B(psi)(z) at the slice point z of C_I, from psi sampled at the rule's nodes.
inline Quaternion bargmann_quadrature(std::span<const Quaternion> samples, const ImaginaryUnit& I,
                                      std::complex<double> z, double nu, const RealLineRule& rule) {
    detail::require_positive_weight(nu, "bargmann_quadrature");
    if (samples.size() != rule.order()) {
        throw parameter_error("bargmann_quadrature: sample count does not match the rule");
    }
    Quaternion re;
    Quaternion im;
    for (std::size_t k = 0; k < rule.order(); ++k) {
        const std::complex<double> e = std::exp(detail::kernel_exponent(z, rule.nodes()[k], nu)) * rule.weights()[k];
        re += samples[k] * e.real();
        im += samples[k] * e.imag();
    }
    return (re + I.axis() * im) * detail::kernel_prefactor(nu);
}

/// B(psi)(q) by quadrature, from psi sampled at the rule's nodes.
inline Quaternion bargmann_quadrature(std::span<const Quaternion> samples, const Quaternion& q, double nu,
                                      const RealLineRule& rule) {
    const ImaginaryUnit I = detail::unit_or_i(q);
    return bargmann_quadrature(samples, I, I.project(q), nu, rule);
}

inline Quaternion bargmann_quadrature(const SampledFunction& psi, const Quaternion& q, double nu,
                                      const RealLineRule& rule) {
    const auto samples = detail::sample(psi, rule, "bargmann_quadrature");
    return bargmann_quadrature(std::span<const Quaternion>(samples), q, nu, rule);
}

/// Slice rule sized for the inverse integral at |x| <= x_max.
inline SliceQuadrature inverse_rule(double nu, std::size_t degree, double x_max, std::size_t radial_nodes,
                                    std::size_t angular_count) {
    return SliceQuadrature(nu, radial_nodes, angular_count,
                           slice_radius(0.5 * nu, degree + 1, std::numbers::sqrt2 * nu * std::fabs(x_max)));
}

/// B^{-1}(f)(x) = (nu/pi)^{3/4} int_{C_I} exp(-nu/2 (conj(q)^2 + x^2) + nu sqrt(2) conj(q) x) f(q) e^{-nu|q|^2} dλ_I.
inline Quaternion inverse_quadrature(const FockElement& f, double x, const ImaginaryUnit& I, double nu,
                                     const SliceQuadrature& rule) {
    require_same_weight(f.nu, nu, "inverse_quadrature");
    require_same_weight(rule.nu(), nu, "inverse_quadrature");
    rule.require_degree(f.degree(), "inverse_quadrature");
    const Quaternion integral = rule.integrate(I, [&](std::complex<double> z, const Quaternion&) {
        return I.embed(std::exp(detail::kernel_exponent(std::conj(z), x, nu))) * f.series.on_slice(I, z);
    });
    return integral * detail::kernel_prefactor(nu);
}

/// (nu/pi)^{1/2} e^{nu|q|^2/2}: the L^2 norm of A(q; .) and the Fock norm of K_q.
inline double kernel_section_norm(const Quaternion& q, double nu) {
    detail::require_positive_weight(nu, "kernel_section_norm");
    return std::sqrt(nu / std::numbers::pi) * std::exp(0.5 * nu * norm_sq(q));
}

/// int |A(q; x)|^2 dx by the real-line rule (scale nu).
inline double kernel_A_norm_sq_quadrature(const Quaternion& q, double nu, const RealLineRule& rule) {
    return rule.integrate([&](double x) { return norm_sq(kernel_A(q, x, nu)); });
}

}  // namespace qsbt
