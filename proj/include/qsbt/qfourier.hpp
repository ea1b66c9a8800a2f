#pragma once

// Left one-dimensional quaternionic Fourier transform
//
//     F_I(psi)(x) = int e^{I x y} psi(y) dy,
//
// the kernel multiplying psi from the left. Inputs are Gaussian-damped, so the
// integral is taken with the folded Gauss-Hermite real-line rule.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "bargmann.hpp"
#include "errors.hpp"
#include "fock_space.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"

namespace qsbt {

/// F_I from samples of psi at the rule's nodes.
inline Quaternion qft(std::span<const Quaternion> samples, const ImaginaryUnit& I, double x, const RealLineRule& rule) {
    if (samples.size() != rule.order()) {
        throw parameter_error("qft: sample count does not match the rule");
    }
    Quaternion re;
    Quaternion im;
    for (std::size_t k = 0; k < rule.order(); ++k) {
        const double phase = x * rule.nodes()[k];
        const double w = rule.weights()[k];
        re += samples[k] * (w * std::cos(phase));
        im += samples[k] * (w * std::sin(phase));
    }
    return re + I.axis() * im;
}

inline Quaternion qft(const SampledFunction& psi, const ImaginaryUnit& I, double x, const RealLineRule& rule) {
    const auto samples = detail::sample(psi, rule, "qft");
    return qft(std::span<const Quaternion>(samples), I, x, rule);
}

/// Expansion input; the rule should have scale nu/2 to match the e^{-nu y^2/2} decay.
inline Quaternion qft(const HermiteExpansion& psi, const ImaginaryUnit& I, double x, const RealLineRule& rule) {
    return qft(SampledFunction::from(psi), I, x, rule);
}

/// Both sides of B(psi)(I x / (sqrt(2) nu)) = (nu/pi)^{3/4} e^{x^2/(4 nu)} F_I(e^{-nu y^2/2} psi)(x).
struct IdentitySides {
    Quaternion lhs;
    Quaternion rhs;

    double residual() const { return modulus(lhs - rhs); }
};

namespace detail {

inline Quaternion intertwine_rhs(const SampledFunction& psi, const ImaginaryUnit& I, double x, double nu,
                                 const RealLineRule& rule) {
    const SampledFunction damped{[&](double y) { return psi(y) * std::exp(-0.5 * nu * y * y); }, psi.support_hint};
    return qft(damped, I, x, rule) * (std::pow(nu / std::numbers::pi, 0.75) * std::exp(x * x / (4.0 * nu)));
}

inline Quaternion intertwine_point(const ImaginaryUnit& I, double x, double nu) {
    return I.axis() * (x / (std::numbers::sqrt2 * nu));
}

}  // namespace detail

/// lhs by the coefficient path, rhs by quadrature of F_I on the damped input.
/// The rule should have scale nu.
inline IdentitySides check_intertwine(const HermiteExpansion& psi, const ImaginaryUnit& I, double x,
                                      const RealLineRule& rule) {
    const double nu = psi.nu();
    return {bargmann_coeff(psi)(detail::intertwine_point(I, x, nu)),
            detail::intertwine_rhs(SampledFunction::from(psi), I, x, nu, rule)};
}

/// lhs by the forward quadrature, rhs by quadrature of F_I on the damped input.
inline IdentitySides check_intertwine(const SampledFunction& psi, const ImaginaryUnit& I, double x, double nu,
                                      const RealLineRule& rule) {
    return {bargmann_quadrature(psi, detail::intertwine_point(I, x, nu), nu, rule),
            detail::intertwine_rhs(psi, I, x, nu, rule)};
}

/// Both sides of B F_I B^{-1}(f)(x) = sqrt(2 pi) f(I x) at nu = 1, for each x.
///
/// The left side composes the three maps numerically: psi = B^{-1} f on
/// coefficients, F_I psi by quadrature (rule order of `rule`, scale 1/2) sampled
/// at the nodes of `rule` (scale 1), then the forward quadrature at the real
/// point x. A(x; .) is real there, so the left constant I^n of F_I passes through.
inline std::vector<IdentitySides> check_diag(const FockElement& f, const ImaginaryUnit& I, std::span<const double> xs,
                                             const RealLineRule& rule) {
    if (f.nu != 1.0) {
        throw parameter_error("check_diag: the identity holds at nu = 1 only");
    }
    if (rule.scale() != 1.0) {
        throw parameter_error("check_diag: outer rule must have scale 1");
    }
    const HermiteExpansion psi = inverse_coeff(f);
    const RealLineRule inner(rule.order(), 0.5);
    const auto psi_samples = detail::sample(SampledFunction::from(psi), inner, "check_diag");
    std::vector<Quaternion> transformed(rule.order());
    for (std::size_t k = 0; k < rule.order(); ++k) {
        transformed[k] = qft(std::span<const Quaternion>(psi_samples), I, rule.nodes()[k], inner);
    }
    std::vector<IdentitySides> out;
    out.reserve(xs.size());
    for (const double x : xs) {
        out.push_back({bargmann_quadrature(std::span<const Quaternion>(transformed), Quaternion{x}, 1.0, rule),
                       f(I.axis() * x) * std::sqrt(2.0 * std::numbers::pi)});
    }
    return out;
}

inline IdentitySides check_diag(const FockElement& f, const ImaginaryUnit& I, double x, const RealLineRule& rule) {
    const double xs[] = {x};
    return check_diag(f, I, std::span<const double>(xs), rule).front();
}

}  // namespace qsbt
