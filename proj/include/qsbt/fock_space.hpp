#pragma once

// Slice hyperholomorphic Bargmann-Fock space: slice regular f with
//
//     ||f||^2 = int_{C_I} |f(p)|^2 e^{-nu |p|^2} dx dy < infinity
//
// for one (hence every) slice C_I. The monomials e_n(q) = q^n are orthogonal with
// ||e_n||^2 = pi n! / nu^{n+1}, so for f = sum e_n a_n, g = sum e_n b_n
//
//     <f, g> = (pi/nu) sum n!/nu^n conj(b_n) a_n.
//
// The reproducing kernel is K(p, q) = (nu/pi) sum nu^n p^n conj(q)^n / n!.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"
#include "slice_series.hpp"

namespace qsbt {

struct FockElement {
    PowerSeries series;
    double nu = 1.0;

    FockElement(PowerSeries s, double weight) : series(std::move(s)), nu(weight) {
        detail::require_positive_weight(nu, "FockElement");
    }

    std::size_t degree() const noexcept { return series.degree(); }
    const std::vector<Quaternion>& coeffs() const noexcept { return series.coeffs(); }
    Quaternion operator()(const Quaternion& q) const { return series(q); }
};

/// n! / nu^n, exact products up to n = 20 and log-gamma above.
inline double monomial_weight(std::size_t n, double nu) {
    if (n <= 20) {
        double v = 1.0;
        for (std::size_t k = 1; k <= n; ++k) {
            v *= static_cast<double>(k) / nu;
        }
        return v;
    }
    const double nd = static_cast<double>(n);
    return std::exp(std::lgamma(nd + 1.0) - nd * std::log(nu));
}

/// <e_m, e_n> = pi m! / nu^{m+1} delta_{mn}.
inline double monomial_inner(std::size_t m, std::size_t n, double nu) {
    detail::require_positive_weight(nu, "monomial_inner");
    if (m != n) {
        return 0.0;
    }
    return std::numbers::pi / nu * monomial_weight(m, nu);
}

/// Coefficient formula for <f, g>. Right-linear in f.
inline Quaternion fock_inner(const FockElement& f, const FockElement& g) {
    require_same_weight(f.nu, g.nu, "fock_inner");
    const std::size_t shared = std::min(f.coeffs().size(), g.coeffs().size());
    Quaternion acc;
    for (std::size_t n = 0; n < shared; ++n) {
        acc += conj(g.coeffs()[n]) * f.coeffs()[n] * monomial_weight(n, f.nu);
    }
    return acc * (std::numbers::pi / f.nu);
}

inline double fock_norm_sq(const FockElement& f) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        s += norm_sq(f.coeffs()[n]) * monomial_weight(n, f.nu);
    }
    return s * std::numbers::pi / f.nu;
}

namespace detail {

inline void require_rule_weight(const SliceQuadrature& rule, double nu, const char* where) {
    require_same_weight(rule.nu(), nu, where);
}

}  // namespace detail

/// int_{C_I} |f(p)|^2 e^{-nu|p|^2} dλ_I(p) by the polar rule.
inline double fock_norm_quadrature(const FockElement& f, const ImaginaryUnit& I, const SliceQuadrature& rule) {
    detail::require_rule_weight(rule, f.nu, "fock_norm_quadrature");
    rule.require_degree(f.degree(), "fock_norm_quadrature");
    return rule.integrate(I, [&](std::complex<double> z, const Quaternion&) { return norm_sq(f.series.on_slice(I, z)); });
}

/// int_{C_I} conj(g(p)) f(p) e^{-nu|p|^2} dλ_I(p) by the polar rule.
inline Quaternion fock_inner_quadrature(const FockElement& f, const FockElement& g, const ImaginaryUnit& I,
                                        const SliceQuadrature& rule) {
    require_same_weight(f.nu, g.nu, "fock_inner_quadrature");
    detail::require_rule_weight(rule, f.nu, "fock_inner_quadrature");
    rule.require_degree(std::max(f.degree(), g.degree()), "fock_inner_quadrature");
    return rule.integrate(I, [&](std::complex<double> z, const Quaternion&) {
        return conj(g.series.on_slice(I, z)) * f.series.on_slice(I, z);
    });
}

inline constexpr std::size_t kernel_term_cap = 512;

/// K(p, q) summed in the written order p^n conj(q)^n, stopping once the term
/// bound (nu|p||q|)^n / n! drops below 1e-16 of the accumulated bound.
inline Quaternion reproducing_kernel(const Quaternion& p, const Quaternion& q, double nu) {
    detail::require_positive_weight(nu, "reproducing_kernel");
    const Quaternion qc = conj(q);
    const double x = nu * modulus(p) * modulus(q);
    // p^n and conj(q)^n each carry sqrt(nu^n / n!) to stay in range.
    Quaternion pn{1.0};
    Quaternion qn{1.0};
    Quaternion sum{1.0};
    double bound = 1.0;
    double accumulated = 1.0;
    for (std::size_t n = 1; n < kernel_term_cap; ++n) {
        const double s = std::sqrt(nu / static_cast<double>(n));
        pn = pn * p * s;
        qn = qn * qc * s;
        sum += pn * qn;
        bound *= x / static_cast<double>(n);
        accumulated += bound;
        if (static_cast<double>(n) > x && bound < 1e-16 * accumulated) {
            break;
        }
    }
    return sum * (nu / std::numbers::pi);
}

/// Truncation degree for the kernel section K_q: the Fock-norm tail
/// (nu/pi) sum_{n>N} (nu|q|^2)^n / n! falls below 1e-17 of ||K_q||^2.
inline std::size_t kernel_section_degree(const Quaternion& q, double nu) {
    const double x = nu * norm_sq(q);
    double term = 1.0;
    double acc = 1.0;
    std::size_t n = 0;
    while (n + 1 < kernel_term_cap) {
        ++n;
        term *= x / static_cast<double>(n);
        acc += term;
        if (static_cast<double>(n) > x && term < 1e-17 * acc) {
            break;
        }
    }
    return n;
}

/// K_q = K(., q) as a power series: a_n = (nu/pi) nu^n conj(q)^n / n!.
inline FockElement kernel_section(const Quaternion& q, double nu, std::size_t degree) {
    detail::require_positive_weight(nu, "kernel_section");
    std::vector<Quaternion> a(degree + 1);
    const Quaternion qc = conj(q);
    Quaternion cur{nu / std::numbers::pi};
    a[0] = cur;
    for (std::size_t n = 1; n <= degree; ++n) {
        cur = cur * qc * (nu / static_cast<double>(n));
        a[n] = cur;
    }
    return {PowerSeries(std::move(a)), nu};
}

inline FockElement kernel_section(const Quaternion& q, double nu) {
    return kernel_section(q, nu, kernel_section_degree(q, nu));
}

namespace detail {

/// K(p, q) for fixed q and many p on one slice. Caches the right factors
/// sqrt(nu^n/n!) conj(q)^n and their left products with I, so each p costs a
/// complex power and two scalar-quaternion updates per term.
class KernelRow {
public:
    KernelRow(const Quaternion& q, double nu, const ImaginaryUnit& I) : nu_(nu), q_modulus_(modulus(q)), unit_(I) {
        const Quaternion qc = conj(q);
        Quaternion cur{1.0};
        right_.push_back(cur);
        left_i_.push_back(I.axis() * cur);
        for (std::size_t n = 1; n < kernel_term_cap; ++n) {
            cur = cur * qc * std::sqrt(nu / static_cast<double>(n));
            right_.push_back(cur);
            left_i_.push_back(I.axis() * cur);
        }
    }

    /// K(p, q) for p = unit.embed(z).
    Quaternion at(std::complex<double> z) const {
        const double x = nu_ * std::abs(z) * q_modulus_;
        std::complex<double> zn{1.0, 0.0};
        Quaternion sum = right_[0];
        double bound = 1.0;
        double accumulated = 1.0;
        for (std::size_t n = 1; n < kernel_term_cap; ++n) {
            zn *= z * std::sqrt(nu_ / static_cast<double>(n));
            sum += right_[n] * zn.real() + left_i_[n] * zn.imag();
            bound *= x / static_cast<double>(n);
            accumulated += bound;
            if (static_cast<double>(n) > x && bound < 1e-16 * accumulated) {
                break;
            }
        }
        return sum * (nu_ / std::numbers::pi);
    }

private:
    double nu_;
    double q_modulus_;
    ImaginaryUnit unit_;
    std::vector<Quaternion> right_;
    std::vector<Quaternion> left_i_;
};

}  // namespace detail

/// Slice rule sized for reproducing integrals at points with |q| <= q_modulus.
inline SliceQuadrature reproducing_rule(double nu, std::size_t degree, double q_modulus, std::size_t radial_nodes,
                                        std::size_t angular_count) {
    return SliceQuadrature(nu, radial_nodes, angular_count, slice_radius(nu, degree + 1, nu * q_modulus));
}

/// int_{C_I} conj(K(p, q)) f(p) e^{-nu|p|^2} dλ_I(p), which reproduces f(q).
inline Quaternion reproduce(const FockElement& f, const Quaternion& q, const ImaginaryUnit& I,
                            const SliceQuadrature& rule) {
    detail::require_rule_weight(rule, f.nu, "reproduce");
    rule.require_degree(f.degree(), "reproduce");
    // Kernel terms up to the cap must be separated by the angular rule.
    const double x = f.nu * rule.radius() * modulus(q);
    if (static_cast<double>(rule.angular_count()) <= std::min(x + 40.0, double(kernel_term_cap)) + f.degree()) {
        throw quadrature_under_resolved("reproduce: angular count too small for the kernel at |q|");
    }
    const detail::KernelRow row(q, f.nu, I);
    return rule.integrate(I, [&](std::complex<double> z, const Quaternion&) {
        return conj(row.at(z)) * f.series.on_slice(I, z);
    });
}

/// (nu/pi)^{1/2} e^{nu|q|^2/2} ||f||, the bound on |f(q)|.
inline double point_eval_bound(const Quaternion& q, double nu, double norm_f) {
    detail::require_positive_weight(nu, "point_eval_bound");
    if (norm_f < 0.0) {
        throw parameter_error("point_eval_bound: norm must be >= 0");
    }
    return std::sqrt(nu / std::numbers::pi) * std::exp(0.5 * nu * norm_sq(q)) * norm_f;
}

}  // namespace qsbt
