#pragma once

// Closed-form norms next to their quadrature values.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bargmann.hpp"
#include "errors.hpp"
#include "fock_space.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"

namespace qsbt {

struct TableRow {
    double key;
    double closed_form;
    std::vector<double> quadrature;

    double max_rel_diff() const {
        double worst = 0.0;
        for (const double v : quadrature) {
            worst = std::max(worst, std::fabs(v - closed_form) / std::fabs(closed_form));
        }
        return worst;
    }
};

struct Table {
    std::string key_name;
    std::vector<std::string> quadrature_names;
    std::vector<TableRow> rows;
};

inline constexpr std::size_t table_max_degree = 64;
inline constexpr double table_max_modulus = 3.0;

/// ||e_n||^2 = pi n! / nu^{n+1} against slice quadrature on C_i.
inline Table monomial_norm_table(std::size_t n_max, double nu, std::size_t radial_nodes, std::size_t angular_count) {
    if (n_max > table_max_degree) {
        throw config_error("monomial-norms: n must be <= " + std::to_string(table_max_degree));
    }
    detail::require_positive_weight(nu, "monomial-norms");
    const SliceQuadrature rule = SliceQuadrature::for_degree(nu, n_max, radial_nodes, angular_count);
    Table t{"n", {"slice_quadrature"}, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const FockElement e{PowerSeries::monomial(n), nu};
        t.rows.push_back({static_cast<double>(n), monomial_inner(n, n, nu),
                          {fock_norm_quadrature(e, ImaginaryUnit::i(), rule)}});
    }
    return t;
}

/// ||h_n||^2 = 2^n nu^n n! (pi/nu)^{1/2} against Gauss-Hermite quadrature.
inline Table hermite_norm_table(std::size_t n_max, double nu, std::size_t gh_nodes) {
    if (n_max > table_max_degree) {
        throw config_error("hermite-norms: n must be <= " + std::to_string(table_max_degree));
    }
    detail::require_positive_weight(nu, "hermite-norms");
    const RealLineRule rule(gh_nodes, nu);
    rule.require_degree(2 * n_max, "hermite-norms");
    Table t{"n", {"gauss_hermite"}, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double q = rule.integrate([&](double x) {
            const double h = hermite_h(n, x, nu);
            return h * h;
        });
        t.rows.push_back({static_cast<double>(n), hermite_norm_sq(n, nu), {q}});
    }
    return t;
}

/// ||A_q|| = (nu/pi)^{1/2} e^{nu|q|^2/2} = ||K_q|| at q = r (1 + i + j + k)/2 for
/// r = 0, q_max/steps, ..., q_max, with ||A_q|| by Gauss-Hermite, ||K_q|| as
/// K(q, q)^{1/2} and by slice quadrature.
inline Table kernel_norm_table(double q_max, std::size_t steps, double nu, std::size_t gh_nodes,
                               std::size_t radial_nodes, std::size_t angular_count) {
    if (!(q_max >= 0.0) || q_max > table_max_modulus) {
        throw config_error("kernel-norms: |q| must lie in [0, 3]");
    }
    if (steps < 1) {
        throw config_error("kernel-norms: steps must be >= 1");
    }
    detail::require_positive_weight(nu, "kernel-norms");
    const RealLineRule line(gh_nodes, nu);
    Table t{"|q|", {"A_q_gauss_hermite", "K_qq", "K_q_slice_quadrature"}, {}};
    for (std::size_t k = 0; k <= steps; ++k) {
        const double r = q_max * static_cast<double>(k) / static_cast<double>(steps);
        const Quaternion q = Quaternion{1.0, 1.0, 1.0, 1.0} * (0.5 * r);
        const std::size_t degree = kernel_section_degree(q, nu);
        const SliceQuadrature rule = SliceQuadrature::for_degree(nu, degree, radial_nodes, angular_count);
        t.rows.push_back({r,
                          kernel_section_norm(q, nu),
                          {std::sqrt(kernel_A_norm_sq_quadrature(q, nu, line)),
                           std::sqrt(reproducing_kernel(q, q, nu).w),
                           std::sqrt(fock_norm_quadrature(kernel_section(q, nu, degree), ImaginaryUnit::i(), rule))}});
    }
    return t;
}

}  // namespace qsbt
