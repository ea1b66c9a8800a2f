#pragma once

// The invariant suites run by `qsbt verify`. Each suite draws from its own
// generator seeded by (seed, suite index), so entries do not depend on which
// suites ran before them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "../bargmann.hpp"
#include "../errors.hpp"
#include "../fock_space.hpp"
#include "../hermite.hpp"
#include "../qfourier.hpp"
#include "../quadrature.hpp"
#include "../quaternion.hpp"
#include "../slice_series.hpp"
#include "report.hpp"

namespace qsbt::verify {

struct Outcome {
    double residual = 0.0;
    std::string detail;
};

class Context {
public:
    Context(const RunConfig& config, std::size_t index)
        : config_(config), rng_(make_engine(config.seed, index)) {}

    const RunConfig& config() const noexcept { return config_; }
    std::mt19937_64& rng() noexcept { return rng_; }

    /// {nu/2, nu, 2 nu}.
    std::vector<double> nus() const { return {0.5 * config_.nu, config_.nu, 2.0 * config_.nu}; }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

    Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }

    /// Uniform direction on S^3 times a modulus in [r_min, r_max].
    Quaternion point(double r_min, double r_max) {
        Quaternion q = quaternion();
        while (modulus(q) < 1e-3 || vector_modulus(q) < 1e-3 * modulus(q)) {
            q = quaternion();
        }
        return q * (uniform(r_min, r_max) / modulus(q));
    }

    ImaginaryUnit unit() {
        Quaternion v{0.0, normal(), normal(), normal()};
        while (vector_modulus(v) < 1e-3) {
            v = {0.0, normal(), normal(), normal()};
        }
        return ImaginaryUnit::normalized(v);
    }

    ImaginaryUnit perpendicular(const ImaginaryUnit& I) {
        while (true) {
            Quaternion v{0.0, normal(), normal(), normal()};
            v = v - I.axis() * dot(v, I.axis());
            if (vector_modulus(v) > 1e-3) {
                return ImaginaryUnit::normalized(v);
            }
        }
    }

    std::vector<Quaternion> coefficients(std::size_t degree) {
        std::vector<Quaternion> c(degree + 1);
        for (auto& a : c) {
            a = quaternion();
        }
        return c;
    }

    /// Random expansion with unit L^2 norm.
    HermiteExpansion expansion(double nu, std::size_t degree) {
        auto c = coefficients(degree);
        double s = 0.0;
        for (const auto& a : c) {
            s += norm_sq(a);
        }
        for (auto& a : c) {
            a = a / std::sqrt(s);
        }
        return {nu, std::move(c)};
    }

    /// Random Fock element with unit norm.
    FockElement fock_element(double nu, std::size_t degree) {
        FockElement f{PowerSeries(coefficients(degree)), nu};
        const double norm = std::sqrt(fock_norm_sq(f));
        auto c = f.coeffs();
        for (auto& a : c) {
            a = a / norm;
        }
        return {PowerSeries(std::move(c)), nu};
    }

    RealLineRule line_rule(double scale) const { return RealLineRule(config_.gh_nodes, scale); }

    SliceQuadrature slice_rule(double nu, std::size_t degree, double growth = 0.0, double decay_fraction = 1.0) const {
        return SliceQuadrature::for_degree(nu, degree, config_.radial_nodes, config_.angular_count, growth,
                                           decay_fraction);
    }

private:
    static std::mt19937_64 make_engine(std::uint64_t seed, std::size_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index)};
        return std::mt19937_64(seq);
    }

    const RunConfig& config_;
    std::mt19937_64 rng_;
};

struct Suite {
    std::string name;
    std::string anchor;
    double tolerance;
    std::function<Outcome(Context&)> run;
};

namespace detail {

inline double rel(const Quaternion& a, const Quaternion& b, double scale) { return modulus(a - b) / scale; }

}  // namespace detail

inline std::vector<Suite> quaternion_suites() {
    std::vector<Suite> s;
    s.push_back({"quaternion-multiplicativity", "|pq| = |p||q|, conj(pq) = conj(q) conj(p)", 1e-12, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 10000; ++k) {
                         const Quaternion p = ctx.quaternion();
                         const Quaternion q = ctx.quaternion();
                         const double scale = modulus(p) * modulus(q);
                         worst = std::max(worst, std::fabs(modulus(p * q) - scale) / scale);
                         worst = std::max(worst, max_abs_diff(conj(p * q), conj(q) * conj(p)) / scale);
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"quaternion-unit-square", "u u = -1 for unit pure u", 1e-12, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 10000; ++k) {
                         const ImaginaryUnit u = ctx.unit();
                         worst = std::max(worst, modulus(u.axis() * u.axis() + Quaternion{1.0}));
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"quaternion-power", "q^n by squaring = n-fold product, n <= 64, |q| <= 2", 1e-10, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 200; ++k) {
                         const Quaternion q = ctx.point(0.1, 2.0);
                         Quaternion direct{1.0};
                         for (unsigned n = 1; n <= 64; ++n) {
                             direct = direct * q;
                             worst = std::max(worst, detail::rel(qpow(q, n), direct, modulus(direct)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"quaternion-exp-slice", "exp(x + yI) = e^x (cos y + I sin y)", 1e-13, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 10000; ++k) {
                         const ImaginaryUnit I = ctx.unit();
                         const std::complex<double> z{ctx.uniform(-2.0, 2.0), ctx.uniform(-5.0, 5.0)};
                         const Quaternion expected = I.embed(std::exp(z));
                         worst = std::max(worst, detail::rel(qexp(I.embed(z)), expected, modulus(expected)));
                     }
                     return Outcome{worst, {}};
                 }});
    return s;
}

inline std::vector<Suite> hermite_suites() {
    std::vector<Suite> s;
    s.push_back({"hermite-norms", "||h_n||^2 = 2^n nu^n n! (pi/nu)^{1/2}", 1e-9, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule rule = ctx.line_rule(nu);
                         rule.require_degree(40, "hermite-norms");
                         for (std::size_t n = 0; n <= 20; ++n) {
                             const double q = rule.integrate([&](double x) {
                                 const double h = hermite_h(n, x, nu);
                                 return h * h;
                             });
                             worst = std::max(worst, std::fabs(q - hermite_norm_sq(n, nu)) / hermite_norm_sq(n, nu));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"hermite-orthogonality", "int h_m h_n dx = 0 for m != n", 1e-8, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule rule = ctx.line_rule(nu);
                         rule.require_degree(40, "hermite-orthogonality");
                         for (std::size_t m = 0; m <= 20; ++m) {
                             for (std::size_t n = m + 1; n <= 20; ++n) {
                                 const double q = rule.integrate(
                                     [&](double x) { return hermite_h(m, x, nu) * hermite_h(n, x, nu); });
                                 worst = std::max(
                                     worst, std::fabs(q) / std::sqrt(hermite_norm_sq(m, nu) * hermite_norm_sq(n, nu)));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"hermite-recurrence", "psi_n = h_n / ||h_n|| (normalized vs raw recurrence)", 1e-11, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         for (int k = 0; k <= 120; ++k) {
                             const double x = (-6.0 + 0.1 * k) / std::sqrt(nu);
                             const auto psi = psi_all(30, x, nu);
                             for (std::size_t n = 0; n <= 30; ++n) {
                                 const double h = hermite_h(n, x, nu) / std::sqrt(hermite_norm_sq(n, nu));
                                 worst = std::max(worst, std::fabs(psi[n] - h));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"hermite-parseval", "sum |c_n|^2 = int |psi|^2 dx; projection recovers c_n", 1e-8, [](Context& ctx) {
                     double worst = 0.0;
                     const std::size_t N = ctx.config().trunc;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule rule = ctx.line_rule(nu);
                         rule.require_degree(32, "hermite-parseval");
                         for (int k = 0; k < 10; ++k) {
                             const std::size_t degree = std::min<std::size_t>(16, N);
                             const HermiteExpansion psi = ctx.expansion(nu, degree);
                             const SampledFunction f = SampledFunction::from(psi);
                             const double energy =
                                 rule.integrate([&](double x) { return norm_sq(psi(x)); });
                             worst = std::max(worst, std::fabs(energy - psi.norm_sq()) / psi.norm_sq());
                             const HermiteExpansion back = project(f, nu, N, rule);
                             for (std::size_t n = 0; n <= N; ++n) {
                                 const Quaternion expected = n <= degree ? psi[n] : Quaternion{};
                                 worst = std::max(worst, modulus(back[n] - expected));
                             }
                             worst = std::max(worst, std::fabs(projection_residual(f, back, rule)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    return s;
}

inline std::vector<Suite> slice_suites() {
    std::vector<Suite> s;
    s.push_back({"split-roundtrip", "f_I = F + G J, |f_I|^2 = |F|^2 + |G|^2", 1e-10, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 20; ++k) {
                         const PowerSeries f(ctx.coefficients(12));
                         const ImaginaryUnit I = ctx.unit();
                         const ImaginaryUnit J = ctx.perpendicular(I);
                         const SplitPair sp = split(f, I, J);
                         const auto back = sp.reassemble();
                         for (std::size_t n = 0; n < back.size(); ++n) {
                             worst = std::max(worst, max_abs_diff(back[n], f[n]));
                         }
                         for (int m = 0; m < 100; ++m) {
                             const std::complex<double> z{ctx.uniform(-1.5, 1.5), ctx.uniform(-1.5, 1.5)};
                             const Quaternion direct = f(I.embed(z));
                             const double scale = std::max(1.0, norm_sq(direct));
                             const double split_sq = std::norm(sp.eval_F(z)) + std::norm(sp.eval_G(z));
                             worst = std::max(worst, std::fabs(norm_sq(direct) - split_sq) / scale);
                             worst = std::max(worst, modulus(sp.eval(z) - direct) / std::sqrt(scale));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"representation-formula",
                 "f(x+yJ) = 1/2 (1 - JI) f(x+yI) + 1/2 (1 + JI) f(x-yI)", 1e-10, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 20; ++k) {
                         const PowerSeries f(ctx.coefficients(12));
                         const ImaginaryUnit I = ctx.unit();
                         const ImaginaryUnit J = ctx.unit();
                         for (int m = 0; m < 100; ++m) {
                             const double x = ctx.uniform(-1.5, 1.5);
                             const double y = ctx.uniform(-1.5, 1.5);
                             const Quaternion direct = f(J.embed({x, y}));
                             const Quaternion formula = representation(f(I.embed({x, y})), f(I.embed({x, -y})), I, J);
                             worst = std::max(worst, modulus(formula - direct) / std::max(1.0, modulus(direct)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"extension", "slice regular extension of f restricted to C_I equals f", 1e-10, [](Context& ctx) {
                     double worst = 0.0;
                     for (int k = 0; k < 20; ++k) {
                         const PowerSeries f(ctx.coefficients(12));
                         const ImaginaryUnit I = ctx.unit();
                         const auto h = [&](std::complex<double> z) { return f.on_slice(I, z); };
                         for (int m = 0; m < 100; ++m) {
                             const Quaternion target = ctx.point(0.0, 1.5);
                             const Quaternion direct = f(target);
                             worst = std::max(worst, modulus(extend(h, I, target) - direct) / std::max(1.0, modulus(direct)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"slice-holomorphy", "1/2 (d/dx + I d/dy) f_I = 0", 1e-6, [](Context& ctx) {
                     double worst = 0.0;
                     const double h = 1e-5;
                     for (int k = 0; k < 20; ++k) {
                         const ImaginaryUnit I = ctx.unit();
                         std::vector<Quaternion> c(13);
                         for (auto& a : c) {
                             a = I.embed({ctx.normal(), ctx.normal()});
                         }
                         const PowerSeries f(std::move(c));
                         for (int m = 0; m < 20; ++m) {
                             const std::complex<double> z{ctx.uniform(-1.0, 1.0), ctx.uniform(-1.0, 1.0)};
                             const Quaternion dx = (f.on_slice(I, z + h) - f.on_slice(I, z - h)) / (2.0 * h);
                             const Quaternion dy = (f.on_slice(I, z + std::complex<double>(0.0, h)) -
                                                    f.on_slice(I, z - std::complex<double>(0.0, h))) /
                                                   (2.0 * h);
                             const Quaternion dbar = (dx + I.axis() * dy) * 0.5;
                             worst = std::max(worst, modulus(dbar) / std::max(1.0, modulus(dx)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    return s;
}

inline std::vector<Suite> fock_suites() {
    std::vector<Suite> s;
    s.push_back({"monomial-norms", "<e_m, e_n> = pi m! / nu^{m+1} delta_mn", 1e-9, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const SliceQuadrature rule = ctx.slice_rule(nu, 20);
                         const ImaginaryUnit I = ctx.unit();
                         for (std::size_t n = 0; n <= 20; ++n) {
                             const FockElement e{PowerSeries::monomial(n), nu};
                             const double exact = monomial_inner(n, n, nu);
                             worst = std::max(worst, std::fabs(fock_norm_quadrature(e, I, rule) - exact) / exact);
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"slice-independence",
                 "||f||_I = ||f||_J for all slices (hence 1/2 ||f||_I <= ||f||_J <= 2 ||f||_I)", 1e-8,
                 [](Context& ctx) {
                     double worst = 0.0;
                     std::size_t inequality_violations = 0;
                     const auto nus = ctx.nus();
                     std::vector<SliceQuadrature> rules;
                     for (const double nu : nus) {
                         rules.push_back(ctx.slice_rule(nu, 16));
                     }
                     for (int k = 0; k < 200; ++k) {
                         const std::size_t which = static_cast<std::size_t>(k) % nus.size();
                         const double nu = nus[which];
                         const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 16)(ctx.rng());
                         const FockElement f{PowerSeries(ctx.coefficients(degree)), nu};
                         const double exact = fock_norm_sq(f);
                         double previous = 0.0;
                         for (int m = 0; m < 6; ++m) {
                             const double current = fock_norm_quadrature(f, ctx.unit(), rules[which]);
                             worst = std::max(worst, std::fabs(current - exact) / exact);
                             if (m > 0) {
                                 const double ratio = std::sqrt(current / previous);
                                 inequality_violations += !(ratio >= 0.5 && ratio <= 2.0);
                             }
                             previous = current;
                         }
                     }
                     if (inequality_violations > 0) {
                         return Outcome{std::numeric_limits<double>::infinity(),
                                        std::to_string(inequality_violations) + " factor-2 violations"};
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"reproducing-property", "<f, K_q> = f(q), |q| <= 1.5", 1e-7, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const FockElement f{PowerSeries(ctx.coefficients(16)), nu};
                         const SliceQuadrature rule = reproducing_rule(nu, 16, 1.5, ctx.config().radial_nodes,
                                                                       ctx.config().angular_count);
                         for (int slice = 0; slice < 2; ++slice) {
                             const ImaginaryUnit I = ctx.unit();
                             const ImaginaryUnit J = ctx.unit();
                             for (int a = 0; a < 5; ++a) {
                                 for (int b = 0; b < 5; ++b) {
                                     const Quaternion q = J.embed({-1.2 + 0.6 * a, -1.0 + 0.5 * b});
                                     const Quaternion direct = f(q);
                                     const Quaternion value = reproduce(f, q, I, rule);
                                     worst = std::max(worst, modulus(value - direct) / (1.0 + modulus(direct)));
                                 }
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"kernel-inner-product", "<K_q, K_q'> = K(q', q), |q|, |q'| <= 1.5", 1e-7, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         std::vector<Quaternion> points;
                         const ImaginaryUnit A = ctx.unit();
                         const ImaginaryUnit B = ctx.unit();
                         for (int a = 0; a < 3; ++a) {
                             for (int b = 0; b < 3; ++b) {
                                 points.push_back((a + b) % 2 == 0 ? A.embed({-1.0 + a, -1.0 + b})
                                                                   : B.embed({-1.0 + a, -1.0 + b}));
                             }
                         }
                         std::size_t degree = 0;
                         for (const auto& q : points) {
                             degree = std::max(degree, kernel_section_degree(q, nu));
                         }
                         const SliceQuadrature rule = ctx.slice_rule(nu, degree);
                         rule.require_degree(degree, "kernel-inner-product");
                         const ImaginaryUnit I = ctx.unit();
                         std::vector<std::vector<Quaternion>> samples;
                         for (const auto& q : points) {
                             const FockElement K = kernel_section(q, nu, degree);
                             std::vector<Quaternion> v;
                             v.reserve(rule.node_count());
                             rule.for_each_node(I, [&](std::complex<double> z, const Quaternion&, double) {
                                 v.push_back(K.series.on_slice(I, z));
                             });
                             samples.push_back(std::move(v));
                         }
                         for (std::size_t a = 0; a < points.size(); ++a) {
                             for (std::size_t b = 0; b < points.size(); ++b) {
                                 const auto& sb = samples[b];
                                 std::size_t idx = 0;
                                 const Quaternion inner = rule.integrate_samples(
                                     I, samples[a], [&](std::complex<double>, const Quaternion&, const Quaternion& ka) {
                                         return conj(sb[idx++]) * ka;
                                     });
                                 const double scale =
                                     kernel_section_norm(points[a], nu) * kernel_section_norm(points[b], nu);
                                 worst = std::max(
                                     worst, modulus(inner - reproducing_kernel(points[b], points[a], nu)) / scale);
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"kernel-hermitian", "conj(K(p, q)) = K(q, p)", 1e-12, [](Context& ctx) {
                     double worst = 0.0;
                     const auto nus = ctx.nus();
                     for (int k = 0; k < 1000; ++k) {
                         const double nu = nus[static_cast<std::size_t>(k) % nus.size()];
                         const Quaternion p = ctx.point(0.0, 2.0);
                         const Quaternion q = ctx.point(0.0, 2.0);
                         const double scale = nu / std::numbers::pi * std::exp(nu * modulus(p) * modulus(q));
                         worst = std::max(
                             worst, modulus(conj(reproducing_kernel(p, q, nu)) - reproducing_kernel(q, p, nu)) / scale);
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"point-evaluation-bound", "|f(q)| <= (nu/pi)^{1/2} e^{nu|q|^2/2} ||f||", 0.0, [](Context& ctx) {
                     std::size_t violations = 0;
                     const auto nus = ctx.nus();
                     for (int k = 0; k < 10000; ++k) {
                         const double nu = nus[static_cast<std::size_t>(k) % nus.size()];
                         const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 16)(ctx.rng());
                         const FockElement f{PowerSeries(ctx.coefficients(degree)), nu};
                         const Quaternion q = ctx.point(0.0, 2.5);
                         const double bound = point_eval_bound(q, nu, std::sqrt(fock_norm_sq(f)));
                         violations += !(modulus(f(q)) <= bound * (1.0 + 1e-12));
                     }
                     return Outcome{static_cast<double>(violations),
                                    violations ? std::to_string(violations) + " of 10000 samples exceed the bound"
                                               : std::string{}};
                 }});
    return s;
}

inline std::vector<Suite> bargmann_suites() {
    std::vector<Suite> s;
    s.push_back({"kernel-norms", "||A_q|| = (nu/pi)^{1/2} e^{nu|q|^2/2} = ||K_q||, |q| <= 1.5", 1e-8, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule line = ctx.line_rule(nu);
                         const ImaginaryUnit I = ctx.unit();
                         for (int k = 0; k < 8; ++k) {
                             const Quaternion q = k == 0 ? Quaternion{} : ctx.point(0.0, 1.5);
                             const double closed = kernel_section_norm(q, nu);
                             const double closed_sq = closed * closed;
                             const double a_sq = kernel_A_norm_sq_quadrature(q, nu, line);
                             const double k_diag = reproducing_kernel(q, q, nu).w;
                             const std::size_t degree = kernel_section_degree(q, nu);
                             const SliceQuadrature rule = ctx.slice_rule(nu, degree);
                             const double k_quad = fock_norm_quadrature(kernel_section(q, nu, degree), I, rule);
                             for (const double v : {a_sq, k_diag, k_quad}) {
                                 worst = std::max(worst, std::fabs(v - closed_sq) / closed_sq);
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"bargmann-action", "B(h_n) = (nu/pi)^{1/4} 2^{n/2} nu^n q^n, n <= 12", 1e-8, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule rule = transform_rule(ctx.config().gh_nodes, nu);
                         for (std::size_t n = 0; n <= 12; ++n) {
                             const SampledFunction h{[n, nu](double x) { return Quaternion{hermite_h(n, x, nu)}; },
                                                     std::sqrt((2.0 * static_cast<double>(n) + 81.0) / nu)};
                             const auto samples = qsbt::detail::sample(h, rule, "bargmann-action");
                             const double c = std::pow(nu / std::numbers::pi, 0.25) *
                                              std::pow(2.0, 0.5 * static_cast<double>(n)) *
                                              std::pow(nu, static_cast<double>(n));
                             for (int k = 0; k < 25; ++k) {
                                 const Quaternion q = ctx.point(1.0, 1.5);
                                 const Quaternion expected = qpow(q, static_cast<unsigned>(n)) * c;
                                 const Quaternion value =
                                     bargmann_quadrature(std::span<const Quaternion>(samples), q, nu, rule);
                                 worst = std::max(worst, modulus(value - expected) / modulus(expected));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"transform-bound", "|B(psi)(q)| <= (nu/pi)^{1/2} e^{nu|q|^2/2} ||psi||", 0.0, [](Context& ctx) {
                     std::size_t violations = 0;
                     const auto nus = ctx.nus();
                     std::vector<RealLineRule> lines;
                     for (const double nu : nus) {
                         lines.push_back(transform_rule(ctx.config().gh_nodes, nu));
                     }
                     for (int k = 0; k < 10000; ++k) {
                         const std::size_t slot = static_cast<std::size_t>(k) % nus.size();
                         const double nu = nus[slot];
                         const bool by_quadrature = k % 10 == 0;
                         const std::size_t max_degree = by_quadrature ? 12 : ctx.config().trunc;
                         const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, max_degree)(ctx.rng());
                         const HermiteExpansion psi(nu, ctx.coefficients(degree));
                         const Quaternion q = ctx.point(0.0, 2.5);
                         const double bound = std::sqrt(nu / std::numbers::pi) * std::exp(0.5 * nu * norm_sq(q)) *
                                              std::sqrt(psi.norm_sq());
                         const Quaternion value = by_quadrature
                                                      ? bargmann_quadrature(SampledFunction::from(psi), q, nu, lines[slot])
                                                      : bargmann_coeff(psi)(q);
                         violations += !(modulus(value) <= bound * (1.0 + 1e-10));
                     }
                     return Outcome{static_cast<double>(violations),
                                    violations ? std::to_string(violations) + " of 10000 samples exceed the bound"
                                               : std::string{}};
                 }});
    s.push_back({"isometry-coefficients", "||B psi||_Fock = ||psi||_L2, degree <= trunc", 1e-12, [](Context& ctx) {
                     double worst = 0.0;
                     const auto nus = ctx.nus();
                     for (int k = 0; k < 500; ++k) {
                         const double nu = nus[static_cast<std::size_t>(k) % nus.size()];
                         const HermiteExpansion psi = ctx.expansion(nu, ctx.config().trunc);
                         const double image = std::sqrt(fock_norm_sq(bargmann_coeff(psi)));
                         worst = std::max(worst, std::fabs(image - std::sqrt(psi.norm_sq())));
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"isometry-quadrature", "||B psi||_Fock = ||psi||_L2 by quadrature in both spaces, degree <= 12", 1e-7,
                 [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule line = transform_rule(ctx.config().gh_nodes, nu);
                         const SliceQuadrature rule = ctx.slice_rule(nu, 12);
                         for (int k = 0; k < 2; ++k) {
                             const HermiteExpansion psi = ctx.expansion(nu, 12);
                             const auto samples = qsbt::detail::sample(SampledFunction::from(psi), line, "isometry-quadrature");
                             const double l2 = line.integrate([&](double x) { return norm_sq(psi(x)) ; });
                             const ImaginaryUnit I = ctx.unit();
                             const double fock = rule.integrate(I, [&](std::complex<double> z, const Quaternion&) {
                                 return norm_sq(bargmann_quadrature(std::span<const Quaternion>(samples), I, z, nu, line));
                             });
                             worst = std::max(worst, std::fabs(std::sqrt(fock) - std::sqrt(l2)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"basis-orthogonality", "<B psi_m, B psi_n> = delta_mn by slice quadrature, m, n <= 12", 1e-12,
                 [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const SliceQuadrature rule = ctx.slice_rule(nu, 12);
                         const ImaginaryUnit I = ctx.unit();
                         std::vector<std::vector<Quaternion>> samples;
                         for (std::size_t n = 0; n <= 12; ++n) {
                             const FockElement image = bargmann_coeff(HermiteExpansion::basis(nu, n));
                             std::vector<Quaternion> v;
                             v.reserve(rule.node_count());
                             rule.for_each_node(I, [&](std::complex<double> z, const Quaternion&, double) {
                                 v.push_back(image.series.on_slice(I, z));
                             });
                             samples.push_back(std::move(v));
                         }
                         for (std::size_t m = 0; m <= 12; ++m) {
                             for (std::size_t n = 0; n <= 12; ++n) {
                                 const auto& sn = samples[n];
                                 std::size_t idx = 0;
                                 const Quaternion inner = rule.integrate_samples(
                                     I, samples[m], [&](std::complex<double>, const Quaternion&, const Quaternion& a) {
                                         return conj(sn[idx++]) * a;
                                     });
                                 worst = std::max(worst, modulus(inner - Quaternion{m == n ? 1.0 : 0.0}));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"kernel-pairing", "B(psi)(q) = <psi, conj(A_q)>", 1e-8, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const RealLineRule line = transform_rule(ctx.config().gh_nodes, nu);
                         for (int k = 0; k < 5; ++k) {
                             const HermiteExpansion psi = ctx.expansion(nu, 12);
                             qsbt::detail::sample(SampledFunction::from(psi), line, "kernel-pairing");
                             const FockElement image = bargmann_coeff(psi);
                             for (int m = 0; m < 10; ++m) {
                                 const Quaternion q = ctx.point(0.0, 1.5);
                                 const Quaternion pairing = line.integrate(
                                     [&](double x) { return conj(conj(kernel_A(q, x, nu))) * psi(x); });
                                 const Quaternion direct = image(q);
                                 worst = std::max(worst, modulus(pairing - direct) / std::max(1.0, modulus(direct)));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"generating-function", "sum psi_n(x) q^n / ||e_n|| = A(q; x), 40 terms, |q| <= 1, |x| <= 2", 1e-10,
                 [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         for (int k = 0; k < 200; ++k) {
                             const Quaternion q = ctx.point(0.0, 1.0);
                             const double x = ctx.uniform(-2.0, 2.0);
                             worst = std::max(worst,
                                              modulus(generating_partial_sum(q, x, nu, 40) - kernel_A(q, x, nu)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"inverse-paths", "B^{-1} f(x) by slice integral = by coefficients, x in [-3, 3], 3 slices", 1e-7,
                 [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const FockElement f = ctx.fock_element(nu, 12);
                         const HermiteExpansion psi = inverse_coeff(f);
                         const SliceQuadrature rule =
                             inverse_rule(nu, 12, 3.0, ctx.config().radial_nodes, ctx.config().angular_count);
                         for (int slice = 0; slice < 3; ++slice) {
                             const ImaginaryUnit I = ctx.unit();
                             for (int k = 0; k <= 12; ++k) {
                                 const double x = -3.0 + 0.5 * k;
                                 worst = std::max(worst, modulus(inverse_quadrature(f, x, I, nu, rule) - psi(x)));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"inverse-of-forward-quadrature", "B^{-1}(B psi) = psi with both maps as integrals, degree <= 8",
                 1e-7, [](Context& ctx) {
                     double worst = 0.0;
                     for (const double nu : ctx.nus()) {
                         const HermiteExpansion psi = ctx.expansion(nu, 8);
                         const RealLineRule line = transform_rule(ctx.config().gh_nodes, nu);
                         const auto samples =
                             qsbt::detail::sample(SampledFunction::from(psi), line, "inverse-of-forward-quadrature");
                         const SliceQuadrature rule =
                             inverse_rule(nu, 8, 3.0, ctx.config().radial_nodes, ctx.config().angular_count);
                         rule.require_degree(8, "inverse-of-forward-quadrature");
                         const ImaginaryUnit I = ctx.unit();
                         std::vector<Quaternion> image;
                         image.reserve(rule.node_count());
                         rule.for_each_node(I, [&](std::complex<double> z, const Quaternion&, double) {
                             image.push_back(bargmann_quadrature(std::span<const Quaternion>(samples), I, z, nu, line));
                         });
                         const double c = std::pow(nu / std::numbers::pi, 0.75);
                         for (int k = 0; k <= 12; ++k) {
                             const double x = -3.0 + 0.5 * k;
                             const Quaternion back =
                                 rule.integrate_samples(I, image,
                                                        [&](std::complex<double> z, const Quaternion&, const Quaternion& v) {
                                                            const auto e = std::exp(-0.5 * nu * (std::conj(z) * std::conj(z) + x * x) +
                                                                                    nu * std::numbers::sqrt2 * std::conj(z) * x);
                                                            return I.embed(e) * v;
                                                        }) *
                                 c;
                             worst = std::max(worst, modulus(back - psi(x)));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"coefficient-roundtrip", "B^{-1} B = id and B B^{-1} = id on coefficients", 1e-12, [](Context& ctx) {
                     double worst = 0.0;
                     const auto nus = ctx.nus();
                     for (int k = 0; k < 100; ++k) {
                         const double nu = nus[static_cast<std::size_t>(k) % nus.size()];
                         const HermiteExpansion psi{nu, ctx.coefficients(ctx.config().trunc)};
                         const HermiteExpansion back = inverse_coeff(bargmann_coeff(psi));
                         const FockElement f{PowerSeries(ctx.coefficients(ctx.config().trunc)), nu};
                         const FockElement forth = bargmann_coeff(inverse_coeff(f));
                         for (std::size_t n = 0; n <= ctx.config().trunc; ++n) {
                             worst = std::max(worst, modulus(back[n] - psi[n]) / modulus(psi[n]));
                             worst = std::max(worst, modulus(forth.coeffs()[n] - f.coeffs()[n]) / modulus(f.coeffs()[n]));
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    return s;
}

inline std::vector<Suite> fourier_suites() {
    std::vector<Suite> s;
    s.push_back({"fourier-eigenrelation", "F_I(h_n) = sqrt(2 pi) I^n h_n at nu = 1, n <= 10", 1e-6, [](Context& ctx) {
                     double worst = 0.0;
                     const RealLineRule rule = ctx.line_rule(0.5);
                     const double root = std::sqrt(2.0 * std::numbers::pi);
                     for (int slice = 0; slice < 3; ++slice) {
                         const ImaginaryUnit I = ctx.unit();
                         for (std::size_t n = 0; n <= 10; ++n) {
                             const SampledFunction h{[n](double y) { return Quaternion{hermite_h(n, y, 1.0)}; },
                                                     std::sqrt(2.0 * static_cast<double>(n) + 81.0)};
                             const auto samples = qsbt::detail::sample(h, rule, "fourier-eigenrelation");
                             const Quaternion In = qpow(I.axis(), static_cast<unsigned>(n));
                             double err = 0.0;
                             double sup = 0.0;
                             for (int k = 0; k <= 60; ++k) {
                                 const double x = -3.0 + 0.1 * k;
                                 const Quaternion expected = In * (root * hermite_h(n, x, 1.0));
                                 err = std::max(err, modulus(qft(std::span<const Quaternion>(samples), I, x, rule) - expected));
                                 sup = std::max(sup, modulus(expected));
                             }
                             worst = std::max(worst, err / sup);
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"fourier-linearity", "F_I(psi c) = F_I(psi) c; F_I(c psi) = c F_I(psi) for c in C_I", 1e-12,
                 [](Context& ctx) {
                     double worst = 0.0;
                     const double nu = ctx.config().nu;
                     const RealLineRule rule = ctx.line_rule(0.5 * nu);
                     for (int k = 0; k < 20; ++k) {
                         const HermiteExpansion psi = ctx.expansion(nu, 8);
                         const ImaginaryUnit I = ctx.unit();
                         const Quaternion c = ctx.quaternion();
                         const Quaternion cI = I.embed({ctx.normal(), ctx.normal()});
                         const double x = ctx.uniform(-3.0, 3.0);
                         const Quaternion base = qft(psi, I, x, rule);
                         const double scale = std::max(1.0, modulus(base));
                         worst = std::max(worst, modulus(qft(psi * c, I, x, rule) - base * c) / (scale * modulus(c)));
                         worst = std::max(worst, modulus(qft(cI * psi, I, x, rule) - cI * base) / (scale * modulus(cI)));
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"intertwining",
                 "B(psi)(I x / (sqrt2 nu)) = (nu/pi)^{3/4} e^{x^2/(4 nu)} F_I(e^{-nu y^2/2} psi)(x)", 1e-6,
                 [](Context& ctx) {
                     double worst = 0.0;
                     const auto nus = ctx.nus();
                     for (int k = 0; k < 50; ++k) {
                         const double nu = nus[static_cast<std::size_t>(k) % nus.size()];
                         const RealLineRule rule = transform_rule(ctx.config().gh_nodes, nu);
                         const HermiteExpansion psi = ctx.expansion(nu, 8);
                         const ImaginaryUnit I = ctx.unit();
                         const double x = ctx.uniform(-2.0, 2.0);
                         worst = std::max(worst, check_intertwine(psi, I, x, rule).residual());
                         worst = std::max(worst, check_intertwine(SampledFunction::from(psi), I, x, nu, rule).residual());
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"diagonalization", "B F_I B^{-1}(f)(x) = sqrt(2 pi) f(I x), nu = 1, degree <= 8", 1e-6,
                 [](Context& ctx) {
                     double worst = 0.0;
                     const RealLineRule rule = ctx.line_rule(1.0);
                     std::vector<ImaginaryUnit> slices{ctx.unit(), ctx.unit(), ctx.unit()};
                     for (int k = 0; k < 50; ++k) {
                         const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 8)(ctx.rng());
                         const FockElement f = ctx.fock_element(1.0, degree);
                         const double x = ctx.uniform(-2.0, 2.0);
                         worst = std::max(worst, check_diag(f, slices[static_cast<std::size_t>(k) % 3], x, rule).residual());
                     }
                     return Outcome{worst, {}};
                 }});
    s.push_back({"diagonalization-monomials", "B F_I B^{-1}(e_n)(x) = sqrt(2 pi) (I x)^n, n <= 8", 1e-6,
                 [](Context& ctx) {
                     double worst = 0.0;
                     const RealLineRule rule = ctx.line_rule(1.0);
                     std::vector<double> xs;
                     for (int k = 0; k <= 8; ++k) {
                         xs.push_back(-2.0 + 0.5 * k);
                     }
                     for (int slice = 0; slice < 3; ++slice) {
                         const ImaginaryUnit I = ctx.unit();
                         for (std::size_t n = 0; n <= 8; ++n) {
                             const FockElement e{PowerSeries::monomial(n), 1.0};
                             const auto sides = check_diag(e, I, std::span<const double>(xs), rule);
                             for (std::size_t k = 0; k < xs.size(); ++k) {
                                 const Quaternion exact = qpow(I.axis() * xs[k], static_cast<unsigned>(n)) *
                                                          std::sqrt(2.0 * std::numbers::pi);
                                 worst = std::max(worst, modulus(sides[k].lhs - exact));
                             }
                         }
                     }
                     return Outcome{worst, {}};
                 }});
    return s;
}

/// Every suite, in report order.
inline std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (auto group : {quaternion_suites(), hermite_suites(), slice_suites(), fock_suites(), bargmann_suites(),
                       fourier_suites()}) {
        for (auto& s : group) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : all_suites()) {
        names.push_back(s.name);
    }
    return names;
}

/// Runs one suite. Library errors mark the entry failed and land in `detail`.
inline SuiteEntry run_suite(const Suite& suite, std::size_t index, const RunConfig& config) {
    SuiteEntry e{suite.name, suite.anchor, 0.0, suite.tolerance, Status::fail, 0.0, {}};
    if (const auto it = config.tolerance_overrides.find(suite.name); it != config.tolerance_overrides.end()) {
        e.tolerance = it->second;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        Context ctx(config, index);
        Outcome o = suite.run(ctx);
        e.residual = o.residual;
        e.detail = std::move(o.detail);
    } catch (const qsbt::error& err) {
        e.residual = std::numeric_limits<double>::infinity();
        e.detail = err.what();
    }
    if (config.timing) {
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    e.status = judge(e.residual, e.tolerance);
    return e;
}

/// All suites, in order. Throws config_error for an invalid config or unknown override name.
inline VerificationReport run_verification(const RunConfig& config) {
    validate(config);
    const auto suites = all_suites();
    for (const auto& [name, tol] : config.tolerance_overrides) {
        const bool known = std::any_of(suites.begin(), suites.end(), [&](const Suite& s) { return s.name == name; });
        if (!known) {
            throw config_error("unknown suite in tolerance override: " + name);
        }
    }
    VerificationReport report{config, {}};
    for (std::size_t k = 0; k < suites.size(); ++k) {
        report.entries.push_back(run_suite(suites[k], k, config));
    }
    return report;
}

}  // namespace qsbt::verify
