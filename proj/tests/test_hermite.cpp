#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <qsbt/errors.hpp>
#include <qsbt/hermite.hpp>

#include "oracle_values.hpp"

using qsbt::HermiteExpansion;
using qsbt::Quaternion;

TEST(Hermite, MatchesSymbolicDerivatives) {
    for (const auto& r : oracle::hermite_symbolic) {
        const double scale = std::max(1.0, std::fabs(r.value));
        EXPECT_NEAR(qsbt::hermite_h(r.n, r.x, r.nu), r.value, 1e-11 * scale) << "n=" << r.n << " x=" << r.x << " nu=" << r.nu;
    }
}

TEST(Hermite, LowOrderClosedForms) {
    for (const double nu : {0.5, 1.0, 2.0}) {
        for (const double x : {-1.5, 0.0, 0.8}) {
            EXPECT_DOUBLE_EQ(qsbt::hermite_h(0, x, nu), std::exp(-0.5 * nu * x * x));
            EXPECT_NEAR(qsbt::hermite_h(1, x, nu), 2 * nu * x * std::exp(-0.5 * nu * x * x), 1e-15);
        }
    }
    EXPECT_DOUBLE_EQ(qsbt::hermite_h(2, 0.0, 1.0), -2.0);
}

TEST(Hermite, NormClosedForm) {
    const double rp = std::sqrt(std::numbers::pi);
    EXPECT_NEAR(qsbt::hermite_norm_sq(0, 1.0), rp, 1e-15);
    EXPECT_NEAR(qsbt::hermite_norm_sq(2, 1.0), 8 * rp, 1e-14);
    EXPECT_NEAR(qsbt::hermite_norm_sq(1, 2.0), 4 * std::sqrt(std::numbers::pi / 2), 1e-14);
    for (std::size_t n : {21u, 40u}) {
        EXPECT_NEAR(std::log(qsbt::hermite_norm_sq(n, 1.3)), qsbt::log_hermite_norm_sq(n, 1.3), 1e-12);
    }
}

TEST(Hermite, NormMatchesIndependentIntegral) {
    for (const auto& r : oracle::hermite_norm_integral) {
        EXPECT_NEAR(qsbt::hermite_norm_sq(r.n, r.nu), r.value, 1e-13 * r.value) << r.n << " " << r.nu;
    }
}

TEST(Hermite, NormalizedValuesMatchReference) {
    for (const auto& r : oracle::psi_reference) {
        EXPECT_NEAR(qsbt::psi_n(r.n, r.x, r.nu), r.value, 1e-12 * std::max(1e-3, std::fabs(r.value)) + 1e-300)
            << "n=" << r.n << " x=" << r.x << " nu=" << r.nu;
    }
}

TEST(Hermite, NormalizedAgreesWithRaw) {
    for (std::size_t n = 0; n <= 30; ++n) {
        const double x = 0.37;
        EXPECT_NEAR(qsbt::psi_n(n, x, 1.4) * std::sqrt(qsbt::hermite_norm_sq(n, 1.4)), qsbt::hermite_h(n, x, 1.4),
                    1e-12 * std::sqrt(qsbt::hermite_norm_sq(n, 1.4)));
    }
    EXPECT_EQ(qsbt::psi_n(1, 0.0, 0.7), 0.0);
    EXPECT_TRUE(std::isfinite(qsbt::psi_n(1000, 3.0, 1.0)));
}

TEST(Hermite, RejectsNonPositiveWeight) {
    EXPECT_THROW(qsbt::hermite_h(2, 0.1, 0.0), qsbt::parameter_error);
    EXPECT_THROW(qsbt::hermite_norm_sq(2, -1.0), qsbt::parameter_error);
    EXPECT_THROW(qsbt::psi_n(2, 0.1, -1.0), qsbt::parameter_error);
    EXPECT_THROW(HermiteExpansion(0.0, {}), qsbt::parameter_error);
}

TEST(Hermite, InnerProduct) {
    const auto p0 = HermiteExpansion::basis(1.0, 0);
    const auto p1 = HermiteExpansion::basis(1.0, 1);
    EXPECT_EQ(qsbt::l2_inner(p1, p1), Quaternion{1.0});
    EXPECT_EQ(qsbt::l2_inner(p0, p1), Quaternion{});
    const HermiteExpansion psi(1.0, {Quaternion{1, 2, 0, -1}, Quaternion{0, 1, 1, 0}});
    const HermiteExpansion phi(1.0, {Quaternion{0.5, 0, 1, 0}, Quaternion{2, 0, 0, 1}});
    const Quaternion q{0.3, -0.2, 0.9, 1.1};
    const Quaternion lhs = qsbt::l2_inner(psi * q, phi);
    const Quaternion rhs = qsbt::l2_inner(psi, phi) * q;
    EXPECT_LT(qsbt::modulus(lhs - rhs), 1e-14);
    EXPECT_THROW(qsbt::l2_inner(psi, HermiteExpansion::basis(2.0, 0)), qsbt::mismatched_weight);
}

TEST(Hermite, InnerProductMatchesQuadrature) {
    const double nu = 0.8;
    const HermiteExpansion psi(nu, {Quaternion{1, 2, 0, -1}, Quaternion{0, 1, 1, 0}, Quaternion{0, 0, 0.5, 0}});
    const HermiteExpansion phi(nu, {Quaternion{0.5, 0, 1, 0}, Quaternion{2, 0, 0, 1}});
    const qsbt::RealLineRule rule(64, nu);
    const Quaternion quad = rule.integrate([&](double x) { return qsbt::conj(phi(x)) * psi(x); });
    EXPECT_LT(qsbt::modulus(quad - qsbt::l2_inner(psi, phi)), 1e-13);
}

TEST(Hermite, ProjectionRoundtrip) {
    const qsbt::RealLineRule rule(128, 1.0);
    const auto back = qsbt::project(qsbt::SampledFunction::from(HermiteExpansion::basis(1.0, 3)), 1.0, 10, rule);
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_LT(qsbt::modulus(back[n] - Quaternion{n == 3 ? 1.0 : 0.0}), 1e-10) << n;
    }
    const qsbt::SampledFunction f{[](double x) { return Quaternion::j() * qsbt::psi_n(0, x, 1.0); }, 10.0};
    EXPECT_LT(qsbt::modulus(qsbt::project(f, 1.0, 4, rule)[0] - Quaternion::j()), 1e-13);
}

TEST(Hermite, ProjectionFlagsUnresolvedModes) {
    const qsbt::RealLineRule rule(128, 1.0);
    const auto psi50 = qsbt::SampledFunction::from(HermiteExpansion::basis(1.0, 50));
    const auto projected = qsbt::project(psi50, 1.0, 10, rule);
    EXPECT_GT(qsbt::projection_residual(psi50, projected, rule), 0.99);
    EXPECT_THROW(qsbt::project(psi50, 1.0, 80, rule), qsbt::quadrature_under_resolved);
    EXPECT_THROW(qsbt::project(psi50, 1.0, 2, qsbt::RealLineRule(8, 1.0)), qsbt::quadrature_under_resolved);
}

TEST(Hermite, GaussianIntegral) {
    EXPECT_NEAR(qsbt::gaussian_integral(1.0, Quaternion{}).w, std::sqrt(std::numbers::pi), 1e-15);
    const double nu = 1.7;
    const double u = 0.6;
    const Quaternion v = qsbt::gaussian_integral(nu, Quaternion{nu * std::sqrt(2.0) * u});
    EXPECT_NEAR(v.w, std::sqrt(std::numbers::pi / nu) * std::exp(nu * u * u / 2), 1e-14);
    const Quaternion I = qsbt::axis(Quaternion{0, 1, -1, 2}).axis();
    const double x = 1.3;
    const Quaternion g = qsbt::gaussian_integral(0.5, I * x);
    EXPECT_LT(qsbt::modulus(g - Quaternion{std::sqrt(2 * std::numbers::pi) * std::exp(-x * x / 2)}), 1e-14);
    const qsbt::RealLineRule rule(64, 0.5);
    const Quaternion quad = rule.integrate([&](double y) { return qsbt::qexp(I * (x * y)) * std::exp(-0.5 * y * y); });
    EXPECT_LT(qsbt::modulus(quad - g), 1e-12);
    EXPECT_THROW(qsbt::gaussian_integral(0.0, Quaternion{}), qsbt::parameter_error);
}
