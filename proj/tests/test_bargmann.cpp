#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <qsbt/bargmann.hpp>
#include <qsbt/errors.hpp>

#include "oracle_values.hpp"

using qsbt::FockElement;
using qsbt::HermiteExpansion;
using qsbt::ImaginaryUnit;
using qsbt::PowerSeries;
using qsbt::Quaternion;

namespace {

constexpr double pi = std::numbers::pi;

void expect_near(const Quaternion& a, const Quaternion& b, double tol) { EXPECT_LE(qsbt::modulus(a - b), tol) << a << " vs " << b; }

}  // namespace

TEST(Bargmann, KernelMatchesFullQuaternionExponent) {
    for (const auto& r : oracle::kernel_A) {
        expect_near(qsbt::kernel_A(r.q, r.x, r.nu), r.value, 1e-14 * std::max(1.0, qsbt::modulus(r.value)));
    }
}

TEST(Bargmann, KernelExamples) {
    const double nu = 1.3;
    const double c = std::pow(nu / pi, 0.75);
    expect_near(qsbt::kernel_A(Quaternion{}, 0.8, nu), Quaternion{c * std::exp(-nu * 0.32)}, 1e-15);
    const Quaternion q{0.2, -0.5, 0.7, 0.1};
    expect_near(qsbt::kernel_A(q, 0.0, nu), qsbt::qexp(q * q * (-nu / 2)) * c, 1e-15);
    EXPECT_THROW(qsbt::kernel_A(q, 0.0, 0.0), qsbt::parameter_error);
}

TEST(Bargmann, KernelNormClosedForm) {
    const Quaternion q{0.6, 0.3, -0.9, 0.4};
    const double nu = 0.7;
    const qsbt::RealLineRule rule(128, nu);
    const double expected = std::sqrt(nu / pi) * std::exp(nu * qsbt::norm_sq(q) / 2);
    EXPECT_NEAR(qsbt::kernel_section_norm(q, nu), expected, 1e-15);
    EXPECT_NEAR(std::sqrt(qsbt::kernel_A_norm_sq_quadrature(q, nu, rule)), expected, 1e-12 * expected);
}

TEST(Bargmann, GeneratingFunction) {
    const double nu = 1.0;
    for (const double x : {-2.0, -0.3, 1.1, 2.0}) {
        expect_near(qsbt::generating_partial_sum(Quaternion{}, x, nu, 0), qsbt::kernel_A(Quaternion{}, x, nu), 1e-16);
        const Quaternion q{0.4, 0.5, -0.3, 0.6};
        expect_near(qsbt::generating_partial_sum(q, x, nu, 40), qsbt::kernel_A(q, x, nu), 1e-10);
    }
}

TEST(Bargmann, CoefficientMapExamples) {
    const double nu = 1.6;
    const HermiteExpansion h0(nu, {Quaternion{std::sqrt(qsbt::hermite_norm_sq(0, nu))}});
    expect_near(qsbt::bargmann_coeff(h0).coeffs()[0], Quaternion{std::pow(nu / pi, 0.25)}, 1e-15);
    const HermiteExpansion h2 = HermiteExpansion::basis(1.0, 2, Quaternion{std::sqrt(qsbt::hermite_norm_sq(2, 1.0))});
    expect_near(qsbt::bargmann_coeff(h2).coeffs()[2], Quaternion{2.0 * std::pow(pi, -0.25)}, 1e-14);
    const auto a3 = qsbt::bargmann_coeff(HermiteExpansion::basis(nu, 3, Quaternion::j())).coeffs()[3];
    expect_near(a3, Quaternion::j() * std::sqrt(std::pow(nu, 4) / (pi * 6.0)), 1e-15);
}

TEST(Bargmann, InverseCoefficientExamples) {
    const double nu = 0.9;
    const auto e0 = qsbt::inverse_coeff(FockElement{PowerSeries::monomial(0), nu});
    EXPECT_NEAR(std::sqrt(e0.norm_sq()), std::sqrt(pi / nu), 1e-15);
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto psi = qsbt::inverse_coeff(FockElement{PowerSeries::monomial(n), nu});
        const double a = std::pow(pi / nu, 0.25) / (std::pow(2.0, n / 2.0) * std::pow(nu, static_cast<double>(n)));
        for (const double x : {-1.0, 0.4}) {
            EXPECT_NEAR(psi(x).w, a * qsbt::hermite_h(n, x, nu), 1e-13) << n;
        }
    }
    const HermiteExpansion psi(nu, {Quaternion{1, 2, 3, 4}, Quaternion{}, Quaternion{0, -1, 0.5, 2}});
    const auto back = qsbt::inverse_coeff(qsbt::bargmann_coeff(psi));
    for (std::size_t n = 0; n <= 2; ++n) {
        expect_near(back[n], psi[n], 1e-15 * std::max(1.0, qsbt::modulus(psi[n])));
    }
}

TEST(Bargmann, QuadratureMatchesIndependentIntegral) {
    const double nu = 1.5;
    const HermiteExpansion psi(nu, {Quaternion{}, Quaternion{}, Quaternion{1, 0, 1, 0}, Quaternion{}, Quaternion{},
                                    Quaternion::k()});
    const Quaternion q{0.3, 0.4, -0.2, 0.5};
    const qsbt::RealLineRule rule(128, nu);
    expect_near(qsbt::bargmann_quadrature(qsbt::SampledFunction::from(psi), q, nu, rule), oracle::bargmann_integral, 1e-13);
    expect_near(qsbt::bargmann_coeff(psi)(q), oracle::bargmann_integral, 1e-13);
}

TEST(Bargmann, ActionOnHermiteFunctions) {
    const double nu = 1.0;
    const qsbt::RealLineRule rule(128, nu);
    const Quaternion q{0.9, 0.5, -0.4, 0.6};
    for (unsigned n = 0; n <= 12; ++n) {
        const qsbt::SampledFunction h{[n, nu](double x) { return Quaternion{qsbt::hermite_h(n, x, nu)}; }, 10.0};
        const Quaternion expected = qsbt::qpow(q, n) * (std::pow(nu / pi, 0.25) * std::pow(2.0, n / 2.0));
        expect_near(qsbt::bargmann_quadrature(h, q, nu, rule), expected, 1e-8 * qsbt::modulus(expected));
    }
}

TEST(Bargmann, QuadratureRejectsNarrowRule) {
    const auto psi = qsbt::SampledFunction::from(HermiteExpansion::basis(1.0, 10));
    EXPECT_THROW(qsbt::bargmann_quadrature(psi, Quaternion{0.5}, 1.0, qsbt::RealLineRule(8, 1.0)),
                 qsbt::quadrature_under_resolved);
}

TEST(Bargmann, InverseQuadratureExamples) {
    const double nu = 1.0;
    const auto rule = qsbt::inverse_rule(nu, 2, 3.0, 96, 256);
    const Quaternion v = qsbt::inverse_quadrature(FockElement{PowerSeries::monomial(2), nu}, 0.0, ImaginaryUnit::j(), nu, rule);
    expect_near(v, Quaternion{-std::pow(pi, 0.25)}, 1e-12);
    const FockElement e0{PowerSeries::monomial(0), nu};
    const auto series = qsbt::inverse_coeff(e0);
    for (const double x : {-2.5, 0.0, 1.7}) {
        for (const auto& I : {ImaginaryUnit::i(), ImaginaryUnit::k(), qsbt::axis(Quaternion{0, 1, 1, 1})}) {
            expect_near(qsbt::inverse_quadrature(e0, x, I, nu, rule), series(x), 1e-11);
        }
    }
    EXPECT_THROW(qsbt::inverse_quadrature(e0, 0.0, ImaginaryUnit::i(), 2.0, rule), qsbt::mismatched_weight);
}
