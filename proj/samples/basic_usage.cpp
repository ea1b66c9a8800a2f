// Transform a two-term Hermite expansion, evaluate it on two slices and check the
// reproducing property at one point.

#include <iostream>

#include <qsbt/qsbt.hpp>

int main() {
    using qsbt::Quaternion;
    const double nu = 1.0;

    // psi = psi_0 + psi_1 j, a quaternion-valued function on the real line.
    const qsbt::HermiteExpansion psi(nu, {Quaternion{1.0}, Quaternion::j()});
    const qsbt::FockElement f = qsbt::bargmann_coeff(psi);

    std::cout << "Fock coefficients:\n";
    for (std::size_t n = 0; n <= f.degree(); ++n) {
        std::cout << "  a_" << n << " = " << f.coeffs()[n] << '\n';
    }
    std::cout << "||psi||^2 = " << psi.norm_sq() << ", ||B psi||^2 = " << qsbt::fock_norm_sq(f) << '\n';

    const Quaternion q{0.3, 0.4, -0.2, 0.5};
    const qsbt::RealLineRule rule = qsbt::transform_rule(128, nu);
    std::cout << "B psi(q) from coefficients: " << f(q) << '\n';
    std::cout << "B psi(q) by quadrature:     "
              << qsbt::bargmann_quadrature(qsbt::SampledFunction::from(psi), q, nu, rule) << '\n';

    for (const auto& I : {qsbt::ImaginaryUnit::i(), qsbt::ImaginaryUnit::k()}) {
        const auto slice_rule = qsbt::SliceQuadrature::for_degree(nu, f.degree(), 96, 256);
        std::cout << "||f||^2 on slice " << I.axis() << ": " << qsbt::fock_norm_quadrature(f, I, slice_rule) << '\n';
    }

    const auto rep_rule = qsbt::reproducing_rule(nu, f.degree(), qsbt::modulus(q), 96, 256);
    std::cout << "<f, K_q> = " << qsbt::reproduce(f, q, qsbt::ImaginaryUnit::i(), rep_rule) << '\n';
}
