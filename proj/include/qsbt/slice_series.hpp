#pragma once

// Slice regular functions on H, held as truncated power series f(q) = sum q^n a_n
// with quaternion coefficients on the RIGHT.
//
// Restricted to a slice C_I such an f splits as f(z) = F(z) + G(z) J with F, G
// holomorphic and C_I-valued (J any unit orthogonal to I), and its values on one
// slice determine it everywhere through the representation formula.

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"

namespace qsbt {

class PowerSeries {
public:
    static constexpr std::size_t default_degree = 64;

    PowerSeries() : coeffs_(1) {}
    explicit PowerSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            coeffs_.emplace_back();
        }
    }

    /// e_n(q) c = q^n c.
    static PowerSeries monomial(std::size_t n, const Quaternion& c = Quaternion{1.0}) {
        std::vector<Quaternion> coeffs(n + 1);
        coeffs[n] = c;
        return PowerSeries(std::move(coeffs));
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Quaternion>& coeffs() const noexcept { return coeffs_; }
    const Quaternion& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Left-nested Horner: a_0 + q (a_1 + q (a_2 + ...)).
    Quaternion operator()(const Quaternion& q) const {
        Quaternion acc = coeffs_.back();
        for (std::size_t n = coeffs_.size() - 1; n-- > 0;) {
            acc = q * acc + coeffs_[n];
        }
        return acc;
    }

    /// Value at the slice point z = x + y I, with powers formed in C.
    /// Equals operator()(I.embed(z)) but avoids full quaternion products.
    Quaternion on_slice(const ImaginaryUnit& unit, std::complex<double> z) const {
        // sum Re(z^n) a_n + I * sum Im(z^n) a_n
        Quaternion re;
        Quaternion im;
        std::complex<double> zn{1.0, 0.0};
        for (const auto& a : coeffs_) {
            re += a * zn.real();
            im += a * zn.imag();
            zn *= z;
        }
        return re + unit.axis() * im;
    }

    /// sum r^n |a_n|, which bounds |f(q)| on |q| <= r.
    double magnitude_bound(double radius) const {
        double s = 0.0;
        double rn = 1.0;
        for (const auto& a : coeffs_) {
            s += rn * modulus(a);
            rn *= radius;
        }
        return s;
    }

private:
    std::vector<Quaternion> coeffs_;
};

inline Quaternion eval(const PowerSeries& f, const Quaternion& q) { return f(q); }

/// f restricted to C_I written as F(z) + G(z) J. Coefficients are C_I-valued,
/// stored as complex numbers (a + b i stands for a + b I).
struct SplitPair {
    std::vector<std::complex<double>> F;
    std::vector<std::complex<double>> G;
    ImaginaryUnit I;
    ImaginaryUnit J;

    static std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
        std::complex<double> acc = c.back();
        for (std::size_t n = c.size() - 1; n-- > 0;) {
            acc = acc * z + c[n];
        }
        return acc;
    }

    std::complex<double> eval_F(std::complex<double> z) const { return horner(F, z); }
    std::complex<double> eval_G(std::complex<double> z) const { return horner(G, z); }

    /// F(z) + G(z) J as a quaternion.
    Quaternion eval(std::complex<double> z) const { return I.embed(eval_F(z)) + I.embed(eval_G(z)) * J.axis(); }

    /// alpha_n + beta_n J, the original coefficients.
    std::vector<Quaternion> reassemble() const {
        std::vector<Quaternion> out(F.size());
        for (std::size_t n = 0; n < F.size(); ++n) {
            out[n] = I.embed(F[n]) + I.embed(G[n]) * J.axis();
        }
        return out;
    }
};

inline constexpr double perpendicular_tolerance = 1e-10;

/// Decomposes each a_n in the orthonormal basis {1, I, J, IJ}.
inline SplitPair split(const PowerSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    if (std::fabs(dot(I.axis(), J.axis())) > perpendicular_tolerance) {
        throw not_perpendicular("split: <I, J> must vanish");
    }
    const Quaternion IJ = I.axis() * J.axis();
    SplitPair out{{}, {}, I, J};
    out.F.reserve(f.coeffs().size());
    out.G.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        out.F.emplace_back(a.w, dot(a, I.axis()));
        out.G.emplace_back(dot(a, J.axis()), dot(a, IJ));
    }
    return out;
}

/// f(x + yJ) from f(x + yI) and f(x - yI):
/// 1/2 (1 - JI) f(x+yI) + 1/2 (1 + JI) f(x-yI).
inline Quaternion representation(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& I,
                                 const ImaginaryUnit& J) {
    const Quaternion JI = J.axis() * I.axis();
    return (Quaternion{1.0} - JI) * f_plus * 0.5 + (Quaternion{1.0} + JI) * f_minus * 0.5;
}

/// Slice regular extension of h, holomorphic on C_I, evaluated at target = x + yJ.
inline Quaternion extend(const std::function<Quaternion(std::complex<double>)>& h, const ImaginaryUnit& I,
                         const Quaternion& target) {
    const double y = vector_modulus(target);
    if (!(y > axis_epsilon)) {
        return h({target.w, 0.0});
    }
    const ImaginaryUnit J = axis(target);
    const Quaternion h_plus = h({target.w, y});
    const Quaternion h_minus = h({target.w, -y});
    const Quaternion JI = J.axis() * I.axis();
    return (h_plus + h_minus) * 0.5 + JI * (h_minus - h_plus) * 0.5;
}

}  // namespace qsbt
