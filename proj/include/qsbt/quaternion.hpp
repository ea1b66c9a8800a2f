#pragma once

// Quaternion algebra H = { w + x i + y j + z k }, with i^2 = j^2 = k^2 = ijk = -1.
//
// Multiplication is associative but not commutative. Everything else in the
// library is built on the slice picture: each non-real q lies in exactly one
// complex plane C_I = R + R I, where I is a unit pure quaternion (I^2 = -1).
// Inside a slice quaternions commute and behave like complex numbers, which is
// what makes exp, powers, and slice integration cheap and exact.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>

#include "errors.hpp"

namespace qsbt {

template <std::floating_point Real>
struct basic_quaternion {
    Real w{};  ///< scalar part
    Real x{};  ///< coefficient of i
    Real y{};  ///< coefficient of j
    Real z{};  ///< coefficient of k

    constexpr basic_quaternion() = default;
    constexpr basic_quaternion(Real scalar) : w(scalar) {}  // NOLINT: real numbers embed in H
    constexpr basic_quaternion(Real w_, Real x_, Real y_, Real z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr basic_quaternion i() { return {0, 1, 0, 0}; }
    static constexpr basic_quaternion j() { return {0, 0, 1, 0}; }
    static constexpr basic_quaternion k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const basic_quaternion&) const = default;

    constexpr basic_quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr basic_quaternion& operator+=(const basic_quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr basic_quaternion& operator-=(const basic_quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr basic_quaternion& operator*=(Real s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    constexpr basic_quaternion& operator/=(Real s) {
        w /= s;
        x /= s;
        y /= s;
        z /= s;
        return *this;
    }
    constexpr basic_quaternion& operator*=(const basic_quaternion& o) { return *this = *this * o; }

    friend constexpr basic_quaternion operator+(basic_quaternion a, const basic_quaternion& b) { return a += b; }
    friend constexpr basic_quaternion operator-(basic_quaternion a, const basic_quaternion& b) { return a -= b; }
    friend constexpr basic_quaternion operator*(basic_quaternion a, Real s) { return a *= s; }
    friend constexpr basic_quaternion operator*(Real s, basic_quaternion a) { return a *= s; }
    friend constexpr basic_quaternion operator/(basic_quaternion a, Real s) { return a /= s; }

    // Hamilton product.
    friend constexpr basic_quaternion operator*(const basic_quaternion& p, const basic_quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_quaternion& q) {
        return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
    }
};

using Quaternion = basic_quaternion<double>;

template <std::floating_point Real>
constexpr basic_quaternion<Real> mul(const basic_quaternion<Real>& p, const basic_quaternion<Real>& q) {
    return p * q;
}

template <std::floating_point Real>
constexpr basic_quaternion<Real> conj(const basic_quaternion<Real>& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

template <std::floating_point Real>
constexpr Real norm_sq(const basic_quaternion<Real>& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <std::floating_point Real>
Real modulus(const basic_quaternion<Real>& q) {
    return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z));
}

/// Euclidean inner product in R^4.
template <std::floating_point Real>
constexpr Real dot(const basic_quaternion<Real>& p, const basic_quaternion<Real>& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

template <std::floating_point Real>
constexpr basic_quaternion<Real> vector_part(const basic_quaternion<Real>& q) {
    return {0, q.x, q.y, q.z};
}

template <std::floating_point Real>
Real vector_modulus(const basic_quaternion<Real>& q) {
    return std::hypot(q.x, q.y, q.z);
}

/// Largest componentwise absolute difference.
template <std::floating_point Real>
Real max_abs_diff(const basic_quaternion<Real>& p, const basic_quaternion<Real>& q) {
    return std::fmax(std::fmax(std::fabs(p.w - q.w), std::fabs(p.x - q.x)),
                     std::fmax(std::fabs(p.y - q.y), std::fabs(p.z - q.z)));
}

template <std::floating_point Real>
bool is_finite(const basic_quaternion<Real>& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// |Im q| below this has no usable axis.
inline constexpr double axis_epsilon = 1e-12;

/// A unit pure quaternion I (I^2 = -1). Selects the slice C_I = R + R I.
class ImaginaryUnit {
public:
    /// Requires a pure quaternion of unit length (both to 1e-12).
    explicit ImaginaryUnit(const Quaternion& axis) : axis_(axis) {
        if (std::fabs(axis.w) > 1e-12 || std::fabs(modulus(axis) - 1.0) > 1e-12) {
            throw parameter_error("ImaginaryUnit: not a unit pure quaternion");
        }
    }

    /// Normalizes the vector part of q. Throws near_real_axis when it vanishes.
    static ImaginaryUnit normalized(const Quaternion& q) {
        const double v = vector_modulus(q);
        if (!(v > axis_epsilon)) {
            throw near_real_axis("axis: |Im q| <= 1e-12, no canonical slice");
        }
        return ImaginaryUnit(Quaternion{0.0, q.x / v, q.y / v, q.z / v}, unchecked{});
    }

    static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i(), unchecked{}); }
    static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j(), unchecked{}); }
    static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k(), unchecked{}); }

    const Quaternion& axis() const noexcept { return axis_; }
    operator const Quaternion&() const noexcept { return axis_; }  // NOLINT

    ImaginaryUnit operator-() const { return ImaginaryUnit(-axis_, unchecked{}); }

    /// a + b I, the image of the complex number a + b i in C_I.
    Quaternion embed(std::complex<double> c) const {
        return Quaternion{c.real(), c.imag() * axis_.x, c.imag() * axis_.y, c.imag() * axis_.z};
    }

    /// Coordinates (a, b) of the orthogonal projection of q onto C_I.
    std::complex<double> project(const Quaternion& q) const { return {q.w, dot(q, axis_)}; }

private:
    struct unchecked {};
    ImaginaryUnit(const Quaternion& axis, unchecked) : axis_(axis) {}

    Quaternion axis_;
};

/// Im(q)/|Im(q)|.
inline ImaginaryUnit axis(const Quaternion& q) { return ImaginaryUnit::normalized(q); }

/// q = x + y I with y >= 0.
struct SlicePoint {
    double x{};
    double y{};
    ImaginaryUnit unit = ImaginaryUnit::i();
};

inline SlicePoint to_slice(const Quaternion& q) { return {q.w, vector_modulus(q), axis(q)}; }

inline Quaternion from_slice(const SlicePoint& s) { return s.unit.embed({s.x, s.y}); }

/// Quaternion exponential; on each slice C_I it is the complex exponential.
inline Quaternion qexp(const Quaternion& q) {
    const double scale = std::exp(q.w);
    const double v = vector_modulus(q);
    if (v == 0.0) {
        return Quaternion{scale};
    }
    const double s = scale * std::sin(v) / v;
    return {scale * std::cos(v), s * q.x, s * q.y, s * q.z};
}

/// q^n. Direct products for n <= 4, binary exponentiation above.
template <std::floating_point Real>
constexpr basic_quaternion<Real> qpow(basic_quaternion<Real> q, unsigned n) {
    basic_quaternion<Real> result{Real(1)};
    if (n <= 4) {
        for (unsigned m = 0; m < n; ++m) {
            result = result * q;
        }
        return result;
    }
    while (n != 0) {
        if (n & 1U) {
            result = result * q;
        }
        n >>= 1U;
        if (n != 0) {
            q = q * q;
        }
    }
    return result;
}

}  // namespace qsbt
