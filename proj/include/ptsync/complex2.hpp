#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace ptsync {

using Complex = std::complex<double>;

/// |z|^2 without the square root.
inline double abs2(const Complex& z) { return std::norm(z); }

/// Complex two-component vector (amplitude pair, matrix column, ...).
struct Vec2 {
    Complex a{};
    Complex b{};
};

inline Vec2 operator+(const Vec2& x, const Vec2& y) { return {x.a + y.a, x.b + y.b}; }
inline Vec2 operator-(const Vec2& x, const Vec2& y) { return {x.a - y.a, x.b - y.b}; }
inline Vec2 operator*(const Complex& s, const Vec2& x) { return {s * x.a, s * x.b}; }
inline Vec2 operator*(double s, const Vec2& x) { return {s * x.a, s * x.b}; }

inline double norm_inf(const Vec2& x) { return std::max(std::abs(x.a), std::abs(x.b)); }
inline double norm2(const Vec2& x) { return std::sqrt(abs2(x.a) + abs2(x.b)); }

/// Hermitian inner product <x, y> (conjugate-linear in the first argument).
inline Complex dot(const Vec2& x, const Vec2& y) {
    return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

/// Dense complex 2x2 matrix, row-major.
struct Mat2 {
    Complex m00{}, m01{}, m10{}, m11{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex trace() const { return m00 + m11; }
    Complex det() const { return m00 * m11 - m01 * m10; }

    Vec2 col(int j) const { return j == 0 ? Vec2{m00, m10} : Vec2{m01, m11}; }
};

inline Vec2 operator*(const Mat2& m, const Vec2& x) {
    return {m.m00 * x.a + m.m01 * x.b, m.m10 * x.a + m.m11 * x.b};
}

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
}

inline Mat2 operator*(const Complex& s, const Mat2& m) {
    return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

inline double norm_max(const Mat2& m) {
    return std::max({std::abs(m.m00), std::abs(m.m01), std::abs(m.m10), std::abs(m.m11)});
}

/// Closed-form spectral decomposition of a 2x2 complex matrix.
struct Eigen2 {
    Complex lambda1{}, lambda2{};
    Vec2 v1{}, v2{};       // unit-norm eigenvectors of lambda1 / lambda2
    double cond = 1.0;     // condition number of the eigenvector matrix [v1 v2]
    bool near_scalar = false;  // matrix is numerically a multiple of the identity
};

/// Relative size below which the non-scalar remainder of a matrix is treated as
/// zero. A degenerate-but-diagonalizable matrix (e.g. a one-period propagator
/// that returns to the identity) must not have its eigenvectors fabricated from
/// roundoff; anything with structure above this gate is resolved normally.
inline constexpr double kScalarMatrixTol = 1e-9;

/// Eigenvalues from the trace/determinant quadratic, eigenvectors from the rows
/// of (M - lambda I). No iteration; suitable for per-point use in large sweeps.
/// cond([v1 v2]) diverges as the eigenvectors coalesce, which is the working
/// definition of a defective (non-diagonalizable) matrix in floating point.
inline Eigen2 eig2(const Mat2& m) {
    Eigen2 out;
    const Complex tr = m.trace();
    const Complex det = m.det();
    const Complex mean = 0.5 * tr;

    const double scale = std::max(norm_max(m), 1.0);
    const Mat2 rem{m.m00 - mean, m.m01, m.m10, m.m11 - mean};
    if (norm_max(rem) <= kScalarMatrixTol * scale) {
        out.lambda1 = out.lambda2 = mean;
        out.v1 = {1.0, 0.0};
        out.v2 = {0.0, 1.0};
        out.cond = 1.0;
        out.near_scalar = true;
        return out;
    }

    Complex sq = std::sqrt(tr * tr - 4.0 * det);
    // Pick the sign that avoids cancellation in tr + sq, then recover the other
    // eigenvalue through the determinant.
    if (std::real(std::conj(tr) * sq) < 0.0) sq = -sq;
    out.lambda1 = 0.5 * (tr + sq);
    out.lambda2 = std::abs(out.lambda1) > 0.0 ? det / out.lambda1 : 0.5 * (tr - sq);

    const auto eigvec = [&m](const Complex& lambda) -> Vec2 {
        const Vec2 r0{m.m01, lambda - m.m00};   // null vector of row 0 of (M - lambda I)
        const Vec2 r1{lambda - m.m11, m.m10};   // null vector of row 1
        Vec2 v = norm2(r0) >= norm2(r1) ? r0 : r1;
        const double n = norm2(v);
        if (n == 0.0) return {1.0, 0.0};
        return (1.0 / n) * v;
    };
    out.v1 = eigvec(out.lambda1);
    out.v2 = eigvec(out.lambda2);

    // Unit columns: singular values of [v1 v2] are sqrt(1 +- |<v1,v2>|).
    const double g = std::abs(dot(out.v1, out.v2));
    out.cond = g < 1.0 ? std::sqrt((1.0 + g) / (1.0 - g))
                       : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace ptsync
