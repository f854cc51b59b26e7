#pragma once

#include <array>
#include <cmath>

// Just enough 3-vector / symmetric 3x3 algebra for axis projections and
// spectral tensors. Not a linear algebra library.

namespace proxheat {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline constexpr Vec3 axis_z{0.0, 0.0, 1.0};

struct Mat3 {
    // row-major
    std::array<double, 9> m{};

    static Mat3 diagonal(double a, double b, double c) {
        Mat3 r;
        r.m[0] = a;
        r.m[4] = b;
        r.m[8] = c;
        return r;
    }

    static Mat3 identity() { return diagonal(1.0, 1.0, 1.0); }

    double operator()(int i, int j) const { return m[3 * i + j]; }
    double& operator()(int i, int j) { return m[3 * i + j]; }

    Mat3 scaled(double s) const {
        Mat3 r = *this;
        for (double& v : r.m) v *= s;
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r = *this;
        for (int i = 0; i < 9; ++i) r.m[i] += o.m[i];
        return r;
    }

    /// nᵀ M n
    double quadratic_form(const Vec3& n) const {
        const std::array<double, 3> v{n.x, n.y, n.z};
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += v[i] * (*this)(i, j) * v[j];
        return s;
    }

    bool is_symmetric(double tol = 0.0) const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }
};

} // namespace proxheat
