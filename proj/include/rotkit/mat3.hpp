#pragma once

#include <array>
#include <cmath>

#include "rotkit/vec3.hpp"

namespace rotkit {

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity() {
        return Mat3{{1.0, 0.0, 0.0,
                     0.0, 1.0, 0.0,
                     0.0, 0.0, 1.0}};
    }

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    double trace() const { return m[0] + m[4] + m[8]; }

    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6],
                     m[1], m[4], m[7],
                     m[2], m[5], m[8]}};
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7])
             - m[1] * (m[3] * m[8] - m[5] * m[6])
             + m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
    return r;
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        }
    }
    return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
            a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
            a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}

inline double max_abs(const Mat3& a) {
    double r = 0.0;
    for (double e : a.m) r = std::max(r, std::abs(e));
    return r;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double r = 0.0;
    for (int i = 0; i < 9; ++i) r = std::max(r, std::abs(a.m[i] - b.m[i]));
    return r;
}

inline bool is_finite(const Mat3& a) {
    for (double e : a.m) {
        if (!std::isfinite(e)) return false;
    }
    return true;
}

}  // namespace rotkit
