#pragma once

#include <algorithm>
#include <cmath>

#include "rotkit/errors.hpp"

namespace rotkit {

/// Norm tolerance accepted by UnitVector3: |x^2 + y^2 + z^2 - 1| at construction.
inline constexpr double kUnitNormSqTol = 1e-12;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double squared_norm(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }
inline double max_abs(const Vec3& v) { return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)}); }
inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// A unit-norm 3-vector. The norm is checked once at construction; every
/// consumer may then assume it.
class UnitVector3 {
public:
    UnitVector3(double x, double y, double z) : v_{x, y, z} { validate(); }
    explicit UnitVector3(const Vec3& v) : v_(v) { validate(); }

    /// Scales an arbitrary nonzero vector to unit norm.
    static UnitVector3 normalized(const Vec3& v);

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }

    /// Exact negation; no re-validation needed.
    UnitVector3 operator-() const { return UnitVector3(-v_, Unchecked{}); }

private:
    struct Unchecked {};
    UnitVector3(const Vec3& v, Unchecked) : v_(v) {}
    void validate() const;

    Vec3 v_;
};

inline void UnitVector3::validate() const {
    if (!is_finite(v_)) {
        throw NonUnitAxis("unit vector has non-finite components");
    }
    const double dev = std::abs(squared_norm(v_) - 1.0);
    if (dev > kUnitNormSqTol) {
        throw NonUnitAxis("vector is not unit norm: |x^2+y^2+z^2 - 1| = " + detail::num_str(dev));
    }
}

inline UnitVector3 UnitVector3::normalized(const Vec3& v) {
    const double n2 = squared_norm(v);
    if (!std::isfinite(n2) || n2 <= 0.0) {
        throw NonUnitAxis("cannot normalize a zero or non-finite vector");
    }
    return UnitVector3((1.0 / std::sqrt(n2)) * v);
}

inline double dot(const UnitVector3& a, const UnitVector3& b) { return dot(a.vec(), b.vec()); }
inline double dot(const UnitVector3& a, const Vec3& b) { return dot(a.vec(), b); }
inline Vec3 cross(const UnitVector3& a, const Vec3& b) { return cross(a.vec(), b); }

}  // namespace rotkit
