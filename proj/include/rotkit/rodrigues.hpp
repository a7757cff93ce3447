#pragma once

// Rotation matrix <-> axis-angle kernel: the skew cross-product operator,
// forward synthesis R = I + sin(t) N + (1 - cos(t)) N N, and trace-based
// angle recovery. The sine recovered from -tr(N R)/2 is signed for the
// chosen axis, so together with the cosine of the trace it pins the angle
// uniquely in (-pi, pi]. All matrices are row-major; all angles radians.

#include <cmath>
#include <numbers>

#include "rotkit/errors.hpp"
#include "rotkit/mat3.hpp"
#include "rotkit/vec3.hpp"

namespace rotkit {

/// Default bound for max |R^T R - I| and |det R - 1| at validation.
inline constexpr double kDefaultMatrixTol = 1e-9;

/// Trace-derived cos/sin values may overshoot [-1, 1] by at most this much
/// before the input is rejected as a non-rotation.
inline constexpr double kTraceClampSlack = 1e-9;

/// |R n - n| bound under which an axis counts as a fixed axis of R.
inline constexpr double kAxisInvariantTol = 1e-6;

/// Antisymmetric cross-product operator: skew(n).apply(v) == n x v.
/// Zero diagonal and exact antisymmetry hold by construction.
class SkewMatrix {
public:
    const Mat3& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }
    Vec3 apply(const Vec3& v) const { return m_ * v; }

private:
    friend SkewMatrix skew(const UnitVector3&);
    explicit SkewMatrix(const Mat3& m) : m_(m) {}

    Mat3 m_;
};

/// Rows: [[0, -n3, n2], [n3, 0, -n1], [-n2, n1, 0]].
inline SkewMatrix skew(const UnitVector3& axis) {
    const double n1 = axis.x();
    const double n2 = axis.y();
    const double n3 = axis.z();
    return SkewMatrix(Mat3{{0.0, -n3, n2,
                            n3, 0.0, -n1,
                            -n2, n1, 0.0}});
}

/// Proper orthogonal 3x3 matrix. Validation happens once, here; everything
/// downstream assumes a valid rotation. Throws NonRotationInput when
/// max |R^T R - I| or |det R - 1| exceeds tol, or det is not positive.
class RotationMatrix {
public:
    explicit RotationMatrix(const Mat3& m, double tol = kDefaultMatrixTol);

    /// Wraps a matrix that is proper orthogonal by construction (e.g. the
    /// output of rotation_from_axis_angle) without re-validating.
    static RotationMatrix unchecked(const Mat3& m) { return RotationMatrix(m, Unchecked{}); }

    const Mat3& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }
    double trace() const { return m_.trace(); }
    Vec3 apply(const Vec3& v) const { return m_ * v; }

private:
    struct Unchecked {};
    RotationMatrix(const Mat3& m, Unchecked) : m_(m) {}

    Mat3 m_;
};

/// Wraps an angle to the canonical range (-pi, pi].
inline double wrap_angle(double radians) {
    double a = std::remainder(radians, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a = std::numbers::pi;
    return a;
}

/// Axis-angle pair. Any finite angle is storable; canonicalized() maps the
/// angle into (-pi, pi]. (n, t) and (-n, -t) describe the same rotation.
struct AxisAngle {
    AxisAngle(const UnitVector3& axis_in, double angle_in)
        : axis(axis_in), angle(angle_in) {
        if (!std::isfinite(angle)) {
            throw NonFiniteValue("axis-angle: angle must be finite");
        }
    }

    AxisAngle canonicalized() const { return AxisAngle(axis, wrap_angle(angle)); }

    UnitVector3 axis;
    double angle;  // radians
};

/// R = I + sin(t) N + (1 - cos(t)) N N, written out entry by entry using
/// N N = n n^T - I: the diagonal carries cos(t) + (1 - cos(t)) ni^2, the
/// off-diagonals (1 - cos(t)) ni nj +/- sin(t) nk.
inline RotationMatrix rotation_from_axis_angle(const AxisAngle& aa) {
    const double s = std::sin(aa.angle);
    const double c = std::cos(aa.angle);
    const double k = 1.0 - c;
    const double n1 = aa.axis.x();
    const double n2 = aa.axis.y();
    const double n3 = aa.axis.z();
    return RotationMatrix::unchecked(
        Mat3{{c + k * n1 * n1,       k * n1 * n2 - s * n3,  k * n1 * n3 + s * n2,
              k * n2 * n1 + s * n3,  c + k * n2 * n2,       k * n2 * n3 - s * n1,
              k * n3 * n1 - s * n2,  k * n3 * n2 + s * n1,  c + k * n3 * n3}});
}

/// Applies the rotation directly to one vector (no matrix built):
/// u = (1 - cos t) n (n . v) + cos t v + sin t (n x v).
inline Vec3 rotate_vector(const AxisAngle& aa, const Vec3& v) {
    const double s = std::sin(aa.angle);
    const double c = std::cos(aa.angle);
    const double k = (1.0 - c) * dot(aa.axis, v);
    const Vec3 nxv = cross(aa.axis, v);
    return {k * aa.axis.x() + c * v.x + s * nxv.x,
            k * aa.axis.y() + c * v.y + s * nxv.y,
            k * aa.axis.z() + c * v.z + s * nxv.z};
}

/// Split of a vector relative to a rotation axis.
struct Decomposition {
    Vec3 parallel;       // n (n . v), invariant under the rotation
    Vec3 perpendicular;  // -n x (n x v), the part that actually rotates
};

inline Decomposition decompose(const UnitVector3& axis, const Vec3& v) {
    const double p = dot(axis, v);
    const Vec3 nxnxv = cross(axis.vec(), cross(axis.vec(), v));
    return {{p * axis.x(), p * axis.y(), p * axis.z()}, -nxnxv};
}

namespace detail {

inline double clamp_unit_interval(double raw, const char* source) {
    if (raw > 1.0) {
        if (raw - 1.0 > kTraceClampSlack) {
            throw TraceOutOfRange(std::string(source) + " = " + num_str(raw) +
                                  " lies outside [-1, 1] beyond rounding slack");
        }
        return 1.0;
    }
    if (raw < -1.0) {
        if (-1.0 - raw > kTraceClampSlack) {
            throw TraceOutOfRange(std::string(source) + " = " + num_str(raw) +
                                  " lies outside [-1, 1] beyond rounding slack");
        }
        return -1.0;
    }
    return raw;
}

}  // namespace detail

/// cos(t) = (tr R - 1) / 2, clamped to [-1, 1] within rounding slack.
inline double cos_theta_from_trace(const RotationMatrix& r) {
    return detail::clamp_unit_interval((r.trace() - 1.0) / 2.0, "(tr R - 1)/2");
}

/// sin(t) = -tr(N R) / 2 for N built from the chosen axis. Negating the axis
/// negates the result, which is what disambiguates (n, t) from (-n, -t).
inline double sin_theta_from_skew_product(const SkewMatrix& n, const RotationMatrix& r) {
    double t = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t += n(i, j) * r(j, i);
        }
    }
    return detail::clamp_unit_interval(-0.5 * t, "-tr(N R)/2");
}

/// Signed angle of r about the given fixed axis, in (-pi, pi].
/// Throws AxisNotInvariant if |R n - n| exceeds kAxisInvariantTol.
inline double angle_for_axis(const UnitVector3& axis, const RotationMatrix& r) {
    const double residual = norm(r.apply(axis.vec()) - axis.vec());
    if (residual > kAxisInvariantTol) {
        throw AxisNotInvariant("axis is not fixed by the rotation: |R n - n| = " +
                               detail::num_str(residual));
    }
    const double c = cos_theta_from_trace(r);
    const double s = sin_theta_from_skew_product(skew(axis), r);
    double theta = std::atan2(s, c);
    if (theta <= -std::numbers::pi) theta = std::numbers::pi;  // keep (-pi, pi]
    return theta;
}

}  // namespace rotkit
