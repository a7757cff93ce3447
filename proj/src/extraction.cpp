#include "rotkit/extraction.hpp"

#include <cmath>

namespace rotkit {

namespace {

// |component| at or below this counts as zero for the near-pi sign rule.
constexpr double kSignZero = 1e-12;

// Half the antisymmetric part of R, read off as a vector: equals sin(t) n.
Vec3 vee_antisymmetric_half(const Mat3& r) {
    return {0.5 * (r(2, 1) - r(1, 2)),
            0.5 * (r(0, 2) - r(2, 0)),
            0.5 * (r(1, 0) - r(0, 1))};
}

// Axis from the symmetric part, for angles at or near pi. P = (sym(R) + I)/2
// equals n n^T + q (I - n n^T) with q = cos^2(t/2); symmetrizing first
// projects out the sin(t) N term instead of assuming it negligible. Squaring
// P shrinks the off-axis component from q to q^2 (below 1e-16 everywhere in
// the near-pi regime), so the dominant column of P^2 is the axis direction
// to machine precision.
UnitVector3 near_pi_axis(const Mat3& r) {
    Mat3 p;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            p(i, j) = 0.25 * (r(i, j) + r(j, i)) + (i == j ? 0.5 : 0.0);
        }
    }
    const Mat3 q = p * p;
    int jmax = 0;
    if (q(1, 1) > q(jmax, jmax)) jmax = 1;
    if (q(2, 2) > q(jmax, jmax)) jmax = 2;
    UnitVector3 axis = UnitVector3::normalized({q(0, jmax), q(1, jmax), q(2, jmax)});

    // Both signs solve R n = n at t = pi; make the first non-tiny component
    // positive so the choice is reproducible.
    const double comps[3] = {axis.x(), axis.y(), axis.z()};
    for (double comp : comps) {
        if (std::abs(comp) > kSignZero) {
            if (comp < 0.0) axis = -axis;
            break;
        }
    }
    return axis;
}

}  // namespace

const char* to_string(DegeneracyClass c) {
    switch (c) {
        case DegeneracyClass::Generic: return "generic";
        case DegeneracyClass::NearZeroAngle: return "near_zero";
        case DegeneracyClass::NearPiAngle: return "near_pi";
    }
    return "unknown";
}

UnitVector3 conventional_axis() { return UnitVector3(0.0, 0.0, 1.0); }

std::optional<AxisExtraction> try_extract_axis(const RotationMatrix& r,
                                               const ExtractionThresholds& th) {
    const double c = cos_theta_from_trace(r);
    if (c >= 1.0 - th.identity_cos) {
        return std::nullopt;
    }
    const Vec3 w = vee_antisymmetric_half(r.mat());
    const double s = norm(w);  // |sin t|
    if (s >= th.generic_sin) {
        return AxisExtraction{UnitVector3::normalized(w), DegeneracyClass::Generic};
    }
    if (c <= -1.0 + th.near_pi_cos) {
        return AxisExtraction{near_pi_axis(r.mat()), DegeneracyClass::NearPiAngle};
    }
    // Small but non-identity angle: the antisymmetric part is feeble, yet its
    // direction is still well conditioned (all its entries scale with t).
    return AxisExtraction{UnitVector3::normalized(w), DegeneracyClass::NearZeroAngle};
}

AxisExtraction extract_axis(const RotationMatrix& r, const ExtractionThresholds& th) {
    auto ex = try_extract_axis(r, th);
    if (!ex) {
        throw IdentityRotation("rotation is numerically the identity; every axis is fixed");
    }
    return *ex;
}

ConversionReport matrix_to_axis_angle(const RotationMatrix& r,
                                      const ExtractionThresholds& th) {
    const auto ex = try_extract_axis(r, th);

    const UnitVector3 axis = ex ? ex->axis : conventional_axis();
    const double angle = ex ? angle_for_axis(axis, r) : 0.0;
    const DegeneracyClass cls = ex ? ex->degeneracy : DegeneracyClass::NearZeroAngle;

    std::string note;
    if (!ex) {
        note = "identity rotation: conventional axis (0,0,1), angle 0";
    } else {
        switch (cls) {
            case DegeneracyClass::Generic:
                note = "axis from antisymmetric part, positive-sine branch";
                break;
            case DegeneracyClass::NearZeroAngle:
                note = "small angle: axis from antisymmetric part, positive-sine branch";
                break;
            case DegeneracyClass::NearPiAngle:
                note = "near pi: axis from symmetric part, first nonzero component positive";
                break;
        }
    }

    const AxisAngle result(axis, angle);
    const double residual_axis = norm(r.apply(axis.vec()) - axis.vec());
    const double residual_reconstruction =
        max_abs_diff(r.mat(), rotation_from_axis_angle(result).mat());
    return ConversionReport{result, cls, residual_axis, residual_reconstruction,
                            std::move(note)};
}

}  // namespace rotkit
