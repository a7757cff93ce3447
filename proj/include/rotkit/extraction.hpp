#pragma once

// Recovering the axis from a rotation matrix. The antisymmetric part of R
// equals sin(t) N, so away from t = 0 and t = pi its off-diagonal entries
// hand over the axis directly. Near pi that part vanishes and the axis must
// come from the symmetric part instead; near zero the rotation carries no
// usable axis information at all.

#include <optional>
#include <string>

#include "rotkit/rodrigues.hpp"

namespace rotkit {

/// Regime used to extract the axis.
enum class DegeneracyClass { Generic, NearZeroAngle, NearPiAngle };

const char* to_string(DegeneracyClass c);

/// Regime thresholds. The defaults overlap safely in double precision.
struct ExtractionThresholds {
    /// |sin t| at or above which the antisymmetric part determines the axis
    /// directly (class Generic).
    double generic_sin = 1e-4;
    /// cos t within this of -1 switches to the symmetric-part path
    /// (class NearPiAngle).
    double near_pi_cos = 1e-8;
    /// cos t within this of +1 means the rotation is numerically the
    /// identity and the axis is undefined.
    double identity_cos = 1e-12;
};

struct AxisExtraction {
    UnitVector3 axis;
    DegeneracyClass degeneracy;
};

/// Solves R n = n for the rotation axis. Returns nullopt when the rotation
/// is numerically the identity (every axis is fixed).
///
/// Sign convention: in the Generic and NearZeroAngle regimes the returned
/// axis is the branch with sin t > 0; in the NearPiAngle regime the first
/// component of magnitude above 1e-12 is made positive.
std::optional<AxisExtraction> try_extract_axis(const RotationMatrix& r,
                                               const ExtractionThresholds& thresholds = {});

/// Same as try_extract_axis, but throws IdentityRotation for identity input.
AxisExtraction extract_axis(const RotationMatrix& r,
                            const ExtractionThresholds& thresholds = {});

/// The axis reported for identity rotations by convention: (0, 0, 1).
UnitVector3 conventional_axis();

/// Diagnostic record of one matrix -> axis-angle conversion.
struct ConversionReport {
    AxisAngle result;
    DegeneracyClass degeneracy;
    double residual_axis;            // |R n - n| for the returned axis
    double residual_reconstruction;  // max entry of |R - R(result)|
    std::string branch_note;         // human-readable branch decision
};

/// Full conversion: axis extraction plus sign-correct angle recovery for
/// that axis. Identity input yields axis (0, 0, 1), angle 0, class
/// NearZeroAngle rather than an error.
ConversionReport matrix_to_axis_angle(const RotationMatrix& r,
                                      const ExtractionThresholds& thresholds = {});

}  // namespace rotkit
