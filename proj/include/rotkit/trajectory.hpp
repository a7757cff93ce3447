#pragma once

// Branch selection for streams of rotations. A single matrix cannot say
// whether it means (n, t) or (-n, -t); a trajectory can: keep the axis that
// points the same way as the previous one, so axis curves stay continuous
// instead of jumping to the antipode whenever the angle changes sign.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rotkit/extraction.hpp"

namespace rotkit {

/// Threaded state of a continuity-resolved stream.
struct ContinuityState {
    std::optional<UnitVector3> previous_axis;  // empty before the first proper rotation
    std::size_t sample_index = 0;
};

/// One resolved stream element.
struct TrackSample {
    std::size_t index;
    AxisAngle axis_angle;
    bool flipped;                             // extractor's canonical branch was negated
    std::optional<double> axis_dot_previous;  // dot(previous, chosen); empty when no previous axis existed
};

/// Decides between the extractor's canonical branch (n, t) and (-n, -t)
/// given the previous axis. Returns true to flip.
using BranchStrategy = bool (*)(const UnitVector3& previous_axis,
                                const UnitVector3& canonical_axis);

/// Picks the branch whose axis has the larger inner product with the
/// previous axis. An exact tie keeps the canonical branch.
bool largest_inner_product(const UnitVector3& previous_axis,
                           const UnitVector3& canonical_axis);

/// Resolves one rotation against the running state. Identity rotations emit
/// angle 0 and leave the state's axis untouched (they carry no axis
/// information). The angle of the chosen branch is recomputed for its axis,
/// never obtained by negating the other branch's rounding.
std::pair<TrackSample, ContinuityState> resolve_with_previous(
    const ContinuityState& state, const RotationMatrix& r,
    const ExtractionThresholds& thresholds = {},
    BranchStrategy strategy = largest_inner_product);

/// Sequential fold of resolve_with_previous over a whole stream.
std::vector<TrackSample> resolve_stream(
    std::span<const RotationMatrix> rotations,
    const ExtractionThresholds& thresholds = {},
    BranchStrategy strategy = largest_inner_product);

/// Same, but validates raw matrices first; throws InvalidStreamElement
/// carrying the index of the first element that fails.
std::vector<TrackSample> resolve_stream(
    std::span<const Mat3> raw_matrices, double matrix_tol = kDefaultMatrixTol,
    const ExtractionThresholds& thresholds = {},
    BranchStrategy strategy = largest_inner_product);

}  // namespace rotkit
