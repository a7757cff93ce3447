#include "rotkit/trajectory.hpp"

namespace rotkit {

bool largest_inner_product(const UnitVector3& previous_axis,
                           const UnitVector3& canonical_axis) {
    return dot(previous_axis, canonical_axis) < 0.0;
}

std::pair<TrackSample, ContinuityState> resolve_with_previous(
    const ContinuityState& state, const RotationMatrix& r,
    const ExtractionThresholds& thresholds, BranchStrategy strategy) {
    ContinuityState next = state;
    next.sample_index = state.sample_index + 1;

    const auto ex = try_extract_axis(r, thresholds);
    if (!ex) {
        // Zero rotation: no axis information. Keep reporting the previous
        // axis (or the convention if none exists yet) with angle 0, and do
        // not let it influence later branch decisions beyond what the last
        // proper rotation already established.
        const UnitVector3 axis =
            state.previous_axis ? *state.previous_axis : conventional_axis();
        std::optional<double> dp;
        if (state.previous_axis) dp = 1.0;
        return {TrackSample{state.sample_index, AxisAngle(axis, 0.0), false, dp}, next};
    }

    const bool flip = state.previous_axis && strategy(*state.previous_axis, ex->axis);
    const UnitVector3 chosen = flip ? -ex->axis : ex->axis;
    const double angle = angle_for_axis(chosen, r);

    std::optional<double> dp;
    if (state.previous_axis) dp = dot(*state.previous_axis, chosen);
    next.previous_axis = chosen;
    return {TrackSample{state.sample_index, AxisAngle(chosen, angle), flip, dp}, next};
}

std::vector<TrackSample> resolve_stream(std::span<const RotationMatrix> rotations,
                                        const ExtractionThresholds& thresholds,
                                        BranchStrategy strategy) {
    std::vector<TrackSample> out;
    out.reserve(rotations.size());
    ContinuityState state;
    for (const RotationMatrix& r : rotations) {
        auto [sample, next] = resolve_with_previous(state, r, thresholds, strategy);
        out.push_back(std::move(sample));
        state = next;
    }
    return out;
}

std::vector<TrackSample> resolve_stream(std::span<const Mat3> raw_matrices,
                                        double matrix_tol,
                                        const ExtractionThresholds& thresholds,
                                        BranchStrategy strategy) {
    std::vector<RotationMatrix> rotations;
    rotations.reserve(raw_matrices.size());
    for (std::size_t i = 0; i < raw_matrices.size(); ++i) {
        try {
            rotations.emplace_back(raw_matrices[i], matrix_tol);
        } catch (const NonRotationInput& e) {
            throw InvalidStreamElement(i, "stream element " + std::to_string(i) + ": " +
                                              e.what());
        }
    }
    return resolve_stream(std::span<const RotationMatrix>(rotations), thresholds, strategy);
}

}  // namespace rotkit
