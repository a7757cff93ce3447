#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace rotkit;
using namespace testsupport;
using Catch::Matchers::WithinAbs;

namespace {

const double kPi = std::numbers::pi;

// Distance between two unit vectors up to sign, as max component error
// against whichever of +- want is closer.
double axis_error_up_to_sign(const UnitVector3& got, const Vec3& want_unnormalized) {
    const UnitVector3 want = UnitVector3::normalized(want_unnormalized);
    const double plus = max_abs(got.vec() - want.vec());
    const double minus = max_abs(got.vec() + want.vec());
    return std::min(plus, minus);
}

}  // namespace

TEST_CASE("axis extraction on the worked example") {
    // Build the matrix two ways: synthesized, and from the hand-worked
    // closed-form entries through the validating constructor.
    const RotationMatrix synth =
        rotation_from_axis_angle(AxisAngle(golden_axis(), golden_angle()));
    const RotationMatrix closed(golden_matrix());

    for (const RotationMatrix& r : {synth, closed}) {
        const AxisExtraction ex = extract_axis(r);
        CHECK(ex.degeneracy == DegeneracyClass::Generic);
        // sin(pi/6) > 0, so the canonical branch is the original axis.
        CHECK_THAT(max_abs(ex.axis.vec() - golden_axis().vec()), WithinAbs(0.0, 1e-14));
        // Independent route: nullspace of (R - I), compared up to sign.
        CHECK_THAT(axis_error_up_to_sign(ex.axis, fixed_axis_nullspace(r.mat())),
                   WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("identity has no extractable axis") {
    const RotationMatrix id(Mat3::identity());
    CHECK_FALSE(try_extract_axis(id).has_value());
    CHECK_THROWS_AS(extract_axis(id), IdentityRotation);

    // Rotations too small to distinguish from the identity behave the same.
    for (const double t : {1e-8, 1e-7, 5e-7}) {
        const RotationMatrix r =
            rotation_from_axis_angle(AxisAngle(UnitVector3(1.0, 0.0, 0.0), t));
        CHECK_FALSE(try_extract_axis(r).has_value());
    }
}

TEST_CASE("half turns about coordinate axes") {
    const Mat3 about_z{{-1.0, 0.0, 0.0,
                        0.0, -1.0, 0.0,
                        0.0, 0.0, 1.0}};
    const AxisExtraction ez = extract_axis(RotationMatrix(about_z));
    CHECK(ez.degeneracy == DegeneracyClass::NearPiAngle);
    CHECK_THAT(max_abs(ez.axis.vec() - Vec3{0.0, 0.0, 1.0}), WithinAbs(0.0, 1e-15));

    const Mat3 about_x{{1.0, 0.0, 0.0,
                        0.0, -1.0, 0.0,
                        0.0, 0.0, -1.0}};
    const AxisExtraction ex = extract_axis(RotationMatrix(about_x));
    CHECK(ex.degeneracy == DegeneracyClass::NearPiAngle);
    CHECK_THAT(max_abs(ex.axis.vec() - Vec3{1.0, 0.0, 0.0}), WithinAbs(0.0, 1e-15));
}

TEST_CASE("near-pi sign rule: first non-tiny component positive") {
    // Axis with a negative leading component; at pi both signs are valid, so
    // the extractor must flip it.
    const UnitVector3 n = UnitVector3::normalized({-0.3, 0.6, -0.8});
    const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, kPi));
    const AxisExtraction ex = extract_axis(r);
    CHECK(ex.degeneracy == DegeneracyClass::NearPiAngle);
    CHECK(ex.axis.x() > 0.0);
    CHECK_THAT(max_abs(ex.axis.vec() - (-n).vec()), WithinAbs(0.0, 1e-12));

    // Leading component zero: the rule moves on to the next one.
    const UnitVector3 m = UnitVector3::normalized({0.0, -0.6, 0.8});
    const RotationMatrix r2 = rotation_from_axis_angle(AxisAngle(m, kPi));
    const AxisExtraction ex2 = extract_axis(r2);
    CHECK(std::abs(ex2.axis.x()) <= 1e-12);
    CHECK(ex2.axis.y() > 0.0);
}

TEST_CASE("near-pi extraction stays stable as the angle approaches pi") {
    auto rng = make_rng(301);
    for (const double eps : {1.5e-4, 1e-4, 1e-6, 1e-8, 0.0}) {
        for (int i = 0; i < 50; ++i) {
            const UnitVector3 n = random_axis(rng);
            const double t = kPi - eps;
            const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, t));
            const ConversionReport rep = matrix_to_axis_angle(r);

            CHECK_THAT(axis_error_up_to_sign(rep.result.axis, n.vec()),
                       WithinAbs(0.0, 1e-9));
            CHECK_THAT(std::abs(rep.result.angle), WithinAbs(t, 1e-9));
            CHECK(rep.residual_axis <= 1e-9);
            CHECK(rep.residual_reconstruction <= 1e-9);
        }
    }
}

TEST_CASE("regime boundaries match the thresholds") {
    auto rng = make_rng(302);
    // Angles straddling the |sin| = 1e-4 switch near pi, and the identity
    // cutoff near zero.
    const double cases[] = {kPi, kPi - 1e-5, kPi - 9e-5, kPi - 2e-4, kPi - 1e-2,
                            2.0,  1.0,        0.1,        1e-3,       2e-4,
                            5e-5, 1e-5,       2e-6};
    for (const double t : cases) {
        const UnitVector3 n = random_axis(rng);
        const auto ex = try_extract_axis(rotation_from_axis_angle(AxisAngle(n, t)));
        REQUIRE(ex.has_value());
        switch (ex->degeneracy) {
            case DegeneracyClass::Generic:
                CHECK(std::abs(std::sin(t)) >= 1e-4 * (1.0 - 1e-9));
                break;
            case DegeneracyClass::NearPiAngle:
                CHECK(std::cos(t) <= -1.0 + 1e-8 * (1.0 + 1e-9));
                break;
            case DegeneracyClass::NearZeroAngle:
                CHECK(std::abs(std::sin(t)) <= 1e-4 * (1.0 + 1e-9));
                CHECK(std::cos(t) < 1.0 - 0.9e-12);
                break;
        }
    }
}

TEST_CASE("small angles below the generic threshold still extract cleanly") {
    auto rng = make_rng(303);
    for (const double t : {2e-6, 1e-5, 5e-5, 9.9e-5}) {
        for (int i = 0; i < 25; ++i) {
            const UnitVector3 n = random_axis(rng);
            const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, t));
            const auto ex = try_extract_axis(r);
            REQUIRE(ex.has_value());
            CHECK(ex->degeneracy == DegeneracyClass::NearZeroAngle);
            // sin t > 0, so the canonical branch is +n.
            CHECK_THAT(max_abs(ex->axis.vec() - n.vec()), WithinAbs(0.0, 1e-9));

            const ConversionReport rep = matrix_to_axis_angle(r);
            CHECK_THAT(rep.result.angle, WithinAbs(t, 1e-12));
            CHECK(rep.residual_reconstruction <= 1e-9);
        }
    }
}

TEST_CASE("generic branch pins sin > 0") {
    // A negative angle synthesizes the same matrix as the negated axis with
    // the positive angle; the extractor must return the latter.
    const UnitVector3 n = UnitVector3::normalized({0.2, -0.5, 0.7});
    const double t = -0.3;
    const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, t));
    const ConversionReport rep = matrix_to_axis_angle(r);
    CHECK(rep.degeneracy == DegeneracyClass::Generic);
    CHECK_THAT(max_abs(rep.result.axis.vec() - (-n).vec()), WithinAbs(0.0, 1e-12));
    CHECK_THAT(rep.result.angle, WithinAbs(0.3, 1e-12));
}

TEST_CASE("matrix_to_axis_angle round trip across the angle range") {
    auto rng = make_rng(304);
    for (int i = 0; i < 2000; ++i) {
        const UnitVector3 n = random_axis(rng);
        const double t = uniform(rng, 1e-6, kPi - 1e-6);
        const double signed_t = (i % 2 == 0) ? t : -t;
        const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, signed_t));
        const ConversionReport rep = matrix_to_axis_angle(r);

        // Either branch is acceptable; compare against the closer one.
        const double err_plus = std::max(max_abs(rep.result.axis.vec() - n.vec()),
                                         std::abs(rep.result.angle - signed_t));
        const double err_minus = std::max(max_abs(rep.result.axis.vec() + n.vec()),
                                          std::abs(rep.result.angle + signed_t));
        CHECK(std::min(err_plus, err_minus) <= 1e-9);
        CHECK(rep.residual_axis <= 1e-9);
        CHECK(rep.residual_reconstruction <= 1e-9);
        CHECK_FALSE(rep.branch_note.empty());
    }
}

TEST_CASE("identity convention in matrix_to_axis_angle") {
    const ConversionReport rep = matrix_to_axis_angle(RotationMatrix(Mat3::identity()));
    CHECK(rep.result.axis.x() == 0.0);
    CHECK(rep.result.axis.y() == 0.0);
    CHECK(rep.result.axis.z() == 1.0);
    CHECK(rep.result.angle == 0.0);
    CHECK(rep.degeneracy == DegeneracyClass::NearZeroAngle);
    CHECK(rep.residual_axis == 0.0);
    CHECK(rep.residual_reconstruction == 0.0);
    CHECK(rep.branch_note.find("conventional") != std::string::npos);
}

TEST_CASE("custom thresholds shift the regime boundaries") {
    ExtractionThresholds th;
    th.generic_sin = 1e-2;
    const RotationMatrix r =
        rotation_from_axis_angle(AxisAngle(UnitVector3(0.0, 1.0, 0.0), 5e-3));
    const auto ex = try_extract_axis(r, th);
    REQUIRE(ex.has_value());
    CHECK(ex->degeneracy == DegeneracyClass::NearZeroAngle);
    // Same rotation under the defaults is generic.
    CHECK(extract_axis(r).degeneracy == DegeneracyClass::Generic);

    ExtractionThresholds wide_id;
    wide_id.identity_cos = 1e-6;
    CHECK_FALSE(try_extract_axis(rotation_from_axis_angle(
                                     AxisAngle(UnitVector3(1.0, 0.0, 0.0), 1e-4)),
                                 wide_id)
                    .has_value());
}

TEST_CASE("extracted axis matches the nullspace oracle on random rotations") {
    auto rng = make_rng(305);
    for (int i = 0; i < 2000; ++i) {
        const UnitVector3 n = random_axis(rng);
        const double t = uniform(rng, 1e-3, kPi - 1e-3);
        const RotationMatrix r = rotation_from_axis_angle(AxisAngle(n, t));
        const AxisExtraction ex = extract_axis(r);
        CHECK_THAT(axis_error_up_to_sign(ex.axis, fixed_axis_nullspace(r.mat())),
                   WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("reconstruction residual stays under 1e-9 over random rotations") {
    auto rng = make_rng(306);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const RotationMatrix r =
            rotation_from_axis_angle(AxisAngle(random_axis(rng), random_angle(rng)));
        const ConversionReport rep = matrix_to_axis_angle(r);
        worst = std::max(worst, rep.residual_reconstruction);
    }
    CHECK(worst <= 1e-9);
}
