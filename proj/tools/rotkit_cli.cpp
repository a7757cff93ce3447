// rotkit command line front end: batch conversion between 3x3 rotation
// matrices and axis-angle pairs over JSON lines (one record per line, id
// echoed back, errors reported per record). Exit code 0 on full success,
// 1 if any record failed or a check tripped, 2 on usage or I/O problems.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotkit/extraction.hpp"
#include "rotkit/records.hpp"
#include "rotkit/trajectory.hpp"

namespace {

using namespace rotkit;

// |axis| in an input record may deviate from 1 by at most this before the
// record errors; within the window the axis is normalized exactly.
constexpr double kAxisUnitWindow = 1e-6;

// A round trip whose matrix-space residual exceeds this makes the process
// exit nonzero.
constexpr double kRoundtripGate = 1e-9;

// Bench: the extended and naive paths count as picking the same branch when
// their angles coincide on the circle to within this. The naive arccos path
// loses accuracy like eps / |sin t| near t = 0 and +-pi (about 1e-10 at the
// angles a large uniform sample actually hits), so the gate sits well above
// that conditioning noise and far below any genuine branch flip.
constexpr double kBenchAgreeTol = 1e-8;

constexpr double kPi = 3.14159265358979323846;

double rad_from_deg(double deg) { return deg * (kPi / 180.0); }
double deg_from_rad(double rad) { return rad * (180.0 / kPi); }

struct IoStreams {
    std::ifstream file_in;
    std::ofstream file_out;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;

    // Returns false (with a message on stderr) when a path cannot be opened.
    bool open(const std::string& in_path, const std::string& out_path) {
        if (!in_path.empty()) {
            file_in.open(in_path);
            if (!file_in) {
                std::cerr << "error: cannot open input file '" << in_path << "'\n";
                return false;
            }
            in = &file_in;
        }
        if (!out_path.empty()) {
            file_out.open(out_path);
            if (!file_out) {
                std::cerr << "error: cannot open output file '" << out_path << "'\n";
                return false;
            }
            out = &file_out;
        }
        return true;
    }

    // Flush and report broken output (e.g. full disk) as an I/O failure.
    bool finish() {
        out->flush();
        if (!*out) {
            std::cerr << "error: write failure on output stream\n";
            return false;
        }
        return true;
    }
};

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

struct StreamOpts {
    std::string in_path;
    std::string out_path;
    bool degrees = false;
    double tol = kDefaultMatrixTol;
    bool track = false;
    std::string prev_axis;  // "x,y,z", parsed in run_mat2aa
};

// Validates and normalizes the axis of an axis+angle record.
UnitVector3 record_axis(const Vec3& raw) {
    const double n = norm(raw);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kAxisUnitWindow) {
        throw RecordError("non-unit axis: |axis| = " + detail::num_str(n) +
                          " deviates from 1 by more than " + detail::num_str(kAxisUnitWindow));
    }
    return UnitVector3::normalized(raw);
}

void emit_error(std::ostream& out, const std::string& id, const std::exception& e) {
    JsonWriter w;
    w.field("id", id).field("error", e.what());
    out << w.str() << '\n';
}

int run_aa2mat(const StreamOpts& o) {
    IoStreams io;
    if (!io.open(o.in_path, o.out_path)) return 2;

    bool any_failed = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*io.in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        std::string id = std::to_string(line_no);
        try {
            const RecordIn rec = parse_record(line, line_no);
            id = rec.id;
            if (!rec.has_axis_angle()) {
                throw RecordError("expected an axis+angle record");
            }
            const UnitVector3 axis = record_axis(*rec.axis);
            const double angle = o.degrees ? rad_from_deg(*rec.angle) : *rec.angle;
            const RotationMatrix r = rotation_from_axis_angle(AxisAngle(axis, angle));
            JsonWriter w;
            w.field("id", id).field("matrix", std::span<const double>(r.mat().m));
            *io.out << w.str() << '\n';
        } catch (const Error& e) {
            any_failed = true;
            emit_error(*io.out, id, e);
        }
    }
    if (!io.finish()) return 2;
    return any_failed ? 1 : 0;
}

int run_mat2aa(const StreamOpts& o) {
    IoStreams io;
    if (!io.open(o.in_path, o.out_path)) return 2;

    const bool track = o.track || !o.prev_axis.empty();
    ContinuityState state;
    if (!o.prev_axis.empty()) {
        Vec3 seed;
        char trailing = '\0';
        const int got = std::sscanf(o.prev_axis.c_str(), "%lf,%lf,%lf%c",
                                    &seed.x, &seed.y, &seed.z, &trailing);
        if (got != 3) {
            std::cerr << "error: --prev-axis wants 'x,y,z', got '" << o.prev_axis << "'\n";
            return 2;
        }
        try {
            // Normalize whatever was typed; a hand-entered 0.707 is fine.
            state.previous_axis = UnitVector3::normalized(seed);
        } catch (const NonUnitAxis& e) {
            std::cerr << "error: --prev-axis: " << e.what() << '\n';
            return 2;
        }
    }

    bool any_failed = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*io.in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        std::string id = std::to_string(line_no);
        try {
            const RecordIn rec = parse_record(line, line_no);
            id = rec.id;
            if (!rec.has_matrix()) {
                throw RecordError("expected a matrix record");
            }
            const RotationMatrix r(*rec.matrix, o.tol);
            const ConversionReport report = matrix_to_axis_angle(r);

            AxisAngle chosen = report.result;
            bool flipped = false;
            std::optional<double> dot_prev;
            double residual_axis = report.residual_axis;
            double residual_reconstruction = report.residual_reconstruction;
            if (track) {
                auto [sample, next] = resolve_with_previous(state, r);
                state = next;
                chosen = sample.axis_angle;
                flipped = sample.flipped;
                dot_prev = sample.axis_dot_previous;
                residual_axis = norm(r.apply(chosen.axis.vec()) - chosen.axis.vec());
                residual_reconstruction =
                    max_abs_diff(r.mat(), rotation_from_axis_angle(chosen).mat());
            }

            const double axis_out[3] = {chosen.axis.x(), chosen.axis.y(), chosen.axis.z()};
            JsonWriter w;
            w.field("id", id)
                .field("axis", std::span<const double>(axis_out))
                .field("angle", o.degrees ? deg_from_rad(chosen.angle) : chosen.angle)
                .field("degeneracy", to_string(report.degeneracy))
                .field("residual_axis", residual_axis)
                .field("residual_reconstruction", residual_reconstruction);
            if (track) {
                w.field("flipped", flipped);
                if (dot_prev) w.field("axis_dot_previous", *dot_prev);
            }
            *io.out << w.str() << '\n';
        } catch (const Error& e) {
            any_failed = true;
            emit_error(*io.out, id, e);
        }
    }
    if (!io.finish()) return 2;
    return any_failed ? 1 : 0;
}

int run_roundtrip(const StreamOpts& o) {
    IoStreams io;
    if (!io.open(o.in_path, o.out_path)) return 2;

    std::size_t count = 0;
    std::size_t failures = 0;
    double max_residual = 0.0;
    bool gate_exceeded = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*io.in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        ++count;
        std::string id = std::to_string(line_no);
        try {
            const RecordIn rec = parse_record(line, line_no);
            id = rec.id;
            RotationMatrix r = rec.has_matrix()
                                   ? RotationMatrix(*rec.matrix, o.tol)
                                   : rotation_from_axis_angle(AxisAngle(
                                         record_axis(*rec.axis),
                                         o.degrees ? rad_from_deg(*rec.angle) : *rec.angle));
            // Convert to axis-angle, rebuild the matrix, and measure the gap
            // where it is branch-independent: in matrix space.
            const ConversionReport report = matrix_to_axis_angle(r);
            const double residual = report.residual_reconstruction;
            max_residual = std::max(max_residual, residual);
            if (residual > kRoundtripGate) gate_exceeded = true;
            JsonWriter w;
            w.field("id", id).field("residual", residual);
            *io.out << w.str() << '\n';
        } catch (const Error& e) {
            ++failures;
            emit_error(*io.out, id, e);
        }
    }

    JsonWriter summary;
    summary.field_count("count", count)
        .field("max_residual", max_residual)
        .field_count("failures", failures);
    *io.out << summary.str() << '\n';
    if (!io.finish()) return 2;
    return (failures > 0 || gate_exceeded) ? 1 : 0;
}

struct BenchOpts {
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    std::string out_path;
};

struct BenchSample {
    UnitVector3 axis;  // preferred axis handed to every recovery path
    SkewMatrix n;      // prebuilt skew(axis)
    RotationMatrix r;
    double theta;      // true angle about the preferred axis
};

// Compares three ways of recovering/producing the angle for a known axis:
//   extended  cos from the trace, signed sin from -tr(N R)/2, atan2
//   naive     acos of the trace cosine, sign fixed by reconstructing both
//             candidates and keeping the closer one
//   synthesis forward build of R (the common cost both recoveries race)
int run_bench(const BenchOpts& o) {
    IoStreams io;
    if (!io.open("", o.out_path)) return 2;

    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> angle_dist(-kPi, kPi);

    std::vector<BenchSample> samples;
    samples.reserve(o.n);
    for (std::uint64_t i = 0; i < o.n; ++i) {
        Vec3 v;
        double n2;
        do {
            v = Vec3{coord(rng), coord(rng), coord(rng)};
            n2 = squared_norm(v);
        } while (n2 > 1.0 || n2 < 1e-4);
        const UnitVector3 axis = UnitVector3::normalized(v);
        const double theta = angle_dist(rng);
        const RotationMatrix r = rotation_from_axis_angle(AxisAngle(axis, theta));
        // Half the time hand the recovery the negated axis, so the sign
        // branch actually has work to do.
        const bool negate = (rng() & 1u) != 0;
        const UnitVector3 preferred = negate ? -axis : axis;
        samples.push_back(BenchSample{preferred, skew(preferred), r,
                                      negate ? -theta : theta});
    }

    using clock = std::chrono::steady_clock;
    std::vector<double> theta_extended(samples.size());
    std::vector<double> theta_naive(samples.size());

    const auto t0 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const BenchSample& b = samples[i];
        const double c = cos_theta_from_trace(b.r);
        const double s = sin_theta_from_skew_product(b.n, b.r);
        theta_extended[i] = std::atan2(s, c);
    }
    const auto t1 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const BenchSample& b = samples[i];
        const double c = cos_theta_from_trace(b.r);
        const double raw = std::acos(c);
        const Mat3 plus = rotation_from_axis_angle(AxisAngle(b.axis, raw)).mat();
        const Mat3 minus = rotation_from_axis_angle(AxisAngle(b.axis, -raw)).mat();
        theta_naive[i] =
            max_abs_diff(plus, b.r.mat()) <= max_abs_diff(minus, b.r.mat()) ? raw : -raw;
    }
    const auto t2 = clock::now();
    double sink = 0.0;
    for (const BenchSample& b : samples) {
        sink += rotation_from_axis_angle(AxisAngle(b.axis, b.theta)).trace();
    }
    const auto t3 = clock::now();
    if (!std::isfinite(sink)) {
        std::cerr << "error: benchmark produced non-finite values\n";
        return 2;
    }

    std::size_t agree = 0;
    double max_gap = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double gap = std::abs(wrap_angle(theta_extended[i] - theta_naive[i]));
        max_gap = std::max(max_gap, gap);
        if (gap <= kBenchAgreeTol) ++agree;
    }
    const std::size_t disagree = samples.size() - agree;

    const auto ns_per_op = [&](clock::time_point a, clock::time_point b) {
        const std::chrono::duration<double, std::nano> d = b - a;
        return d.count() / static_cast<double>(samples.size());
    };

    JsonWriter w;
    w.field_count("n", samples.size())
        .field_count("seed", static_cast<std::size_t>(o.seed))
        .field("extended_ns_per_op", ns_per_op(t0, t1))
        .field("naive_ns_per_op", ns_per_op(t1, t2))
        .field("synthesis_ns_per_op", ns_per_op(t2, t3))
        .field_count("samples_agree", agree)
        .field_count("samples_disagree", disagree)
        .field("max_angle_gap", max_gap);
    *io.out << w.str() << '\n';
    if (!io.finish()) return 2;
    return disagree == 0 ? 0 : 1;
}

void add_io_options(CLI::App* cmd, StreamOpts& o) {
    cmd->add_option("--in", o.in_path, "read records from this file instead of stdin");
    cmd->add_option("--out", o.out_path, "write records to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"Convert between 3x3 rotation matrices and axis-angle pairs (JSON lines)"};
    app.require_subcommand(1);

    StreamOpts aa_opts;
    CLI::App* aa2mat = app.add_subcommand("aa2mat", "axis+angle records -> matrix records");
    add_io_options(aa2mat, aa_opts);
    aa2mat->add_flag("--degrees", aa_opts.degrees, "angles in the records are degrees");

    StreamOpts m_opts;
    CLI::App* mat2aa = app.add_subcommand("mat2aa", "matrix records -> axis+angle records");
    add_io_options(mat2aa, m_opts);
    mat2aa->add_flag("--degrees", m_opts.degrees, "emit angles in degrees");
    mat2aa->add_option("--tol", m_opts.tol, "orthogonality/determinant tolerance for inputs")
        ->check(CLI::PositiveNumber);
    mat2aa->add_flag("--track", m_opts.track,
                     "resolve axis signs for continuity across the stream");
    mat2aa->add_option("--prev-axis", m_opts.prev_axis,
                       "seed axis 'x,y,z' for --track (implies --track)");

    StreamOpts rt_opts;
    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "convert each record to the other form and back; report residuals");
    add_io_options(roundtrip, rt_opts);
    roundtrip->add_flag("--degrees", rt_opts.degrees, "angles in the records are degrees");
    roundtrip->add_option("--tol", rt_opts.tol,
                          "orthogonality/determinant tolerance for matrix records")
        ->check(CLI::PositiveNumber);

    BenchOpts bench_opts;
    CLI::App* bench = app.add_subcommand(
        "bench", "time angle recovery against the classic arccos-and-check approach");
    bench->add_option("--n", bench_opts.n, "number of random rotations")
        ->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()));
    bench->add_option("--seed", bench_opts.seed, "RNG seed");
    bench->add_option("--out", bench_opts.out_path, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (aa2mat->parsed()) return run_aa2mat(aa_opts);
        if (mat2aa->parsed()) return run_mat2aa(m_opts);
        if (roundtrip->parsed()) return run_roundtrip(rt_opts);
        if (bench->parsed()) return run_bench(bench_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}
