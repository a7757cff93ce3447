#pragma once

// JSON-lines wire format for the CLI: one record per line. Input records
// carry either "matrix" (9 numbers, row-major) or "axis" + "angle", plus an
// optional "id" echoed back. Output numbers are printed with 17 significant
// digits so a double survives the text round trip bit-exactly.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rotkit/mat3.hpp"

namespace rotkit {

/// A single malformed or invalid input record. Reported per record; the
/// stream keeps going.
class RecordError : public Error {
public:
    using Error::Error;
};

struct RecordIn {
    std::string id;              // "id" field, or the 1-based line number
    std::optional<Mat3> matrix;  // row-major, as given
    std::optional<Vec3> axis;    // as given, not yet normalized
    std::optional<double> angle;

    bool has_matrix() const { return matrix.has_value(); }
    bool has_axis_angle() const { return axis.has_value() && angle.has_value(); }
};

/// Parses one line. Exactly one representation (matrix, or axis + angle)
/// must be present; all numbers must be finite. Throws RecordError.
RecordIn parse_record(std::string_view line, std::size_t line_number);

/// 17-significant-digit rendering; round-trips any finite double exactly.
std::string format_double(double v);

/// Minimal JSON object writer for output lines. Keys appear in insertion
/// order; doubles go through format_double.
class JsonWriter {
public:
    JsonWriter& field(std::string_view key, std::string_view value);
    JsonWriter& field(std::string_view key, const char* value);
    JsonWriter& field(std::string_view key, double value);
    JsonWriter& field(std::string_view key, bool value);
    JsonWriter& field(std::string_view key, std::span<const double> values);
    JsonWriter& field_count(std::string_view key, std::size_t value);

    std::string str() const { return "{" + body_ + "}"; }

private:
    void add_key(std::string_view key);

    std::string body_;
};

}  // namespace rotkit
