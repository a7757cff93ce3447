#include "rotkit/records.hpp"

#include <cstdio>

#include <json.hpp>

namespace rotkit {

namespace {

using nlohmann::json;

double number_field(const json& j, const char* what) {
    if (!j.is_number()) {
        throw RecordError(std::string(what) + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw RecordError(std::string(what) + " is not finite");
    }
    return v;
}

std::string quoted(std::string_view s) {
    // nlohmann handles the escaping; we only borrow its string dumper.
    return json(s).dump();
}

}  // namespace

RecordIn parse_record(std::string_view line, std::size_t line_number) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw RecordError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw RecordError("record is not a JSON object");
    }

    RecordIn rec;
    rec.id = std::to_string(line_number);
    if (auto it = j.find("id"); it != j.end()) {
        if (it->is_string()) {
            rec.id = it->get<std::string>();
        } else if (it->is_number_integer()) {
            rec.id = std::to_string(it->get<long long>());
        } else {
            throw RecordError("id must be a string or an integer");
        }
    }

    if (auto it = j.find("matrix"); it != j.end()) {
        if (!it->is_array() || it->size() != 9) {
            throw RecordError("matrix must be an array of 9 numbers (row-major)");
        }
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) {
            m.m[i] = number_field((*it)[i], "matrix entry");
        }
        rec.matrix = m;
    }

    if (auto it = j.find("axis"); it != j.end()) {
        if (!it->is_array() || it->size() != 3) {
            throw RecordError("axis must be an array of 3 numbers");
        }
        rec.axis = Vec3{number_field((*it)[0], "axis entry"),
                        number_field((*it)[1], "axis entry"),
                        number_field((*it)[2], "axis entry")};
    }

    if (auto it = j.find("angle"); it != j.end()) {
        rec.angle = number_field(*it, "angle");
    }

    if (rec.axis.has_value() != rec.angle.has_value()) {
        throw RecordError("axis and angle must appear together");
    }
    if (rec.has_matrix() && rec.has_axis_angle()) {
        throw RecordError("record carries both a matrix and an axis+angle; want exactly one");
    }
    if (!rec.has_matrix() && !rec.has_axis_angle()) {
        throw RecordError("record needs either a matrix or an axis+angle");
    }
    return rec;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::add_key(std::string_view key) {
    if (!body_.empty()) body_ += ',';
    body_ += quoted(key);
    body_ += ':';
}

JsonWriter& JsonWriter::field(std::string_view key, std::string_view value) {
    add_key(key);
    body_ += quoted(value);
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, const char* value) {
    return field(key, std::string_view(value));
}

JsonWriter& JsonWriter::field(std::string_view key, double value) {
    add_key(key);
    body_ += format_double(value);
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, bool value) {
    add_key(key);
    body_ += value ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, std::span<const double> values) {
    add_key(key);
    body_ += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) body_ += ',';
        body_ += format_double(values[i]);
    }
    body_ += ']';
    return *this;
}

JsonWriter& JsonWriter::field_count(std::string_view key, std::size_t value) {
    add_key(key);
    body_ += std::to_string(value);
    return *this;
}

}  // namespace rotkit
