#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rotkit {

/// Base type for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector required to be unit-norm is not, or cannot be normalized.
class NonUnitAxis : public Error {
public:
    using Error::Error;
};

/// A value required to be finite is NaN or infinite.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// A 3x3 matrix failed proper-orthogonality validation.
class NonRotationInput : public Error {
public:
    using Error::Error;
};

/// A trace-derived cosine or sine lies outside [-1, 1] by more than the
/// rounding slack; the input cannot be a rotation.
class TraceOutOfRange : public Error {
public:
    using Error::Error;
};

/// The supplied axis is not a fixed axis of the given rotation.
class AxisNotInvariant : public Error {
public:
    using Error::Error;
};

/// The rotation is numerically the identity: every axis is fixed, so no
/// particular axis can be reported.
class IdentityRotation : public Error {
public:
    using Error::Error;
};

/// An element of a rotation stream failed validation.
class InvalidStreamElement : public Error {
public:
    InvalidStreamElement(std::size_t index, const std::string& what)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

namespace detail {

/// Short numeric rendering for error messages.
inline std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace detail

}  // namespace rotkit
