#pragma once

#include <stdexcept>
#include <string>

namespace symtutte {

/// Base class for every error raised by the library. Carries the name of the
/// module that detected the problem so front ends can report it.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Invalid caller input (degenerate hyperplane, dimension mismatch, bad prime, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold did not: non-exact division, non-integral
/// interpolation, negative region count. Always indicates bad input data or a bug.
class IntegrityAlarm : public Error {
public:
    using Error::Error;
};

/// The prime does not reduce the arrangement correctly.
class CertificationError : public Error {
public:
    using Error::Error;
};

/// The input is outside the supported scope of an engine (size cap, unsupported
/// representative equation shape).
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace symtutte
