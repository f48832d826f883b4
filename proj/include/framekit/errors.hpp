#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

// Base class for everything the library throws on purpose.
class FramekitError : public std::runtime_error {
public:
    explicit FramekitError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite entries, malformed parameters, unsupported sizes.
class InvalidInput : public FramekitError {
public:
    explicit InvalidInput(const std::string& what) : FramekitError(what) {}
};

// Family-specific construction failures (zero column, empty family).
class InvalidFamily : public FramekitError {
public:
    explicit InvalidFamily(const std::string& what) : FramekitError(what) {}
};

// Vector/matrix size disagreement between operands.
class DimMismatch : public FramekitError {
public:
    explicit DimMismatch(const std::string& what) : FramekitError(what) {}
};

// A function of an operator was requested that is undefined on a retained eigenvalue.
class SingularOperator : public FramekitError {
public:
    explicit SingularOperator(const std::string& what) : FramekitError(what) {}
};

// The duality construction requires a total (lower-semi-frame) family.
class NotLowerSemiFrame : public FramekitError {
public:
    explicit NotLowerSemiFrame(const std::string& what) : FramekitError(what) {}
};

// File and format errors in the CSV/JSON front end.
class IoError : public FramekitError {
public:
    explicit IoError(const std::string& what) : FramekitError(what) {}
};

} // namespace framekit
