#pragma once

#include <stdexcept>
#include <string>

namespace hkt {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files / literals. CLI maps this to exit code 2.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Dimension mismatches, ring mismatches, inconsistent tensors.
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// A check was invoked on data that fails its precondition
// (e.g. strong-HKT on non-HKT data). CLI maps this to exit code 3.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

} // namespace hkt
