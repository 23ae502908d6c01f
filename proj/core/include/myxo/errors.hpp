#pragma once

#include <stdexcept>
#include <string>

namespace myxo {

/// Caller misuse: bad arguments, bad configuration, out-of-range indices.
/// The CLI maps this to exit code 1.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Runtime failure outside the caller's control (I/O, malformed input files,
/// internal consistency violations). The CLI maps this to exit code 2.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace myxo
