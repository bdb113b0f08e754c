#pragma once

#include <stdexcept>
#include <string>

namespace pcc {

/// Raised when a request exceeds a hard implementation limit (block length,
/// brute-force decoder size, ...). The message names the cap that was hit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a statistic is requested from cells that stopped on the block
/// cap before collecting the configured number of errors.
class UndersampledError : public std::runtime_error {
public:
    explicit UndersampledError(const std::string& what) : std::runtime_error(what) {}
};

/// File-system failure (unwritable output path, missing input file).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pcc
