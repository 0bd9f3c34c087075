#pragma once

#include <stdexcept>
#include <string>

namespace tamecalc {

// Thrown when a computation would exceed a configured size cap
// (symmetrization order, tensor component count, grid memory).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a field violates the low-norm ball condition required by the
// composition bounds. The message names the failed inequality.
class BallViolation : public std::domain_error {
public:
    explicit BallViolation(const std::string& what) : std::domain_error(what) {}
};

// Thrown on malformed scenario/config input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tamecalc
