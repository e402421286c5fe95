#pragma once

#include <stdexcept>
#include <string>

namespace holderlab {

// Enumeration or pair budget exceeded.
struct EnumerationLimitError : std::runtime_error {
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A requested construction needs log a / log b to be rational and it is not.
struct IncommensurableError : std::domain_error {
    explicit IncommensurableError(const std::string& what) : std::domain_error(what) {}
};

// Two exact values cannot be ordered without knowing an opaque base's value.
struct IncomparableValueError : std::domain_error {
    explicit IncomparableValueError(const std::string& what) : std::domain_error(what) {}
};

// An operation requires a totally-disconnected cube and neither a
// certificate nor an explicit override was supplied.
struct UncertifiedCubeError : std::runtime_error {
    explicit UncertifiedCubeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holderlab
