#pragma once

#include <stdexcept>
#include <string>

namespace zeta {

/// Argument outside a formula's validity region (e.g. sigma <= 1).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested accuracy unattainable with the given precision/iteration budget.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// A hard resource guard was exceeded (e.g. prime count limit).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeta
