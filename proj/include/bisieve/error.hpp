#pragma once

#include <stdexcept>
#include <string>

namespace bisieve {

/// Argument outside an operation's mathematical domain (c = 0, n < 2, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Caller violated a documented precondition (e.g. base primes too short).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bisieve
