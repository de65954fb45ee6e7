#pragma once

#include <stdexcept>
#include <string>

namespace frontier {

// Raised when an instance has no regions left to reconstruct over.
class EmptyAfterTruncation : public std::runtime_error {
public:
    explicit EmptyAfterTruncation(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised by enumeration routines when a configured work budget is exceeded.
class LimitExceeded : public std::runtime_error {
public:
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the instance generator when it cannot place a valid layout.
class GenerationRetryExceeded : public std::runtime_error {
public:
    explicit GenerationRetryExceeded(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when a retrieved point falls outside its declared region.
class OracleContainmentViolation : public std::runtime_error {
public:
    explicit OracleContainmentViolation(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when an implicit front cannot be resolved against a point set.
class ResolutionMismatch : public std::runtime_error {
public:
    explicit ResolutionMismatch(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised by debug self-checks when an internal invariant fails.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

// Raised when an output fails verification; carries the failed clause.
class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::string clause_name, const std::string& what)
        : std::runtime_error(what), clause(std::move(clause_name)) {}
    std::string clause;
};

// Raised by galloping search debug mode when the predicate is not monotone.
class PredicateNotMonotone : public std::logic_error {
public:
    explicit PredicateNotMonotone(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace frontier
