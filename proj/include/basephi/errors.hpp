#pragma once

#include <stdexcept>
#include <string>

namespace basephi {

// Argument outside the domain of a total function (lucas(-1), N < 2 for classify, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A flip/unflip window did not hold the required 100 / 011 pattern.
class PatternMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word that cannot be factorized or parsed.
class MalformedWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search or table would exceed a configured guard bound.
class GuardRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown suite name, bad option value and similar caller mistakes.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant: rewriting cap hit, surgery mismatch, constructor disagreement.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace basephi
