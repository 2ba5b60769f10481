#pragma once

#include <stdexcept>
#include <string>

namespace invlab {

// Argument outside the mathematical domain of an operation (q odd where even
// is required, gcd(p, q) > 1 for an order, principal character at s = 1, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Caller-supplied configuration cannot be honoured (too few base primes,
// truncation cutoff below the modulus, series order past the stored depth).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A lemma or proposition was invoked outside its hypotheses.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Two independent evaluation routes disagreed.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace invlab
