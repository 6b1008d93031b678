#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bg {

// Raised when interval refinement hits the configured bit cap without
// resolving a sign/floor question and no symbolic zero certificate exists.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Expression text did not conform to the grammar.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Square root of a provably negative value, division by exact zero, and
// other violations of an operation's precondition.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A forward orbit scan exceeded its iteration budget even though a witness
// is guaranteed to exist; flags precision trouble rather than absence.
struct ScanBudgetExceeded : std::runtime_error {
    explicit ScanBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive superadditivity search reached its hard cap without locating the
// violation that the theory guarantees.
struct WitnessNotFound : std::runtime_error {
    explicit WitnessNotFound(const std::string& what) : std::runtime_error(what) {}
};

// line_closure called on a rationally independent pair.
struct NotDependent : std::runtime_error {
    explicit NotDependent(const std::string& what) : std::runtime_error(what) {}
};

// A move-set build was handed a P-set whose bound cannot certify membership
// of every relevant difference.
struct InsufficientPSet : std::runtime_error {
    explicit InsufficientPSet(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bg
