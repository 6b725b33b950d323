#pragma once

#include <stdexcept>
#include <string>

namespace frobstrat {

/// Base of the recoverable error taxonomy. `name()` is the stable,
/// machine-readable identifier that the CLI prints on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct NonPrimeCharacteristic final : DomainError {
    explicit NonPrimeCharacteristic(const std::string& m) : DomainError("NonPrimeCharacteristic", m) {}
};

struct NegativeGenus final : DomainError {
    explicit NegativeGenus(const std::string& m) : DomainError("NegativeGenus", m) {}
};

struct NotConvex final : DomainError {
    explicit NotConvex(const std::string& m) : DomainError("NotConvex", m) {}
};

struct BadEndpoints final : DomainError {
    explicit BadEndpoints(const std::string& m) : DomainError("BadEndpoints", m) {}
};

struct IndivisibleDegree final : DomainError {
    explicit IndivisibleDegree(const std::string& m) : DomainError("IndivisibleDegree", m) {}
};

struct EndpointMismatch final : DomainError {
    explicit EndpointMismatch(const std::string& m) : DomainError("EndpointMismatch", m) {}
};

struct GenusTooSmall final : DomainError {
    explicit GenusTooSmall(const std::string& m) : DomainError("GenusTooSmall", m) {}
};

struct BudgetExceeded final : DomainError {
    explicit BudgetExceeded(const std::string& m) : DomainError("BudgetExceeded", m) {}
};

// Plumbing errors; same style, names not mandated by any interface.

struct Overflow final : DomainError {
    explicit Overflow(const std::string& m) : DomainError("Overflow", m) {}
};

struct DivisionByZero final : DomainError {
    explicit DivisionByZero(const std::string& m) : DomainError("DivisionByZero", m) {}
};

struct InvalidRank final : DomainError {
    explicit InvalidRank(const std::string& m) : DomainError("InvalidRank", m) {}
};

struct BadConstraints final : DomainError {
    explicit BadConstraints(const std::string& m) : DomainError("BadConstraints", m) {}
};

struct UnmappedPoint final : DomainError {
    explicit UnmappedPoint(const std::string& m) : DomainError("UnmappedPoint", m) {}
};

struct InvalidJson final : DomainError {
    explicit InvalidJson(const std::string& m) : DomainError("InvalidJson", m) {}
};

struct InvalidRational final : DomainError {
    explicit InvalidRational(const std::string& m) : DomainError("InvalidRational", m) {}
};

struct InvalidDivisor final : DomainError {
    explicit InvalidDivisor(const std::string& m) : DomainError("InvalidDivisor", m) {}
};

struct InvalidPointMap final : DomainError {
    explicit InvalidPointMap(const std::string& m) : DomainError("InvalidPointMap", m) {}
};

struct InputUnreadable final : DomainError {
    explicit InputUnreadable(const std::string& m) : DomainError("InputUnreadable", m) {}
};

}  // namespace frobstrat
