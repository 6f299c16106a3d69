#pragma once

#include <stdexcept>
#include <string>

namespace hexflip {

// Domain errors carry a stable name so the CLI can surface it verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define HEXFLIP_ERROR(NAME)                                             \
    struct NAME final : DomainError {                                   \
        explicit NAME(const std::string& what) : DomainError(#NAME, what) {} \
    }

HEXFLIP_ERROR(NotCoprime);
HEXFLIP_ERROR(NonPositive);
HEXFLIP_ERROR(InvalidRange);
HEXFLIP_ERROR(NotSL2);
HEXFLIP_ERROR(NotUnimodularPair);
HEXFLIP_ERROR(RadiusTooLarge);
HEXFLIP_ERROR(PeriodicOperator);
HEXFLIP_ERROR(NotHyperbolic);
HEXFLIP_ERROR(EqualEndpoints);
HEXFLIP_ERROR(SideNotInTriangle);
HEXFLIP_ERROR(VertexOfTriangle);
HEXFLIP_ERROR(NotMinimalMatrix);
HEXFLIP_ERROR(ZeroComplexity);
HEXFLIP_ERROR(BadInput);

#undef HEXFLIP_ERROR

} // namespace hexflip
