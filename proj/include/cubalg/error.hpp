#pragma once

#include <stdexcept>
#include <string>

namespace cubalg {

enum class ErrorCode {
    RealizationUndefined,
    RhoPole,
    RecurrenceSingular,
    NonUnitary,
    RootFindFailure,
    UnknownPotential,
    NoFiniteCubicAlgebra,
    NotCatalogued,
    SingularPoint,
    GridNotConverged,
    SingularPotential,
    GridTooLarge,
    RaisingUndefined,
    NotSusyCatalogued,
    BasisTooSmall,
    SelfOrthogonal,
};

const char* to_string(ErrorCode code);

/// Domain error carrying one of the variants above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cubalg
