#include "cubalg/error.hpp"

namespace cubalg {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::RealizationUndefined: return "RealizationUndefined";
    case ErrorCode::RhoPole: return "RhoPole";
    case ErrorCode::RecurrenceSingular: return "RecurrenceSingular";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::RootFindFailure: return "RootFindFailure";
    case ErrorCode::UnknownPotential: return "UnknownPotential";
    case ErrorCode::NoFiniteCubicAlgebra: return "NoFiniteCubicAlgebra";
    case ErrorCode::NotCatalogued: return "NotCatalogued";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::GridNotConverged: return "GridNotConverged";
    case ErrorCode::SingularPotential: return "SingularPotential";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::RaisingUndefined: return "RaisingUndefined";
    case ErrorCode::NotSusyCatalogued: return "NotSusyCatalogued";
    case ErrorCode::BasisTooSmall: return "BasisTooSmall";
    case ErrorCode::SelfOrthogonal: return "SelfOrthogonal";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

} // namespace cubalg
