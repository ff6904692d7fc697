#include "laurent/error.hpp"

namespace laurent {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotARelation: return "NotARelation";
    case ErrorKind::MalformedPresentation: return "MalformedPresentation";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::MissingHypothesis: return "MissingHypothesis";
    case ErrorKind::NoBranchApplies: return "NoBranchApplies";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace laurent
