#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace laurent {

enum class ErrorKind {
    RankMismatch,
    DomainMismatch,
    NotInDomain,
    NotAUnit,
    NotUnimodular,
    ZeroPolynomial,
    NotARelation,
    MalformedPresentation,
    ZeroElement,
    ZeroExponent,
    HypothesisFailed,
    DecompositionFailed,
    NotRankOne,
    MissingHypothesis,
    NoBranchApplies,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the named kinds above;
// the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace laurent
