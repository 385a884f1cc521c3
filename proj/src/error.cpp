#include "neighborly/error.hpp"

namespace neighborly {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidModification: return "InvalidModification";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyClause: return "EmptyClause";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::NotE3Cnf: return "NotE3Cnf";
    case ErrorKind::ClauseTooWide: return "ClauseTooWide";
    case ErrorKind::Tautology: return "Tautology";
    case ErrorKind::TooFewVariables: return "TooFewVariables";
    case ErrorKind::TooFewClauses: return "TooFewClauses";
    case ErrorKind::NotSatisfying: return "NotSatisfying";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::NotUniversalEdged: return "NotUniversalEdged";
    case ErrorKind::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::Timeout: return "Timeout";
    }
    return "Unknown";
}

} // namespace neighborly
