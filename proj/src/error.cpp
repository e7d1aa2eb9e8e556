#include "locc/error.hpp"

namespace locc {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyStructure: return "EmptyStructure";
    case ErrorCode::MalformedHypergraph: return "MalformedHypergraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MismatchedAgents: return "MismatchedAgents";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InputConnected: return "InputConnected";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::EqualTrees: return "EqualTrees";
    case ErrorCode::ConditionNotMet: return "ConditionNotMet";
    case ErrorCode::NotRUniformHypertrees: return "NotRUniformHypertrees";
    case ErrorCode::EqualHypertrees: return "EqualHypertrees";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::BadAgents: return "BadAgents";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::IncompatibleParameters: return "IncompatibleParameters";
    case ErrorCode::BadReport: return "BadReport";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace locc
