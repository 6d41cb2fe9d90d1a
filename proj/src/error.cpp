#include "ltree/error.hpp"

namespace ltree {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::UndefinedRatio: return "UndefinedRatio";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInValuationRing: return "NotInValuationRing";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::EmbeddingError: return "EmbeddingError";
    case ErrorCode::TreeMismatch: return "TreeMismatch";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::OrbitEscapesTree: return "OrbitEscapesTree";
    case ErrorCode::SingularLattice: return "SingularLattice";
    case ErrorCode::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::InfiniteResidueField: return "InfiniteResidueField";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::SymbolError: return "SymbolError";
    case ErrorCode::TrivialAction: return "TrivialAction";
    case ErrorCode::BoundedCharacter: return "BoundedCharacter";
    case ErrorCode::NotSupportedAtInfinity: return "NotSupportedAtInfinity";
    case ErrorCode::ClassListMismatch: return "ClassListMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ltree
