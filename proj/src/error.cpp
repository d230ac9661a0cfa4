#include "cfclab/error.hpp"

namespace cfclab {

const char* to_string(ErrKind kind) {
  switch (kind) {
    case ErrKind::LoopEdge: return "LoopEdge";
    case ErrKind::DuplicateEdge: return "DuplicateEdge";
    case ErrKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrKind::EmptyGraph: return "EmptyGraph";
    case ErrKind::Disconnected: return "Disconnected";
    case ErrKind::TooLarge: return "TooLarge";
    case ErrKind::NotAPath: return "NotAPath";
    case ErrKind::NotSimple: return "NotSimple";
    case ErrKind::SameVertex: return "SameVertex";
    case ErrKind::PathExplosion: return "PathExplosion";
    case ErrKind::NoCutEdges: return "NoCutEdges";
    case ErrKind::HTooSmall: return "HTooSmall";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::KTooSmall: return "KTooSmall";
    case ErrKind::NotATree: return "NotATree";
    case ErrKind::HypothesisViolated: return "HypothesisViolated";
    case ErrKind::BadParameters: return "BadParameters";
    case ErrKind::BadFormat: return "BadFormat";
    case ErrKind::CorpusTooLarge: return "CorpusTooLarge";
    case ErrKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(ErrKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace cfclab
