#pragma once

#include <stdexcept>
#include <string>

namespace cfclab {

enum class ErrKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  Disconnected,
  TooLarge,
  NotAPath,
  NotSimple,
  SameVertex,
  PathExplosion,
  NoCutEdges,
  HTooSmall,
  BudgetExceeded,
  KTooSmall,
  NotATree,
  HypothesisViolated,
  BadParameters,
  BadFormat,
  CorpusTooLarge,
  InternalInvariant,
};

const char* to_string(ErrKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg);
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] void fail(ErrKind kind, const std::string& msg);

}  // namespace cfclab
