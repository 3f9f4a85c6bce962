#pragma once

#include <stdexcept>
#include <string>

namespace vrsp {

enum class ErrorKind {
  CycleDetected,
  DanglingEndpoint,
  EmptyAction,
  NonPositiveWeight,
  UnknownVertex,
  UnknownArc,
  OverlappingSets,
  EmptySet,
  NotProperSubset,
  ContractionCreatesCycle,
  NotBipartite,
  UnindexedVertex,
  EmptyList,
  SyntaxError,
  ValidationError,
  InvalidSpec,
  IoError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vrsp
