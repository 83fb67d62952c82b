#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwis {

enum class Errc {
  DuplicateNode,
  NonPositiveWeight,
  SelfLoop,
  DuplicateEdge,
  UnknownEndpoint,
  UnknownNode,
  Acyclic,
  Disconnected,
  EmptyGraph,
  NotApplicable,
  HasCycle,
  NotCus,
  OverlappingComponents,
  TooLarge,
  MalformedHeader,
  CountMismatch,
  BadWeight,
  InvalidDensity,
  InvalidWeightRange,
  ZeroOptimum,
  MissingBaseline,
  Timeout,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mwis
