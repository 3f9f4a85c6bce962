#pragma once

#include <cstdint>
#include <string>

#include "vrsp/document.hpp"

namespace vrsp {

enum class GeneratorKind {
  CartesianMatrix,
  BipartiteMatrix,
  T1Cut,
  T2Cut,
  MixedT7,
};

GeneratorKind generator_kind_from_string(const std::string& s);  // InvalidSpec
const char* to_string(GeneratorKind k);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::CartesianMatrix;
  int rows = 3;
  int cols = 4;
  int blocks = 3;
  int labels = 2;
  std::uint64_t seed = 0;
};

// Deterministic: one spec, one byte stream. Every instance is checked
// against its target theorem's validator before being returned, and carries
// the named sets / coordinates needed to decompose it (X for T1; X1, X2 for
// T2; coordinates plus R*/C* sets for the matrix kinds; M* sets for T7).
GraphDocument generate(const GeneratorSpec& spec);  // InvalidSpec

}  // namespace vrsp
