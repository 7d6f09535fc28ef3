#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "structctl/core.hpp"

namespace structctl {

enum class GeneratorFamily {
  Erdos,              // independent entries in A and B
  Chain,              // path x1 -> x2 -> ... -> xn, u1 drives x1
  Cycle,              // ring through every state: irreducible
  DecoupledDiagonal,  // A = I, input j drives state j
  Block,              // strongly connected blocks joined by forward arcs
};

struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::Erdos;
  std::size_t n = 4;
  std::size_t m = 2;
  /// Probability of each extra entry of A (for block: of each inter-block arc).
  double density_a = 0.2;
  /// Probability of each extra entry of B.
  double density_b = 0.2;
  /// Block family only; 0 picks max(1, n / 4).
  std::size_t blocks = 0;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 1;
  std::uint64_t seed = 1;
};

std::string_view to_string(GeneratorFamily family);
/// Throws Error(BadSpec) on an unknown name.
GeneratorFamily parse_family(std::string_view name);

/// Deterministic for a given spec: the same spec yields the same system on
/// every platform. Throws Error(BadSpec) on invalid parameters.
StructuredSystem generate_system(const GeneratorSpec& spec);

}  // namespace structctl
