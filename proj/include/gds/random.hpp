#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gds/error.hpp"
#include "gds/family.hpp"
#include "gds/oracle.hpp"

namespace gds {

struct GeneratedInstance {
  SetFamily family;
  std::optional<WeightFunction> w;  // a point of S when one exists
  bool feasible = false;
  std::size_t vertex_count = 0;
};

/// Random family on labels 1..elements with exactly `blocks` distinct blocks and
/// every element in between one and kappa_max of them. Deterministic in seed.
inline SetFamily gen_random_family(std::size_t elements, std::size_t blocks, std::size_t kappa_max,
                                   std::uint64_t seed) {
  if (kappa_max == 0) throw InvalidInput("kappa-max must be at least 1");
  if (elements == 0 || blocks == 0) throw InvalidInput("need at least one element and one block");
  if (blocks > elements * kappa_max)
    throw InvalidInput("cannot fill " + std::to_string(blocks) + " blocks with " +
                       std::to_string(elements) + " elements of multiplicity at most " +
                       std::to_string(kappa_max));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<ElementId>> lists(blocks);
    for (ElementId g = 1; g <= elements; ++g) {
      const std::size_t kappa = 1 + uniform_below(rng, std::min(kappa_max, blocks));
      std::set<std::size_t> picked;
      while (picked.size() < kappa) picked.insert(uniform_below(rng, blocks));
      for (std::size_t b : picked) lists[b].push_back(g);
    }
    bool ok = true;
    std::set<std::vector<ElementId>> seen;
    for (const auto& l : lists) ok = ok && !l.empty() && seen.insert(l).second;
    if (ok) return build_family(lists);
  }
  throw InvalidInput("no family with these parameters found after 10000 attempts");
}

/// Random family plus, when S is nonempty, a random mixture of its vertices.
inline GeneratedInstance gen_random(std::size_t elements, std::size_t blocks, std::size_t kappa_max,
                                    std::uint64_t seed, const OracleOptions& opt = {}) {
  GeneratedInstance out;
  out.family = gen_random_family(elements, blocks, kappa_max, seed);
  const VertexSet vs = enumerate_vertices(out.family, opt);
  out.vertex_count = vs.vertices.size();
  out.feasible = !vs.infeasible;
  if (out.feasible) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t count = 1 + uniform_below(rng, vs.vertices.size());
    out.w = random_mixture(vs.vertices, count, rng);
  }
  return out;
}

}  // namespace gds
