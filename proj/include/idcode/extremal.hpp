#pragma once

// Graphs of maximum order admitting a weak r-code of size k: a k-clique
// (the code) plus r layers, each with one vertex per nonempty proper subset
// of the clique. Layer 1 vertices attach to their subset; deeper layers form
// a pendant path per subset.

#include <cstdint>
#include <string>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/semantics.hpp"

namespace idcode {

struct LayerVertex {
  Vertex vertex;
  // Bit i set: clique vertex i belongs to the subset.
  std::uint64_t subset;
};

struct ExtremalInstance {
  Graph graph;
  Code code;
  Radius r = 0;
  unsigned k = 0;
  // layers[j - 1] holds layer j, ordered by ascending subset bitmask.
  std::vector<std::vector<LayerVertex>> layers;
};

// k + r(2^k - 2). Requires r >= 1 and 1 <= k <= 62.
std::uint64_t w_max(Radius r, unsigned k);

// Vertex numbering: clique 0..k-1, then layer j at offset k + (j-1)(2^k-2),
// subsets in ascending bitmask order. Requires w_max(r, k) to fit a graph.
ExtremalInstance build_extremal(Radius r, unsigned k);

// Edge list with a comment header recording r, k and each layer vertex's
// subset (1-based clique labels).
std::string serialize_extremal(const ExtremalInstance& inst);

}  // namespace idcode
