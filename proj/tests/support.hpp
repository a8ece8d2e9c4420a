#pragma once

#include <idcode/graph.hpp>

#include <vector>

#include "oracle.hpp"

inline idcode::Graph to_graph(const oracle::RandomGraph& rg) {
  idcode::Graph g(static_cast<std::size_t>(rg.n));
  for (auto [a, b] : rg.edges) g.add_edge(static_cast<idcode::Vertex>(a), static_cast<idcode::Vertex>(b));
  return g;
}

inline idcode::Code to_code(const std::vector<int>& v) { return idcode::Code(v.begin(), v.end()); }

inline std::vector<int> to_ints(const idcode::Code& c) { return std::vector<int>(c.begin(), c.end()); }

// Uniform random subset of {0..n-1}; never empty.
template <typename Rng>
idcode::Code random_code(Rng& rng, int n) {
  idcode::Code c;
  while (c.empty()) {
    for (int v = 0; v < n; ++v)
      if (rng() & 1U) c.push_back(static_cast<idcode::Vertex>(v));
  }
  return c;
}
