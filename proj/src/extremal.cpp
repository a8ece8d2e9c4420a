#include "idcode/extremal.hpp"

#include <sstream>
#include <stdexcept>

namespace idcode {

std::uint64_t w_max(Radius r, unsigned k) {
  if (r < 1 || k < 1) throw std::invalid_argument("w_max needs r >= 1 and k >= 1");
  if (k > 62) throw std::invalid_argument("k too large");
  return k + std::uint64_t{r} * ((std::uint64_t{1} << k) - 2);
}

ExtremalInstance build_extremal(Radius r, unsigned k) {
  const std::uint64_t order = w_max(r, k);
  if (order > DistanceMatrix::kMaxOrder) {
    throw std::invalid_argument("H(r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                                ") has " + std::to_string(order) + " vertices, too many");
  }
  ExtremalInstance inst{Graph(order, "extremal:r=" + std::to_string(r) + ",k=" + std::to_string(k)),
                        {}, r, k, {}};
  for (Vertex c = 0; c < k; ++c) inst.code.push_back(c);
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) inst.graph.add_edge(a, b);
  }

  const std::uint64_t subsets = (std::uint64_t{1} << k) - 2;
  for (Radius j = 1; j <= r; ++j) {
    std::vector<LayerVertex> layer;
    const auto base = static_cast<Vertex>(k + (j - 1) * subsets);
    for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
      const auto v = static_cast<Vertex>(base + mask - 1);
      layer.push_back({v, mask});
      if (j == 1) {
        for (Vertex c = 0; c < k; ++c) {
          if ((mask >> c) & 1U) inst.graph.add_edge(v, c);
        }
      } else {
        inst.graph.add_edge(v, static_cast<Vertex>(v - subsets));
      }
    }
    inst.layers.push_back(std::move(layer));
  }
  return inst;
}

std::string serialize_extremal(const ExtremalInstance& inst) {
  std::ostringstream header;
  header << "extremal weak-code graph r=" << inst.r << " k=" << inst.k << " order=" << inst.graph.order()
         << "\ncode (clique): ";
  for (std::size_t i = 0; i < inst.code.size(); ++i) header << (i ? "," : "") << inst.code[i];
  for (std::size_t j = 0; j < inst.layers.size(); ++j) {
    for (const auto& lv : inst.layers[j]) {
      header << "\nvertex " << lv.vertex << " layer " << j + 1 << " subset {";
      bool first = true;
      for (unsigned c = 0; c < inst.k; ++c) {
        if ((lv.subset >> c) & 1U) {
          header << (first ? "" : ",") << c + 1;
          first = false;
        }
      }
      header << "}";
    }
  }
  return serialize_graph(inst.graph, header.str());
}

}  // namespace idcode
