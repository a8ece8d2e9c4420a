#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idcode {

using Vertex = std::uint32_t;
using Code = std::vector<Vertex>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Finite simple undirected graph on vertices {0, ..., n-1}. Adjacency lists
// are kept sorted and symmetric; self-loops and parallel edges are rejected
// or collapsed on insertion.
class Graph {
 public:
  explicit Graph(std::size_t n, std::string label = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edges_ = 0;
  std::string label_;
};

Graph build_cycle(std::size_t n);
Graph build_path(std::size_t n);

// Edge-list document: "n m" header, then m "u v" lines. Lines whose first
// non-blank character is '#' are comments.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g, std::string_view header_comment = {});

// "cycle:n", "path:n", or a path to an edge-list file.
Graph load_graph_spec(const std::string& spec);

// Parsed "cycle:n" label, or 0 when the graph is not a labeled cycle.
std::size_t cycle_order(const Graph& g);

bool is_connected(const Graph& g);

// Dense bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  static VertexSet from_code(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  std::size_t count() const;
  bool empty() const;
  std::vector<Vertex> members() const;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// All-pairs hop distances from one BFS per source. Rows are padded to a
// multiple of 32 entries (padding holds kInfinite) so vector kernels can
// read whole registers.
class DistanceMatrix {
 public:
  using Distance = std::uint16_t;
  static constexpr Distance kInfinite = 0xFFFF;
  static constexpr std::size_t kMaxOrder = 0xFFFE;

  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }
  Distance at(Vertex x, Vertex y) const { return data_[x * stride_ + y]; }
  std::span<const Distance> row(Vertex x) const { return {data_.data() + x * stride_, stride_}; }
  // Largest finite distance, or kInfinite when the graph is disconnected.
  Distance diameter() const;

  VertexSet ball(Vertex x, unsigned radius) const;
  void ball_into(Vertex x, unsigned radius, std::span<std::uint64_t> out) const;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<Distance> data_;
};

}  // namespace idcode
