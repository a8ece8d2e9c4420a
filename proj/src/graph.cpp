#include "idcode/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "idcode/kernels.hpp"

namespace idcode {

Graph::Graph(std::size_t n, std::string label) : adjacency_(n), label_(std::move(label)) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (n > DistanceMatrix::kMaxOrder) throw std::invalid_argument("graph too large");
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  auto& adj_u = adjacency_[u];
  auto it = std::lower_bound(adj_u.begin(), adj_u.end(), v);
  if (it != adj_u.end() && *it == v) return false;
  adj_u.insert(it, v);
  auto& adj_v = adjacency_[v];
  adj_v.insert(std::lower_bound(adj_v.begin(), adj_v.end(), u), u);
  ++edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n, "cycle:" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return g;
}

Graph build_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n, "path:" + std::to_string(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return g;
}

namespace {

bool parse_uint(std::string_view token, std::size_t& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (!parse_uint(tokens[0], a) || !parse_uint(tokens[1], b)) {
      throw ParseError(line_no, "not a nonnegative integer pair");
    }
    if (!g) {
      if (a == 0) throw ParseError(line_no, "vertex count must be at least 1");
      if (a > DistanceMatrix::kMaxOrder) throw ParseError(line_no, "vertex count too large");
      g.emplace(a);
      declared_edges = b;
    } else {
      const std::size_t n = g->order();
      if (a >= n || b >= n) {
        throw ParseError(line_no, "vertex " + std::to_string(a >= n ? a : b) +
                                      " out of range (n = " + std::to_string(n) + ")");
      }
      if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
      g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      ++seen_edges;
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError(line_no, "missing \"n m\" header");
  if (seen_edges != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges, found " + std::to_string(seen_edges));
  }
  return std::move(*g);
}

std::string serialize_graph(const Graph& g, std::string_view header_comment) {
  std::ostringstream out;
  std::size_t start = 0;
  while (start < header_comment.size()) {
    std::size_t end = header_comment.find('\n', start);
    if (end == std::string_view::npos) end = header_comment.size();
    out << "# " << header_comment.substr(start, end - start) << '\n';
    start = end + 1;
  }
  out << g.order() << ' ' << g.size() << '\n';
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

Graph load_graph_spec(const std::string& spec) {
  auto numeric_suffix = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!spec.starts_with(prefix)) return std::nullopt;
    std::size_t n = 0;
    if (!parse_uint(std::string_view(spec).substr(prefix.size()), n)) {
      throw std::invalid_argument("bad graph spec '" + spec + "'");
    }
    return n;
  };
  if (auto n = numeric_suffix("cycle:")) return build_cycle(*n);
  if (auto n = numeric_suffix("path:")) return build_path(*n);

  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open graph file '" + spec + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Graph g = parse_graph(buffer.str());
  g.set_label("file:" + spec);
  return g;
}

std::size_t cycle_order(const Graph& g) {
  std::string_view label = g.label();
  if (!label.starts_with("cycle:")) return 0;
  std::size_t n = 0;
  if (!parse_uint(label.substr(6), n) || n != g.order()) return 0;
  return n;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

VertexSet VertexSet::from_code(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph of order " +
                                  std::to_string(universe));
    }
    s.insert(v);
  }
  return s;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), stride_((g.order() + 31) / 32 * 32), data_(n_ * stride_, kInfinite) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    Distance* row = data_.data() + s * stride_;
    std::size_t head = 0;
    std::size_t tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == kInfinite) {
          row[w] = static_cast<Distance>(row[v] + 1);
          queue[tail++] = w;
        }
      }
    }
  }
}

DistanceMatrix::Distance DistanceMatrix::diameter() const {
  Distance best = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      Distance d = data_[x * stride_ + y];
      if (d == kInfinite) return kInfinite;
      best = std::max(best, d);
    }
  }
  return best;
}

VertexSet DistanceMatrix::ball(Vertex x, unsigned radius) const {
  VertexSet s(n_);
  ball_into(x, radius, s.words());
  return s;
}

void DistanceMatrix::ball_into(Vertex x, unsigned radius, std::span<std::uint64_t> out) const {
  if (x >= n_) throw std::out_of_range("ball center out of range");
  // kInfinite never lies inside a ball, whatever the radius.
  const auto limit = static_cast<Distance>(std::min<unsigned>(radius, kInfinite - 1));
  kernels::active().threshold_bits(data_.data() + x * stride_, n_, limit, out.data());
}

}  // namespace idcode
