#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcurv/rational.hpp"

namespace rcurv {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // always sorted ascending

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Hop-count distance table. A value of -1 marks an unreachable pair, which
// only occurs for disconnected induced subgraphs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {}

  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::size_t size() const { return n_; }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

// Simple undirected graph, immutable after construction.
//
// Graphs produced by build_graph are always connected. induced_subgraph may
// produce a disconnected graph; it carries connected() == false and every
// metric query on it throws DisconnectedSubgraphError.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool connected() const { return connected_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool is_regular() const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
  // Index into edges(), or -1.
  std::int32_t edge_id(Vertex u, Vertex v) const {
    return edge_index_[static_cast<std::size_t>(u) * vertex_count() + v];
  }
  // Each undirected edge once with u < v, in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  // All-pairs BFS distances, computed on first use and then shared.
  const DistanceMatrix& distances() const;
  int distance(Vertex u, Vertex v) const { return distances()(u, v); }
  int diameter() const;

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);
  friend Graph make_graph_unchecked(std::size_t n, std::span<const Edge> edges,
                                    bool require_connected);

 private:
  struct DistanceCache {
    std::once_flag once;
    DistanceMatrix matrix;
  };

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> edge_index_;
  bool connected_ = true;
  std::shared_ptr<DistanceCache> cache_ = std::make_shared<DistanceCache>();
};

// Validates simplicity and connectivity. Edges may be given in any
// orientation; a repeated pair in either orientation is a DuplicateEdgeError.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

// Same validation except that a disconnected result is allowed when
// require_connected is false.
Graph make_graph_unchecked(std::size_t n, std::span<const Edge> edges, bool require_connected);

VertexSet sphere(const Graph& g, Vertex x, int r);
VertexSet ball(const Graph& g, Vertex x, int r);

struct SidePartition {
  VertexSet side_x;  // closer to x
  VertexSet side_y;  // closer to y
  VertexSet middle;  // equidistant
};

SidePartition side_partition(const Graph& g, Vertex x, Vertex y);

// (1/|V|^2) * sum over ordered pairs of d(u,v).
Rational effective_diameter(const Graph& g);
// max over x of (1/|V|) * sum_y d(x,y).
Rational max_mean_distance(const Graph& g);

struct LocalConnectivity {
  bool locally_connected = true;
  std::optional<Vertex> witness;  // a vertex with disconnected neighbourhood
};
LocalConnectivity local_connectivity(const Graph& g);
bool is_locally_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph vertex -> original vertex
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// z lies on a u-v geodesic iff d(u,z) + d(z,v) = d(u,v).
bool is_convex_subset(const Graph& g, std::span<const Vertex> s);
// Induced distances agree with the ambient ones.
bool is_isometric_subset(const Graph& g, std::span<const Vertex> s);

std::vector<Vertex> sorted_degree_sequence(const Graph& g);

// Text format: "n m", then m lines "u v"; '#' lines and blank lines ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

bool contains(std::span<const Vertex> sorted, Vertex v);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace rcurv
