#include "rcurv/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"

namespace rcurv {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// N(a) n N(b) == {x}, read from adjacency.
bool only_common_neighbour(const Graph& g, Vertex a, Vertex b, Vertex x) {
  auto common = set_intersection(g.neighbors(a), g.neighbors(b));
  return common.size() == 1 && common.front() == x;
}

bool related(const Graph& g, const Edge& e, const Edge& f) {
  const auto& d = g.distances();
  if (d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u)) return true;
  for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    for (auto [x2, y2] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
      if (x == x2 && only_common_neighbour(g, y, y2, x)) return true;
    }
  }
  return false;
}

// Connected component labels of (V, edges whose component is in `side`).
std::vector<int> layer_labels(const Graph& g, const EdgeRelationPartition& p, const std::vector<char>& side) {
  DisjointSets ds(g.vertex_count());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (side[static_cast<std::size_t>(p.component[i])]) ds.unite(p.edges[i].u, p.edges[i].v);
  }
  std::vector<int> label(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) label[v] = static_cast<int>(ds.find(v));
  return label;
}

std::optional<std::pair<Graph, Graph>> try_split(const Graph& g, const EdgeRelationPartition& p,
                                                 const std::vector<char>& side1) {
  std::vector<char> side2(side1.size());
  for (std::size_t i = 0; i < side1.size(); ++i) side2[i] = !side1[i];
  const auto l1 = layer_labels(g, p, side1);
  const auto l2 = layer_labels(g, p, side2);
  const Vertex base = 0;
  VertexSet layer1;
  VertexSet layer2;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (l1[v] == l1[base]) layer1.push_back(v);
    if (l2[v] == l2[base]) layer2.push_back(v);
  }
  const std::size_t n1 = layer1.size();
  const std::size_t n2 = layer2.size();
  if (n1 * n2 != g.vertex_count() || n1 < 2 || n2 < 2) return std::nullopt;

  // Coordinate of w in factor 1: the vertex of layer1 sharing w's factor-2 layer.
  auto project = [&](const VertexSet& layer, const std::vector<int>& other, Vertex w) -> std::optional<std::size_t> {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (other[layer[i]] != other[w]) continue;
      if (hit) return std::nullopt;
      hit = i;
    }
    return hit;
  };
  std::vector<Vertex> mapping(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    auto c1 = project(layer1, l2, w);
    auto c2 = project(layer2, l1, w);
    if (!c1 || !c2) return std::nullopt;
    mapping[w] = static_cast<Vertex>(*c1 * n2 + *c2);
  }
  Graph g1 = induced_subgraph(g, layer1).graph;
  Graph g2 = induced_subgraph(g, layer2).graph;
  if (!g1.connected() || !g2.connected()) return std::nullopt;
  if (!is_isomorphism(g, cartesian_product(g1, g2), mapping)) return std::nullopt;
  return std::pair{std::move(g1), std::move(g2)};
}

}  // namespace

EdgeRelationPartition edge_relation_components(const Graph& g) {
  EdgeRelationPartition p;
  p.edges = g.edges();
  const std::size_t m = p.edges.size();
  DisjointSets ds(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (ds.find(i) != ds.find(j) && related(g, p.edges[i], p.edges[j])) ds.unite(i, j);
    }
  }
  std::vector<int> id(m, -1);
  p.component.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = ds.find(i);
    if (id[r] < 0) id[r] = p.count++;
    p.component[i] = id[r];
  }
  return p;
}

bool is_prime(const Graph& g) {
  if (g.vertex_count() < 2) throw TrivialGraphError("a single vertex has no factorization");
  return edge_relation_components(g).count == 1;
}

std::vector<Graph> factorize(const Graph& g) {
  if (g.vertex_count() < 2) throw TrivialGraphError("a single vertex has no factorization");
  EdgeRelationPartition p = edge_relation_components(g);
  if (p.count == 1) return {g};
  const auto k = static_cast<std::size_t>(p.count);
  // Groupings by size of the first side, single components first.
  for (std::size_t size = 1; size <= k / 2; ++size) {
    std::vector<char> side(k, 0);
    std::fill(side.end() - static_cast<std::ptrdiff_t>(size), side.end(), 1);
    do {
      if (auto split = try_split(g, p, side)) {
        auto left = factorize(split->first);
        auto right = factorize(split->second);
        left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
        return left;
      }
    } while (std::next_permutation(side.begin(), side.end()));
  }
  throw FactorizationFailed("no grouping of " + std::to_string(k) + " edge classes reconstructs the graph");
}

}  // namespace rcurv
