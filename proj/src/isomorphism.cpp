#include "rcurv/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "rcurv/errors.hpp"

namespace rcurv {
namespace {

using Colouring = std::vector<int>;

std::vector<int> histogram(const Colouring& c, int colours) {
  std::vector<int> h(static_cast<std::size_t>(colours), 0);
  for (int x : c) ++h[static_cast<std::size_t>(x)];
  return h;
}

// Refines both colourings with a shared signature table so that colour ids
// mean the same thing in both graphs. Returns false as soon as the colour
// class sizes differ.
bool refine(const Graph& g1, const Graph& g2, Colouring& c1, Colouring& c2) {
  int colours = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& g, const Colouring& c, Vertex v) {
      std::vector<int> sig{c[v]};
      for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> s1;
    std::vector<std::vector<int>> s2;
    for (Vertex v = 0; v < g1.vertex_count(); ++v) s1.push_back(signature(g1, c1, v));
    for (Vertex v = 0; v < g2.vertex_count(); ++v) s2.push_back(signature(g2, c2, v));
    for (const auto& s : s1) ids.emplace(s, 0);
    for (const auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < s1.size(); ++v) c1[v] = ids[s1[v]];
    for (Vertex v = 0; v < s2.size(); ++v) c2[v] = ids[s2[v]];
    if (histogram(c1, next) != histogram(c2, next)) return false;
    if (next == colours) return true;
    colours = next;
  }
}

std::optional<std::vector<Vertex>> search(const Graph& g1, const Graph& g2, Colouring c1,
                                          Colouring c2) {
  if (!refine(g1, g2, c1, c2)) return std::nullopt;
  int colours = *std::max_element(c1.begin(), c1.end()) + 1;
  auto sizes = histogram(c1, colours);
  int target = -1;
  for (int c = 0; c < colours; ++c) {
    if (sizes[static_cast<std::size_t>(c)] > 1 &&
        (target < 0 || sizes[static_cast<std::size_t>(c)] < sizes[static_cast<std::size_t>(target)])) {
      target = c;
    }
  }
  if (target < 0) {
    std::vector<Vertex> by_colour(static_cast<std::size_t>(colours));
    for (Vertex v = 0; v < c2.size(); ++v) by_colour[static_cast<std::size_t>(c2[v])] = v;
    std::vector<Vertex> mapping(c1.size());
    for (Vertex v = 0; v < c1.size(); ++v) mapping[v] = by_colour[static_cast<std::size_t>(c1[v])];
    if (is_isomorphism(g1, g2, mapping)) return mapping;
    return std::nullopt;
  }
  Vertex pick = static_cast<Vertex>(std::find(c1.begin(), c1.end(), target) - c1.begin());
  for (Vertex w = 0; w < c2.size(); ++w) {
    if (c2[w] != target) continue;
    Colouring n1 = c1;
    Colouring n2 = c2;
    n1[pick] = colours;
    n2[w] = colours;
    if (auto found = search(g1, g2, std::move(n1), std::move(n2))) return found;
  }
  return std::nullopt;
}

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (mapping.size() != g1.vertex_count()) return false;
  std::vector<char> hit(g2.vertex_count(), 0);
  for (Vertex v : mapping) {
    if (v >= g2.vertex_count() || hit[v]) return false;
    hit[v] = 1;
  }
  for (const Edge& e : g1.edges()) {
    if (!g2.adjacent(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  if (sorted_degree_sequence(g1) != sorted_degree_sequence(g2)) return std::nullopt;
  Colouring c1(g1.vertex_count(), 0);
  Colouring c2(g2.vertex_count(), 0);
  return search(g1, g2, std::move(c1), std::move(c2));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& permutation) {
  if (permutation.size() != g.vertex_count()) throw InvalidParameter("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
  return make_graph_unchecked(g.vertex_count(), edges, g.connected());
}

}  // namespace rcurv
