#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grpwl {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with optional per-vertex labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n * n, 0), nbrs_(n), labels_(n) {}

  std::size_t num_vertices() const { return nbrs_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  // Throws Error(kInvalidArgument) on self-loops, duplicates, bad endpoints.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[std::size_t{u} * nbrs_.size() + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> sorted_edges() const;
  // Edges in insertion order, normalised so that u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  void set_label(Vertex v, std::string label) { labels_.at(v) = std::move(label); }
  const std::string& label(Vertex v) const { return labels_[v]; }
  bool has_labels() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

Graph complete_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph empty_graph(std::size_t m);
// Two m-cycles joined by a perfect matching (the m-prism).
Graph prism_graph(std::size_t m);

Graph complement(const Graph& g);
// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
// Subgraph induced on `vertices`, renumbered by position.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

// Degree-d gadget: vertices a_1, b_1, ..., a_d, b_d, then one internal vertex
// per even-weight bit string of length d, in lexicographic order. Internal u
// is adjacent to a_i if bit i of u is 0 and to b_i otherwise.
Graph cfi_gadget(std::size_t d);

struct CfiGadget {
  Vertex base_vertex = 0;
  // externals[i] = (a_i, b_i) for the i-th base edge at this vertex.
  std::vector<std::pair<Vertex, Vertex>> externals;
  // Index into the sorted base edge list for each external pair.
  std::vector<std::size_t> base_edges;
  std::vector<Vertex> internal;
};

struct CfiGraph {
  Graph graph;
  std::vector<CfiGadget> gadgets;
  std::vector<Edge> twist_set;
};

// Gadgets in base-vertex order, external pairs in sorted-base-edge order.
// Throws Error(kDisconnected) / Error(kDegreeTooLow) when the base graph is
// disconnected or has a vertex of degree < 2.
CfiGraph cfi(const Graph& base, const std::vector<Edge>& twist_set = {});

}  // namespace grpwl
