#include "grpwl/graph.hpp"

#include <algorithm>
#include <string>

#include "grpwl/error.hpp"

namespace grpwl {

void Graph::add_edge(Vertex u, Vertex v) {
  const std::size_t n = nbrs_.size();
  if (u >= n || v >= n) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
  if (adjacent(u, v))
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[std::size_t{u} * n + v] = adj_[std::size_t{v} * n + u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::size_t Graph::min_degree() const {
  std::size_t d = nbrs_.empty() ? 0 : nbrs_[0].size();
  for (const auto& nb : nbrs_) d = std::min(d, nb.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : nbrs_) d = std::max(d, nb.size());
  return d;
}

std::vector<Edge> Graph::sorted_edges() const {
  auto e = edges_;
  std::sort(e.begin(), e.end());
  return e;
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
}

Graph complete_graph(std::size_t m) {
  Graph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t m) {
  Graph g(m);
  for (Vertex u = 0; u + 1 < m; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path_graph(m);
  g.add_edge(0, static_cast<Vertex>(m - 1));
  return g;
}

Graph empty_graph(std::size_t m) { return Graph(m); }

Graph prism_graph(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::kInvalidArgument, "prism needs m >= 3");
  Graph g(2 * m);
  for (Vertex i = 0; i < m; ++i) {
    Vertex j = static_cast<Vertex>((i + 1) % m);
    g.add_edge(i, j);
    g.add_edge(static_cast<Vertex>(m + i), static_cast<Vertex>(m + j));
    g.add_edge(i, static_cast<Vertex>(m + i));
  }
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

namespace {

// Even-weight strings of length d in lexicographic order, as bit vectors with
// bit i being character i of the string.
std::vector<std::vector<std::uint8_t>> even_strings(std::size_t d) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> s(d, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    std::size_t weight = 0;
    for (std::size_t i = 0; i < d; ++i) {
      s[i] = (code >> (d - 1 - i)) & 1;
      weight += s[i];
    }
    if (weight % 2 == 0) out.push_back(s);
  }
  return out;
}

std::string bits_label(const std::vector<std::uint8_t>& s) {
  std::string r;
  for (auto b : s) r += b ? '1' : '0';
  return r;
}

}  // namespace

Graph cfi_gadget(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::kDegreeTooLow, "gadget degree must be at least 2");
  auto strings = even_strings(d);
  Graph g(2 * d + strings.size());
  for (std::size_t i = 0; i < d; ++i) {
    g.set_label(static_cast<Vertex>(2 * i), "a" + std::to_string(i + 1));
    g.set_label(static_cast<Vertex>(2 * i + 1), "b" + std::to_string(i + 1));
  }
  for (std::size_t k = 0; k < strings.size(); ++k) {
    Vertex u = static_cast<Vertex>(2 * d + k);
    g.set_label(u, bits_label(strings[k]));
    for (std::size_t i = 0; i < d; ++i)
      g.add_edge(u, static_cast<Vertex>(2 * i + strings[k][i]));
  }
  return g;
}

CfiGraph cfi(const Graph& base, const std::vector<Edge>& twist_set) {
  const std::size_t nb = base.num_vertices();
  if (nb == 0 || !is_connected(base))
    throw Error(ErrorCode::kDisconnected, "CFI base graph must be connected");
  if (base.min_degree() < 2)
    throw Error(ErrorCode::kDegreeTooLow, "CFI base graph needs minimum degree 2");

  const auto edges = base.sorted_edges();
  std::vector<std::uint8_t> twisted(edges.size(), 0);
  for (auto [u, v] : twist_set) {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
      throw Error(ErrorCode::kInvalidArgument,
                  "twist edge " + std::to_string(u) + "-" + std::to_string(v) + " not in base graph");
    twisted[it - edges.begin()] ^= 1;
  }

  // Incident base edges per vertex, in sorted-edge order.
  std::vector<std::vector<std::size_t>> incident(nb);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }

  std::size_t total = 0;
  std::vector<Vertex> offset(nb);
  for (Vertex v = 0; v < nb; ++v) {
    offset[v] = static_cast<Vertex>(total);
    std::size_t d = incident[v].size();
    total += 2 * d + (std::size_t{1} << (d - 1));
  }

  CfiGraph out;
  out.graph = Graph(total);
  Graph& g = out.graph;
  for (Vertex v = 0; v < nb; ++v) {
    const std::size_t d = incident[v].size();
    Graph gadget = cfi_gadget(d);
    CfiGadget info;
    info.base_vertex = v;
    info.base_edges = incident[v];
    for (std::size_t i = 0; i < d; ++i)
      info.externals.emplace_back(offset[v] + 2 * i, offset[v] + 2 * i + 1);
    for (std::size_t k = 2 * d; k < gadget.num_vertices(); ++k)
      info.internal.push_back(static_cast<Vertex>(offset[v] + k));
    for (Vertex u = 0; u < gadget.num_vertices(); ++u)
      g.set_label(offset[v] + u, "v" + std::to_string(v) + "." + gadget.label(u));
    for (auto [x, y] : gadget.sorted_edges()) g.add_edge(offset[v] + x, offset[v] + y);
    out.gadgets.push_back(std::move(info));
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [x, y] = edges[e];
    std::size_t i = std::find(incident[x].begin(), incident[x].end(), e) - incident[x].begin();
    std::size_t j = std::find(incident[y].begin(), incident[y].end(), e) - incident[y].begin();
    auto [ax, bx] = out.gadgets[x].externals[i];
    auto [ay, by] = out.gadgets[y].externals[j];
    if (twisted[e]) {
      g.add_edge(ax, by);
      g.add_edge(bx, ay);
    } else {
      g.add_edge(ax, ay);
      g.add_edge(bx, by);
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (twisted[e]) out.twist_set.push_back(edges[e]);
  return out;
}

}  // namespace grpwl
