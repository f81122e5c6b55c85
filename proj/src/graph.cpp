#include "vertexfreq/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>

#include "vertexfreq/errors.hpp"

namespace vertexfreq {

namespace detail {
std::string join_indices(const std::vector<std::size_t>& indices) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out << ',';
    out << indices[i];
  }
  out << ']';
  return out.str();
}
}  // namespace detail

namespace {

std::string edge_name(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : n_(vertex_count), adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) {
      throw InvalidArgument("edge " + edge_name(e) + " has an endpoint outside [0, " +
                            std::to_string(n_) + ")");
    }
    edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("vertex set contains duplicates");
  }
  if (!members_.empty() && members_.back() >= universe_) {
    throw InvalidArgument("vertex " + std::to_string(members_.back()) +
                          " outside the vertex set universe of size " + std::to_string(universe_));
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

Eigen::MatrixXd degree_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    d(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) =
        static_cast<double>(degree(g, v));
  }
  return d;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, v) = -1.0;
    l(v, u) = -1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return l;
}

std::complex<double> laplacian_apply(const Graph& g, const Signal& f, Vertex x) {
  if (f.size() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), f.size());
  Complex sum = 0.0;
  for (Vertex y : g.neighbors(x)) sum += f[x] - f[y];
  return sum;
}

double dirichlet_energy(const Graph& g, const Signal& f) {
  if (f.size() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), f.size());
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += std::norm(f[e.u] - f[e.v]);
  return sum;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex x) {
  g.neighbors(x);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  dist[x] = 0;
  std::queue<Vertex> frontier;
  frontier.push(x);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex x, Vertex y) {
  g.neighbors(y);  // range check
  return distances_from(g, x)[y];
}

VertexSet ball(const Graph& g, Vertex x, std::size_t r) {
  g.neighbors(x);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> members{x};
  dist[x] = 0;
  std::queue<Vertex> frontier;
  frontier.push(x);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    if (dist[u] == r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
        frontier.push(w);
      }
    }
  }
  return VertexSet(g.vertex_count(), std::move(members));
}

std::size_t set_distance(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) throw InvalidArgument("set_distance requires nonempty sets");
  if (s.universe() != g.vertex_count() || t.universe() != g.vertex_count()) {
    throw DimensionMismatch(g.vertex_count(), s.universe() != g.vertex_count() ? s.universe()
                                                                               : t.universe());
  }
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::queue<Vertex> frontier;
  for (Vertex v : s) {
    dist[v] = 0;
    frontier.push(v);
  }
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    if (t.contains(u)) return dist[u];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return kUnreachable;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members{start};
    seen[start] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    components.emplace_back(g.vertex_count(), std::move(members));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph graph_sum(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw DimensionMismatch(a.vertex_count(), b.vertex_count());
  }
  std::vector<Edge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Graph(a.vertex_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(shift + b.vertex_count(), edges);
}

Graph add_edges(const Graph& g, std::span<const Edge> new_edges) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), new_edges.begin(), new_edges.end());
  return Graph(g.vertex_count(), edges);
}

Graph subdivide_edge(const Graph& g, Edge e) {
  if (e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) {
    throw InvalidArgument("cannot subdivide absent edge " + edge_name(e));
  }
  const Vertex w = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u, w);
  edges.emplace_back(w, e.v);
  return Graph(g.vertex_count() + 1, edges);
}

Graph contract_edge(const Graph& g, Edge e) {
  if (e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) {
    throw InvalidArgument("cannot contract absent edge " + edge_name(e));
  }
  const auto relabel = [&](Vertex x) -> Vertex {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& f : g.edges()) {
    const Vertex a = relabel(f.u);
    const Vertex b = relabel(f.v);
    if (a != b) edges.emplace_back(a, b);
  }
  return Graph(g.vertex_count() - 1, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), s.universe());
  std::vector<Edge> edges;
  const auto& members = s.members();
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (Vertex w : g.neighbors(members[j])) {
      const auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it != members.end() && *it == w) {
        const auto k = static_cast<std::size_t>(it - members.begin());
        if (j < k) edges.emplace_back(j, k);
      }
    }
  }
  return Graph(members.size(), edges);
}

}  // namespace vertexfreq
