#include "vertexfreq/generators.hpp"

#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "vertexfreq/errors.hpp"

namespace vertexfreq {

namespace {

void require_at_least(const char* name, std::size_t value, std::size_t minimum) {
  if (value < minimum) {
    throw InvalidArgument(std::string(name) + " must be at least " + std::to_string(minimum) +
                          ", got " + std::to_string(value));
  }
}

VertexSet range_set(std::size_t universe, std::size_t first, std::size_t count) {
  std::vector<Vertex> members(count);
  std::iota(members.begin(), members.end(), first);
  return VertexSet(universe, std::move(members));
}

}  // namespace

Graph path(std::size_t n) {
  require_at_least("path length", n, 1);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  require_at_least("cycle length", n, 3);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  require_at_least("complete graph order", n, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  require_at_least("bipartite side", m, 1);
  require_at_least("bipartite side", n, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = m; v < m + n; ++v) edges.emplace_back(u, v);
  }
  return Graph(m + n, edges);
}

Graph star(std::size_t n) {
  require_at_least("star leaves", n, 1);
  return complete_bipartite(n, 1);
}

Graph generalized_ladder(std::size_t rungs, std::size_t width) {
  require_at_least("ladder rungs", rungs, 2);
  require_at_least("ladder rung width", width, 2);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < rungs; ++j) {
    for (std::size_t i = 0; i + 1 < width; ++i) edges.emplace_back(j * width + i, j * width + i + 1);
  }
  for (std::size_t j = 0; j + 1 < rungs; ++j) {
    edges.emplace_back(j * width, (j + 1) * width);
    edges.emplace_back(j * width + width - 1, (j + 1) * width + width - 1);
  }
  return Graph(rungs * width, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  require_at_least("grid rows", rows, 1);
  require_at_least("grid cols", cols, 1);
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require_at_least("tree order", n, 1);
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge(0, 1)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--remaining[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

Graph duplicated_middle_path(std::size_t k, std::size_t m) {
  require_at_least("half length", k, 1);
  require_at_least("middle copies", m, 1);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < k; ++v) {
    edges.emplace_back(v, v + 1);
    edges.emplace_back(k + v, k + v + 1);
  }
  for (std::size_t c = 0; c < m; ++c) {
    edges.emplace_back(k - 1, 2 * k + c);
    edges.emplace_back(2 * k + c, k);
  }
  return Graph(2 * k + m, edges);
}

Graph complete_bipartite_between(std::size_t vertex_count, const VertexSet& s, const VertexSet& t) {
  std::vector<Edge> edges;
  for (Vertex a : s) {
    for (Vertex b : t) edges.emplace_back(a, b);
  }
  return Graph(vertex_count, edges);
}

BarrenLayout::VertexClass BarrenLayout::class_of(Vertex x) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].contains(x)) return static_cast<VertexClass>(c + 1);
  }
  throw InvalidArgument("vertex " + std::to_string(x) + " is not part of the barren graph");
}

BarrenGraph barren(std::size_t n) {
  require_at_least("barren parameter N", n, 3);
  const std::size_t total = n + 7;
  BarrenLayout layout;
  layout.n = n;
  layout.classes = {range_set(total, 0, n),     range_set(total, n, 1),
                    range_set(total, n + 1, 2), range_set(total, n + 3, 2),
                    range_set(total, n + 5, 1), range_set(total, n + 6, 1)};

  const auto block = [&](int a, int b) {
    return complete_bipartite_between(total, layout.v(a), layout.v(b));
  };
  Graph g = block(1, 2);
  g = graph_sum(g, block(1, 3));
  g = graph_sum(g, block(1, 4));
  g = graph_sum(g, block(3, 5));
  g = graph_sum(g, block(4, 6));
  return {std::move(g), std::move(layout)};
}

}  // namespace vertexfreq
