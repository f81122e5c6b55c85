#include "vertexfreq/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vertexfreq/errors.hpp"

namespace vertexfreq {

namespace {

// Strips comments and splits the stream into whitespace-separated tokens,
// remembering the line each token came from for diagnostics.
struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) tokens.push_back({field, line_no});
  }
  return tokens;
}

std::size_t parse_index(const Token& token) {
  std::size_t consumed = 0;
  unsigned long long value = 0;
  try {
    if (token.text.empty() || token.text[0] == '-' || token.text[0] == '+') throw std::invalid_argument("");
    value = std::stoull(token.text, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.text.size() || consumed == 0) {
    throw ParseError("line " + std::to_string(token.line) + ": expected a non-negative integer, got '" +
                     token.text + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "edges") return GraphFormat::kEdgeList;
  if (name == "json") return GraphFormat::kJson;
  if (name == "dot") return GraphFormat::kDot;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

Graph read_edge_list(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.empty()) throw ParseError("edge list is empty; expected the vertex count first");
  const std::size_t n = parse_index(tokens[0]);
  if ((tokens.size() - 1) % 2 != 0) {
    throw ParseError("line " + std::to_string(tokens.back().line) + ": dangling edge endpoint");
  }
  std::vector<Edge> edges;
  edges.reserve((tokens.size() - 1) / 2);
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const std::size_t u = parse_index(tokens[i]);
    const std::size_t v = parse_index(tokens[i + 1]);
    if (u >= n || v >= n || u == v) {
      throw ParseError("line " + std::to_string(tokens[i].line) + ": invalid edge " +
                       tokens[i].text + " " + tokens[i + 1].text + " for " + std::to_string(n) +
                       " vertices");
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("graph JSON edges must be [u, v] pairs");
      const auto u = pair[0].get<std::size_t>();
      const auto v = pair[1].get<std::size_t>();
      if (u >= n || v >= n || u == v) {
        throw ParseError("graph JSON: invalid edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
      }
      edges.emplace_back(u, v);
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).empty()) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph read_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return read_edge_list(in);
    case GraphFormat::kJson:
      return read_graph_json(in);
    case GraphFormat::kDot:
      break;
  }
  throw InvalidArgument("DOT is an export-only format");
}

GraphFormat format_from_path(std::string_view path) {
  constexpr std::string_view kJsonExt = ".json";
  if (path.size() >= kJsonExt.size() && path.substr(path.size() - kJsonExt.size()) == kJsonExt) {
    return GraphFormat::kJson;
  }
  return GraphFormat::kEdgeList;
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      write_edge_list(out, g);
      return;
    case GraphFormat::kJson:
      out << graph_to_json(g) << '\n';
      return;
    case GraphFormat::kDot:
      out << graph_to_dot(g);
      return;
  }
}

}  // namespace vertexfreq
