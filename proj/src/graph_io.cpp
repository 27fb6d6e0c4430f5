#include "tetrasym/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tetrasym {

GraphFormat parse_graph_format(std::string_view s) {
  if (s == "edges") return GraphFormat::edges;
  if (s == "dot") return GraphFormat::dot;
  if (s == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + std::string(s) + "'");
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
  out << "graph " << name << " {\n";
  const auto& labels = g.labels();
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=" << nlohmann::json(labels[v]).dump() << ']';
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  Graph g = Graph::from_edges(j.at("n").get<std::size_t>(), edges);
  if (j.contains("labels") && !j["labels"].empty()) {
    g.set_labels(j["labels"].get<std::vector<std::string>>());
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edges:
      write_edge_list(out, g);
      return;
    case GraphFormat::dot:
      write_dot(out, g);
      return;
    case GraphFormat::json:
      out << graph_to_json(g).dump() << '\n';
      return;
  }
}

std::string format_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

Graph read_edge_list(std::istream& in, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t max_vertex = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Vertex u, v;
    if (!(fields >> u >> v)) throw std::invalid_argument("bad edge line '" + line + "'");
    edges.emplace_back(u, v);
    max_vertex = std::max<std::size_t>(max_vertex, std::max(u, v) + 1);
  }
  if (n == 0) n = max_vertex;
  return Graph::from_edges(n, edges);
}

}  // namespace tetrasym
