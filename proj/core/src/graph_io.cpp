#include "cpg/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cpg/error.hpp"

namespace cpg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t max_id = 0;
  bool any = false;
  bool first_content = true;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (first_content && tokens[0] == "n") {
      first_content = false;
      if (tokens.size() != 2) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": header must be 'n <count>'");
      }
      declared = parse_index(tokens[1], line_no);
      continue;
    }
    first_content = false;
    if (tokens.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const std::size_t u = parse_index(tokens[0], line_no);
    const std::size_t v = parse_index(tokens[1], line_no);
    if (u == v) throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop");
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex id out of range");
    }
    max_id = std::max({max_id, u, v});
    any = true;
    edges.emplace_back(u, v);
  }
  const std::size_t n = declared ? *declared : (any ? max_id + 1 : 0);
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

namespace {

std::string dot_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const CoprimeGraph& g, const PlanarEmbedding* embedding) {
  std::ostringstream out;
  const auto labels = vertex_labels(g);
  out << "graph " << dot_string("P(" + g.source + ")") << " {\n";
  out << "  // |G| = " << g.group_order << ", " << g.vertex_count() << " vertices, "
      << g.graph.edge_count() << " edges\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << dot_string(labels[v]) << "];\n";
  }
  for (const auto& [u, v] : g.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  if (embedding != nullptr) {
    out << "  // planar rotation system (" << embedding->faces << " faces)\n";
    for (Vertex v = 0; v < embedding->rotation.size(); ++v) {
      out << "  // " << v << ":";
      for (Vertex w : embedding->rotation[v]) out << ' ' << w;
      out << '\n';
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cpg
