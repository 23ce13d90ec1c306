#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "domsd/graph.hpp"

namespace domsd {

// Edge-list text format: first data line "n m", then m lines "a b" with
// 0-based ids. Blank lines and lines starting with '#' are ignored.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0, m = 0, edges_read = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first[0] == '#') continue;
    ls.clear();
    ls.str(line);
    if (!have_header) {
      std::string extra;
      if (!(ls >> n >> m) || (ls >> extra))
        throw ParseError("line " + std::to_string(line_no) + ": expected header \"n m\"");
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative count in header");
      g = Graph(n);
      have_header = true;
      continue;
    }
    if (edges_read >= m)
      throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
    int a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected edge \"a b\"");
    try {
      g.add_edge(a, b);
    } catch (const PreconditionError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    ++edges_read;
  }
  if (!have_header) throw ParseError("missing header line \"n m\"");
  if (edges_read != m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                     std::to_string(edges_read));
  return g;
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

inline std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// Graphviz export. Vertex labels default to ids; the optional map overrides
// them (status labels, gadget roles, ...).
inline void write_dot(std::ostream& out, const Graph& g,
                      const std::map<VertexId, std::string>* labels = nullptr) {
  out << "graph g {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (labels != nullptr) {
      auto it = labels->find(v);
      if (it != labels->end()) {
        out << " [label=\"" << it->second << "\"]";
      }
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
}

}  // namespace domsd
