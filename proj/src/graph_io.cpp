#include "mbt/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace mbt {

namespace {

struct LineReader {
  std::istringstream in;
  int lineno = 0;
  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-empty, non-comment line; PACE comments start with 'c'.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      lineno++;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == 'c' && (start + 1 == line.size() || isspace(line[start + 1])))
        continue;
      out = line;
      return true;
    }
    return false;
  }
};

}  // namespace

AnyGraph read_graph(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.lineno, "missing header");
  std::istringstream head(line);
  std::string tag;
  head >> tag;

  bool pace = false, directed = false;
  int n = -1;
  long long m = -1;
  if (tag == "mbt") {
    std::string kind;
    if (!(head >> kind >> n >> m)) throw ParseError(reader.lineno, "malformed header");
    if (kind == "dir")
      directed = true;
    else if (kind == "undir")
      directed = false;
    else
      throw ParseError(reader.lineno, "unknown graph kind '" + kind + "'");
  } else if (tag == "p") {
    std::string prob;
    if (!(head >> prob >> n >> m)) throw ParseError(reader.lineno, "malformed PACE header");
    pace = true;
  } else {
    throw ParseError(reader.lineno, "unknown header tag '" + tag + "'");
  }
  if (n < 0 || m < 0) throw ParseError(reader.lineno, "negative size in header");

  std::vector<std::pair<int, int>> pairs;
  for (long long i = 0; i < m; i++) {
    if (!reader.next(line)) throw ParseError(reader.lineno, "unexpected end of file");
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(reader.lineno, "malformed edge line");
    if (pace) {
      u--;
      v--;
    }
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(reader.lineno, "vertex out of range");
    if (u == v) throw ParseError(reader.lineno, "self-loop");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    if (directed) return Digraph(n, pairs);
    std::vector<Edge> edges;
    for (auto& [u, v] : pairs) edges.push_back(make_edge(u, v));
    return UGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.lineno, e.what());
  }
}

Digraph read_digraph(const std::string& text) {
  auto g = read_graph(text);
  if (!std::holds_alternative<Digraph>(g))
    throw std::invalid_argument("expected a directed graph");
  return std::get<Digraph>(g);
}

UGraph read_ugraph(const std::string& text) {
  auto g = read_graph(text);
  if (!std::holds_alternative<UGraph>(g))
    throw std::invalid_argument("expected an undirected graph");
  return std::get<UGraph>(g);
}

std::string write_graph(const Digraph& g) {
  std::ostringstream out;
  out << "mbt dir " << g.n() << " " << g.m() << "\n";
  for (auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_graph(const UGraph& g) {
  std::ostringstream out;
  out << "mbt undir " << g.n() << " " << g.m() << "\n";
  for (auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace mbt
