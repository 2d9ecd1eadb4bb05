#pragma once

#include <string>
#include <variant>

#include "mbt/graph.hpp"

namespace mbt {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

using AnyGraph = std::variant<Digraph, UGraph>;

// Edge-list format: header "mbt <dir|undir> <n> <m>" followed by m lines
// "u v" with 0-based ids. PACE-style headers ("p tw <n> <m>", 1-based)
// are accepted for undirected inputs.
AnyGraph read_graph(const std::string& text);
std::string write_graph(const Digraph& g);
std::string write_graph(const UGraph& g);

Digraph read_digraph(const std::string& text);
UGraph read_ugraph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mbt
