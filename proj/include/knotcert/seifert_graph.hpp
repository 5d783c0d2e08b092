#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/template.hpp"

namespace kc {

struct SeifertGraph {
  struct Edge {
    int u = 0, v = 0;
    int sign = 1;
    int crossing = 0;
  };
  int vertices = 0;
  std::vector<Edge> edges;
};

struct Block {
  std::vector<int> vertices;
  std::vector<int> edges;
};

SeifertGraph seifert_graph(const Diagram& d);
// biconnected pieces; bridges give two-vertex blocks, isolated vertices singleton blocks
std::vector<Block> blocks(const SeifertGraph& g);
bool is_bipartite(const SeifertGraph& g);

struct DiagramClass {
  bool homogeneous = false;
  bool positive = false;
  bool negative = false;
  bool alternating = false;
  bool locally_twisted = false;
  bool lth = false;
};

DiagramClass classify(const Diagram& d,
                      const std::optional<std::pair<Template, BraidPlacement>>& tp = std::nullopt);
bool is_alternating(const Diagram& d);
bool is_homogeneous(const Diagram& d);

std::string seifert_graph_dot(const SeifertGraph& g);

}  // namespace kc
