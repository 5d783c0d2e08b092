#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/skein.hpp"
#include "knotcert/template.hpp"

namespace kc {

struct Floor {
  int circle = -1;
  int level = 0;
  int parent = -1;             // floor it grew from
  std::vector<int> edges;      // along the circle, first edge holds the start point
  std::vector<int> crossings;  // crossings passed, in order (head of edges[k])
};

struct Castle {
  Diagram diagram;
  SeifertPicture picture;
  int circle = -1;
  int base_edge = -1;
  std::vector<Floor> floors;
  std::vector<int> floor_of_circle;            // -1 when the circle has no floor
  std::vector<int> ladders;                    // crossings lying on two floors
  std::vector<std::pair<int, int>> ladder_floors;
};

struct Trap {
  int f1 = -1, f2 = -1;  // f1 has the lower level
  int s1 = -1, s2 = -1;  // adjacent ladders, in order along f1
  int inner = -1;        // a floor inside the disk
  std::vector<int> interior;
};

Castle build_castle(const Diagram& d, int circle, int base_edge);
std::vector<Trap> find_traps(const Castle& k);
// unique level-0 floor, one floor per circle, merged floor graph is a tree with levels = depth
std::vector<std::string> castle_invariant_errors(const Castle& k);
std::string castle_dot(const Castle& k, const std::vector<Trap>& traps = {});

struct AppropriatePair {
  int circle = -1;
  int edge = -1;
  int iterations = 0;
  bool fallback = false;  // some derivation step found no base point meeting the floor condition
};

// `outside`: per edge, whether it reaches outside every braid box
AppropriatePair find_appropriate_pair(const Diagram& d, const std::vector<char>& outside,
                                      std::optional<std::pair<int, int>> start = std::nullopt);

enum class Flavor { X, Y };

struct SpecialTree {
  ResolutionTree tree;
  int fallbacks = 0;
  int chooser_calls = 0;
};

SpecialTree build_special_tree(const Template& t, const BraidPlacement& pi, Flavor flavor);
Laurent2 special_homfly(const Template& t, const BraidPlacement& pi, Flavor flavor);

}  // namespace kc
