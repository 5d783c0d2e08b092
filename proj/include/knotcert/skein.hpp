#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"

namespace kc {

enum class Strategy { descending, x_coherent, y_coherent };

struct PhaseContext {
  const Diagram& root;
  const std::vector<std::uint8_t>& state;
  const std::vector<int>& edge_phase;  // -1 = not yet travelled
  int phase;
};

// returns an untravelled edge to start the next phase from
using BaseChooser = std::function<int(const PhaseContext&)>;

struct LeafInfo {
  int t = 0, t_minus = 0, t_plus = 0;
  int omega = 0;  // writhe of the leaf diagram
  int gamma = 0;  // components = phases
  int self_crossings = 0;
  std::vector<int> phase_bases;
  std::vector<std::uint8_t> state;
};

struct TreeNode {
  int parent = -1;
  int crossing = -1;  // crossing changed on the way from the parent
  std::uint8_t op = kOrig;
  int children[2] = {-1, -1};
  int leaf = -1;
};

struct ResolutionTree {
  Diagram root;
  int root_writhe = 0;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<LeafInfo> leaves;
};

struct TreeOptions {
  Strategy strategy = Strategy::descending;
  BaseChooser chooser;      // empty: smallest untravelled edge, or seeded random when seed != 0
  std::uint64_t seed = 0;
  std::size_t leaf_cap = 1u << 22;
};

ResolutionTree build_tree(const Diagram& d, const TreeOptions& opt = {});
Laurent2 evaluate_tree(const ResolutionTree& t);
Laurent2 leaf_term(const LeafInfo& leaf, int root_writhe);
// same sum without storing the tree
Laurent2 skein_sum(const Diagram& d, const TreeOptions& opt = {});
// the diagram a leaf stands for
Diagram leaf_diagram(const ResolutionTree& t, int leaf);

Laurent2 homfly(const Diagram& d);
void clear_homfly_cache();

std::string tree_dot(const ResolutionTree& t);

Laurent1 jones_oracle(const Diagram& d, int cap = 12);

}  // namespace kc
