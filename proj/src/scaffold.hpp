#pragma once

#include <utility>
#include <vector>

#include "knotcert/diagram.hpp"

namespace kc {

// A planar map with crossing vertices and ghost (invisible) vertices/edges.
// Ghost vertices route strands via `pass`; ghost edges only glue faces.
// reduce() erases the ghosts and returns a Diagram with nesting records.
struct Scaffold {
  struct Vert {
    bool crossing = false;
    std::vector<int> rot;  // ccw half-edges
    int tag = -1;
  };
  std::vector<Vert> verts;
  std::vector<char> strand;  // per edge
  std::vector<int> etag;     // per edge
  std::vector<int> vof, idx; // per half-edge; vof = -1 for vertex-free loops
  std::vector<int> pass;     // per half-edge arriving at a ghost vertex: leaving half-edge
  std::vector<std::pair<int, int>> nest;  // (dart, host dart or -1)

  int add_vertex(bool crossing, int degree, int tag = -1);
  // tail/head = (vertex, rotation index); vertex -1 only for a loop
  int add_edge(bool is_strand, int tag, int tv, int ti, int hv, int hi);
  void attach(int h, int v, int i);
  int num_edges() const { return static_cast<int>(strand.size()); }
  int next_dart(int d) const;
};

struct Reduced {
  Diagram diagram;
  std::vector<int> crossing_tag;            // per crossing: tag of its scaffold vertex
  std::vector<int> crossing_of_vertex;      // per scaffold vertex
  std::vector<std::vector<int>> edge_tags;  // per diagram edge: tags of its scaffold edges in order
  std::vector<int> edge_of_sedge;           // per scaffold edge, -1 if ghost
  std::vector<int> region_of_sface;         // scaffold face -> diagram region
  std::vector<int> sface_of_dart;           // scaffold dart -> scaffold face
};

Reduced reduce(const Scaffold& s);

// turn the doomed strand edges into ghosts; crossings losing a strand become
// ghost vertices passing the survivor straight through
void ghost_strands(Scaffold& s, const std::vector<char>& doomed);

// vertices = crossings (tag = crossing id), edges tagged with their ids
Scaffold to_scaffold(const Diagram& d);

// surgeries on a crossing vertex whose rotation still equals its slot list
void smooth_vertex(Scaffold& s, int v);
void flip_vertex(Scaffold& s, int v);

}  // namespace kc
