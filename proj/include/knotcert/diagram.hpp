#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kc {

// Half-edges double as darts. Edge e owns half-edges 2e (tail end, dart running
// forward along e) and 2e+1 (head end, dart running backward). A dart's face is
// the one on its left.
struct Crossing {
  std::array<int, 4> slot{};  // ccw; slot[0] = incoming under-strand
};

// nesting record of one connected piece: `own` is a dart of the piece facing
// its host region; `host` is a dart of the enclosing piece bounding that
// region, or -1 for the unbounded region
struct Nest {
  int own = -1;
  int host = -1;
  bool operator==(const Nest&) const = default;
};

class Diagram {
 public:
  std::vector<Crossing> crossings;
  std::vector<int> at_crossing;  // per half-edge; -1 for crossingless loops
  std::vector<int> at_slot;
  std::vector<Nest> nest;        // one per connected piece

  int num_edges() const { return static_cast<int>(at_crossing.size() / 2); }
  int num_crossings() const { return static_cast<int>(crossings.size()); }
  bool empty() const { return at_crossing.empty(); }
  bool is_loop(int e) const { return at_crossing[2 * e] < 0; }
  int sign(int c) const { return (crossings[c].slot[1] & 1) ? -1 : 1; }
  int head(int e) const { return at_crossing[2 * e + 1]; }
  int tail(int e) const { return at_crossing[2 * e]; }
  int head_slot(int e) const { return at_slot[2 * e + 1]; }
  int tail_slot(int e) const { return at_slot[2 * e]; }
  int next_dart(int d) const;
  // successor edge along the link component / along the Seifert circle
  int strand_next(int e) const;
  int seifert_next(int e) const;
  int writhe() const;
  void validate() const;
};

struct RegionMap {
  std::vector<int> face_of_dart;
  int faces = 0;
  std::vector<int> region_of_face;
  int regions = 0;
  int outer = -1;
  int region_of_dart(int d) const { return region_of_face[face_of_dart[d]]; }
};

RegionMap region_map(const Diagram& d);
std::vector<int> piece_of_edge(const Diagram& d, int* count = nullptr);

// flood fill over regions; edges and Seifert chords flagged as barriers block
std::vector<char> reach_regions(const Diagram& d, const RegionMap& rm, int start,
                                 const std::vector<char>& edge_barrier,
                                 const std::vector<char>& chord_barrier);

struct Components {
  std::vector<int> of_edge;
  int count = 0;
};
Components components(const Diagram& d);

enum class Orientation { clockwise, counterclockwise };

struct SeifertPicture {
  std::vector<std::vector<int>> circles;  // edges in travel order
  std::vector<int> circle_of_edge;
  std::vector<Orientation> orientation;
  std::vector<int> parent;                // nesting forest relative to the outer face; -1 = root
  std::vector<std::array<int, 2>> crossing_circles;
  int size() const { return static_cast<int>(circles.size()); }
};

SeifertPicture seifert_smooth(const Diagram& d);
Orientation circle_orientation(const SeifertPicture& p, int circle);
std::vector<int> innermost_circles(const Diagram& d);
// regions on the left side of a circle (barrier = the circle's edges)
std::vector<char> circle_left_side(const Diagram& d, const RegionMap& rm, const SeifertPicture& p, int circle);

struct DiagramStats {
  int s = 0;
  int writhe = 0;
  int crossing_count = 0;
  int component_count = 0;
};
DiagramStats diagram_stats(const Diagram& d);

// per-crossing surgery state relative to a root diagram
enum : std::uint8_t { kOrig = 0, kFlip = 1, kSmooth = 2 };

Diagram smooth_crossing(const Diagram& d, int c);
Diagram flip_crossing(const Diagram& d, int c);
// all surgeries at once; crossing ids of the survivors keep their relative order
Diagram apply_surgeries(const Diagram& d, const std::vector<std::uint8_t>& state);
Diagram delete_component(const Diagram& d, int component);
Diagram delete_edges(const Diagram& d, const std::vector<char>& doomed);
Diagram double_crossing(const Diagram& d, int c);
Diagram connected_sum(const Diagram& d1, const Diagram& d2, int e1, int e2);
Diagram mirror(const Diagram& d);
Diagram reverse(const Diagram& d);
Diagram disjoint_union(const Diagram& a, const Diagram& b);
// edges having a dart in the unbounded region
std::vector<int> outer_edges(const Diagram& d);

enum class PathMode { descending, ascending };

struct TravelState {
  struct Visit {
    int crossing;
    bool over;  // met on the over-strand
  };
  std::vector<Visit> visits;
  std::vector<int> first_over;  // per crossing: 1 over first, 0 under first, -1 unvisited
};

struct MonotonePath {
  TravelState path;
  int terminal = -1;  // violating crossing, or -1 when closed
  bool closed() const { return terminal < 0; }
};

MonotonePath monotone_path(const Diagram& d, int base_edge, PathMode mode);
// one base edge per component, in travel order
TravelState natural_travel(const Diagram& d, const std::vector<int>& base_edges);

std::string canonical_code(const Diagram& d);
nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace kc
