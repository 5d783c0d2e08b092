#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotcert/braid.hpp"
#include "knotcert/diagram.hpp"

namespace kc {

struct Incidence {
  int circle = 0;
  int arc = 0;
  bool endpoint = false;
  bool side_change = true;
  bool co_orient = false;  // circle runs to the left of the arc direction
  bool operator==(const Incidence&) const = default;
};

// one side of a circle segment; segment k runs from incidence k to k+1
struct SidePos {
  int circle = 0;
  int segment = 0;
  bool left = true;
  bool operator==(const SidePos&) const = default;
};

// one record per connected piece; no host = the unbounded region
struct TemplateNest {
  SidePos own;
  std::optional<SidePos> host;
  bool operator==(const TemplateNest&) const = default;
};

struct Template {
  std::vector<std::vector<int>> circles;  // incidence ids, cyclic along the circle
  std::vector<std::vector<int>> arcs;     // incidence ids along the arc
  std::vector<Incidence> incidences;
  std::vector<TemplateNest> nest;         // nest[0] is the outer face designation

  int arc_size(int a) const { return static_cast<int>(arcs[a].size()); }
  int segment_count(int c) const { return std::max<int>(1, circles[c].size()); }
  bool operator==(const Template&) const = default;
};

using BraidPlacement = std::map<int, BraidWord>;

struct BoxIndex {
  std::vector<std::pair<int, int>> letter_of_crossing;  // (arc, letter position)
  std::vector<std::vector<int>> segments_of_edge;       // global segment ids on the edge
  std::vector<char> outside;                            // edge reaches outside every box
  std::vector<int> segment_circle;                      // global segment id -> circle
  std::vector<int> segment_offset;                      // circle -> first global segment id
  int crossing_of(int arc, int pos) const;
};

std::vector<std::string> validate(const Template& t, const BraidPlacement& pi);
bool is_knitted(const Template& t);

std::pair<Template, BraidPlacement> alexander_closure(const BraidWord& w);
std::pair<Diagram, BoxIndex> build_diagram(const Template& t, const BraidPlacement& pi);
Diagram closure_diagram(const BraidWord& w);

enum class Surgery { smooth, flip };
struct LetterSurgery {
  int arc = 0;
  int pos = 0;
  Surgery op = Surgery::smooth;
};

// components are numbered as in components(build_diagram(T, π after surgeries))
std::pair<Template, BraidPlacement> induce(const Template& t, const BraidPlacement& pi,
                                           const std::vector<LetterSurgery>& surgeries,
                                           const std::vector<int>& deletions);

std::pair<Template, BraidPlacement> mirror(const Template& t, const BraidPlacement& pi);
std::pair<Template, BraidPlacement> reverse(const Template& t, const BraidPlacement& pi);
std::pair<Template, BraidPlacement> double_letter(const Template& t, const BraidPlacement& pi, int arc, int pos);
// splices segment (circle c1, segment k1) of the first template with (c2, k2) of the second;
// both must border the outer region on the same side
std::pair<Template, BraidPlacement> connected_sum(const Template& t1, const BraidPlacement& p1, SidePos s1,
                                                  const Template& t2, const BraidPlacement& p2, SidePos s2);
// sides of template segments bordering the outer region
std::vector<SidePos> outer_sides(const Template& t, const BraidPlacement& pi);

nlohmann::json template_to_json(const Template& t);
Template template_from_json(const nlohmann::json& j);
nlohmann::json placement_to_json(const BraidPlacement& pi);
BraidPlacement placement_from_json(const nlohmann::json& j, const Template& t);

}  // namespace kc
