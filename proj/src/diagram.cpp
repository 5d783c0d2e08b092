#include "knotcert/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include "knotcert/errors.hpp"
#include "scaffold.hpp"
#include "util.hpp"

namespace kc {

namespace {

// slot that a strand entering at `in` leaves by after smoothing
int seifert_out_slot(int sign, int in) {
  if (sign > 0) return in == 0 ? 1 : 2;
  return in == 0 ? 3 : 2;
}

// darts whose faces are the two corners between the Seifert arcs
std::array<int, 2> middle_darts(const Diagram& d, int c) {
  const auto& s = d.crossings[c].slot;
  return d.sign(c) > 0 ? std::array<int, 2>{s[1], s[3]} : std::array<int, 2>{s[0], s[2]};
}

// the incoming over-strand becomes slot 0
void flip_slots(Diagram& d, int c) {
  auto& s = d.crossings[c].slot;
  if (s[1] & 1)
    s = {s[1], s[2], s[3], s[0]};
  else
    s = {s[3], s[0], s[1], s[2]};
  for (int j = 0; j < 4; ++j) d.at_slot[s[j]] = j;
}

void check_crossing(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw InputError("unknown crossing " + std::to_string(c));
}

}  // namespace

int Diagram::next_dart(int d) const {
  int h = d ^ 1;
  int c = at_crossing[h];
  if (c < 0) return d;
  return crossings[c].slot[(at_slot[h] + 3) & 3];
}

int Diagram::strand_next(int e) const {
  int c = head(e);
  if (c < 0) return e;
  return crossings[c].slot[(head_slot(e) + 2) & 3] >> 1;
}

int Diagram::seifert_next(int e) const {
  int c = head(e);
  if (c < 0) return e;
  return crossings[c].slot[seifert_out_slot(sign(c), head_slot(e))] >> 1;
}

int Diagram::writhe() const {
  int w = 0;
  for (int c = 0; c < num_crossings(); ++c) w += sign(c);
  return w;
}

void Diagram::validate() const {
  const int H = static_cast<int>(at_crossing.size());
  if (H % 2 || at_slot.size() != at_crossing.size()) throw InvariantError("diagram: half-edge tables malformed");
  for (int c = 0; c < num_crossings(); ++c) {
    const auto& s = crossings[c].slot;
    for (int j = 0; j < 4; ++j) {
      int h = s[j];
      if (h < 0 || h >= H || at_crossing[h] != c || at_slot[h] != j)
        throw InvariantError("diagram: slot table inconsistent at crossing " + std::to_string(c));
    }
    if (!(s[0] & 1) || (s[2] & 1) || ((s[1] ^ s[3]) & 1) == 0)
      throw InvariantError("diagram: strands not transversal at crossing " + std::to_string(c));
  }
  for (int h = 0; h < H; ++h) {
    int c = at_crossing[h];
    if (c < 0) {
      if (at_crossing[h ^ 1] >= 0) throw InvariantError("diagram: half-attached edge");
    } else if (c >= num_crossings() || crossings[c].slot[at_slot[h]] != h) {
      throw InvariantError("diagram: half-edge points to the wrong slot");
    }
  }
  int np = 0;
  auto piece = piece_of_edge(*this, &np);
  std::vector<int> V(np), E(np), F(np);
  for (int c = 0; c < num_crossings(); ++c) ++V[piece[crossings[c].slot[0] >> 1]];
  for (int e = 0; e < num_edges(); ++e) {
    ++E[piece[e]];
    if (is_loop(e)) ++V[piece[e]];
  }
  std::vector<char> seen(H, 0);
  for (int d = 0; d < H; ++d) {
    if (seen[d]) continue;
    ++F[piece[d >> 1]];
    int x = d;
    int guard = 0;
    do {
      seen[x] = 1;
      x = next_dart(x);
      if (++guard > H) throw InvariantError("diagram: face walk does not close");
    } while (x != d);
  }
  for (int p = 0; p < np; ++p)
    if (V[p] - E[p] + F[p] != 2) throw InvariantError("diagram: Euler relation fails on a piece");
  if (static_cast<int>(nest.size()) != np) throw InvariantError("diagram: one nesting record per piece required");
  std::vector<int> host_piece(np, -1);
  for (int p = 0; p < np; ++p) {
    const Nest& n = nest[p];
    if (n.own < 0 || n.own >= H || piece[n.own >> 1] != p) throw InvariantError("diagram: nesting dart outside its piece");
    if (n.host >= H) throw InvariantError("diagram: nesting host out of range");
    if (n.host >= 0) {
      host_piece[p] = piece[n.host >> 1];
      if (host_piece[p] == p) throw InvariantError("diagram: piece nested in itself");
    }
  }
  for (int p = 0; p < np; ++p) {
    int q = p;
    for (int k = 0; q >= 0; ++k) {
      if (k > np) throw InvariantError("diagram: nesting cycle");
      q = host_piece[q];
    }
  }
}

std::vector<int> piece_of_edge(const Diagram& d, int* count) {
  const int E = d.num_edges();
  UnionFind uf(E);
  for (const auto& c : d.crossings)
    for (int j = 1; j < 4; ++j) uf.unite(c.slot[0] >> 1, c.slot[j] >> 1);
  std::vector<int> id(E, -1), out(E);
  int n = 0;
  for (int e = 0; e < E; ++e) {
    int r = uf.find(e);
    if (id[r] < 0) id[r] = n++;
    out[e] = id[r];
  }
  if (count) *count = n;
  return out;
}

RegionMap region_map(const Diagram& d) {
  RegionMap rm;
  const int H = 2 * d.num_edges();
  rm.face_of_dart.assign(H, -1);
  for (int s = 0; s < H; ++s) {
    if (rm.face_of_dart[s] >= 0) continue;
    int x = s;
    do {
      rm.face_of_dart[x] = rm.faces;
      x = d.next_dart(x);
    } while (x != s);
    ++rm.faces;
  }
  UnionFind uf(rm.faces + 1);
  for (const auto& n : d.nest) uf.unite(rm.face_of_dart[n.own], n.host < 0 ? rm.faces : rm.face_of_dart[n.host]);
  std::vector<int> id(rm.faces + 1, -1);
  rm.region_of_face.resize(rm.faces);
  for (int f = 0; f <= rm.faces; ++f) {
    int r = uf.find(f);
    if (id[r] < 0) id[r] = rm.regions++;
    if (f < rm.faces) rm.region_of_face[f] = id[r];
  }
  rm.outer = id[uf.find(rm.faces)];
  return rm;
}

std::vector<char> reach_regions(const Diagram& d, const RegionMap& rm, int start,
                                 const std::vector<char>& edge_barrier,
                                 const std::vector<char>& chord_barrier) {
  std::vector<std::vector<int>> adj(rm.regions);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (!edge_barrier.empty() && edge_barrier[e]) continue;
    int a = rm.region_of_dart(2 * e), b = rm.region_of_dart(2 * e + 1);
    if (a != b) adj[a].push_back(b), adj[b].push_back(a);
  }
  for (int c = 0; c < d.num_crossings(); ++c) {
    if (!chord_barrier.empty() && chord_barrier[c]) continue;
    auto m = middle_darts(d, c);
    int a = rm.region_of_dart(m[0]), b = rm.region_of_dart(m[1]);
    if (a != b) adj[a].push_back(b), adj[b].push_back(a);
  }
  std::vector<char> seen(rm.regions, 0);
  std::vector<int> st{start};
  seen[start] = 1;
  while (!st.empty()) {
    int r = st.back();
    st.pop_back();
    for (int q : adj[r])
      if (!seen[q]) seen[q] = 1, st.push_back(q);
  }
  return seen;
}

Components components(const Diagram& d) {
  Components out;
  out.of_edge.assign(d.num_edges(), -1);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (out.of_edge[e] >= 0) continue;
    int x = e;
    do {
      out.of_edge[x] = out.count;
      x = d.strand_next(x);
    } while (x != e);
    ++out.count;
  }
  return out;
}

std::vector<char> circle_left_side(const Diagram& d, const RegionMap& rm, const SeifertPicture& p, int circle) {
  std::vector<char> barrier(d.num_edges(), 0);
  for (int e : p.circles[circle]) barrier[e] = 1;
  return reach_regions(d, rm, rm.region_of_dart(2 * p.circles[circle][0]), barrier, {});
}

SeifertPicture seifert_smooth(const Diagram& d) {
  SeifertPicture p;
  p.circle_of_edge.assign(d.num_edges(), -1);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (p.circle_of_edge[e] >= 0) continue;
    std::vector<int> circ;
    int x = e;
    do {
      p.circle_of_edge[x] = p.size();
      circ.push_back(x);
      x = d.seifert_next(x);
    } while (x != e);
    p.circles.push_back(std::move(circ));
  }
  for (const auto& c : d.crossings)
    p.crossing_circles.push_back({p.circle_of_edge[c.slot[0] >> 1], p.circle_of_edge[c.slot[2] >> 1]});
  RegionMap rm = region_map(d);
  const int S = p.size();
  std::vector<std::vector<char>> inside(S);
  for (int k = 0; k < S; ++k) {
    auto left = circle_left_side(d, rm, p, k);
    bool ccw = !left[rm.outer];
    p.orientation.push_back(ccw ? Orientation::counterclockwise : Orientation::clockwise);
    if (!ccw)
      for (auto& v : left) v = !v;
    inside[k] = std::move(left);
  }
  std::vector<int> load(S, 0);
  auto contains = [&](int outer, int inner) {
    return outer != inner && inside[outer][rm.region_of_dart(2 * p.circles[inner][0])];
  };
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) load[a] += contains(a, b);
  p.parent.assign(S, -1);
  for (int b = 0; b < S; ++b)
    for (int a = 0; a < S; ++a)
      if (contains(a, b) && (p.parent[b] < 0 || load[a] < load[p.parent[b]])) p.parent[b] = a;
  return p;
}

Orientation circle_orientation(const SeifertPicture& p, int circle) {
  if (circle < 0 || circle >= p.size()) throw InputError("unknown circle " + std::to_string(circle));
  return p.orientation[circle];
}

std::vector<int> innermost_circles(const Diagram& d) {
  auto p = seifert_smooth(d);
  auto rm = region_map(d);
  std::vector<int> out;
  for (int k = 0; k < p.size(); ++k) {
    auto left = circle_left_side(d, rm, p, k);
    int in = 0, outside = 0;
    for (int j = 0; j < p.size(); ++j) {
      if (j == k) continue;
      (left[rm.region_of_dart(2 * p.circles[j][0])] ? in : outside)++;
    }
    if (in == 0 || outside == 0) out.push_back(k);
  }
  return out;
}

DiagramStats diagram_stats(const Diagram& d) {
  DiagramStats s;
  s.s = seifert_smooth(d).size();
  s.writhe = d.writhe();
  s.crossing_count = d.num_crossings();
  s.component_count = components(d).count;
  return s;
}

Diagram smooth_crossing(const Diagram& d, int c) {
  check_crossing(d, c);
  Scaffold s = to_scaffold(d);
  smooth_vertex(s, c);
  return reduce(s).diagram;
}

Diagram flip_crossing(const Diagram& d, int c) {
  check_crossing(d, c);
  Diagram out = d;
  flip_slots(out, c);
  return out;
}

Diagram apply_surgeries(const Diagram& d, const std::vector<std::uint8_t>& state) {
  if (static_cast<int>(state.size()) != d.num_crossings()) throw InputError("surgery state has the wrong length");
  Scaffold s = to_scaffold(d);
  for (int c = 0; c < d.num_crossings(); ++c) {
    if (state[c] == kFlip) flip_vertex(s, c);
    if (state[c] == kSmooth) smooth_vertex(s, c);
  }
  return reduce(s).diagram;
}

Diagram delete_edges(const Diagram& d, const std::vector<char>& doomed) {
  Scaffold s = to_scaffold(d);
  ghost_strands(s, doomed);
  return reduce(s).diagram;
}

Diagram delete_component(const Diagram& d, int component) {
  auto comp = components(d);
  if (component < 0 || component >= comp.count) throw InputError("unknown component " + std::to_string(component));
  std::vector<char> doomed(d.num_edges());
  for (int e = 0; e < d.num_edges(); ++e) doomed[e] = comp.of_edge[e] == component;
  return delete_edges(d, doomed);
}

Diagram double_crossing(const Diagram& d, int c) {
  check_crossing(d, c);
  Diagram out = d;
  const auto sl = d.crossings[c].slot;
  const bool pos = d.sign(c) > 0;
  int eo = (pos ? sl[1] : sl[3]) >> 1;
  int eu = sl[2] >> 1;
  int E = d.num_edges();
  int f_o = E, f_u = E + 1;  // continuations to the old heads of eo and eu
  int X = d.num_crossings();
  out.crossings.push_back({});
  out.at_crossing.resize(2 * E + 4, -1);
  out.at_slot.resize(2 * E + 4, -1);
  auto place = [&](int h, int cc, int j) {
    out.crossings[cc].slot[j] = h;
    out.at_crossing[h] = cc;
    out.at_slot[h] = j;
  };
  int ho_c = d.at_crossing[2 * eo + 1], ho_s = d.at_slot[2 * eo + 1];
  int hu_c = d.at_crossing[2 * eu + 1], hu_s = d.at_slot[2 * eu + 1];
  place(2 * f_o + 1, ho_c, ho_s);
  place(2 * f_u + 1, hu_c, hu_s);
  std::map<int, int> remap;
  if (pos) {
    // [eo in, f_o out, f_u out, eu in]
    place(2 * eo + 1, X, 0);
    place(2 * f_o, X, 1);
    place(2 * f_u, X, 2);
    place(2 * eu + 1, X, 3);
    remap = {{2 * eo, 2 * f_o}, {2 * eu + 1, 2 * f_u + 1}};
  } else {
    // [eo in, eu in, f_u out, f_o out]
    place(2 * eo + 1, X, 0);
    place(2 * eu + 1, X, 1);
    place(2 * f_u, X, 2);
    place(2 * f_o, X, 3);
    remap = {{2 * eu, 2 * f_u}, {2 * eo + 1, 2 * f_o + 1}};
  }
  for (auto& n : out.nest) {
    if (auto it = remap.find(n.own); it != remap.end()) n.own = it->second;
    if (auto it = remap.find(n.host); it != remap.end()) n.host = it->second;
  }
  out.validate();
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram out = a;
  const int H = 2 * a.num_edges(), X = a.num_crossings();
  for (auto c : b.crossings) {
    for (int& h : c.slot) h += H;
    out.crossings.push_back(c);
  }
  for (int h = 0; h < 2 * b.num_edges(); ++h) {
    out.at_crossing.push_back(b.at_crossing[h] < 0 ? -1 : b.at_crossing[h] + X);
    out.at_slot.push_back(b.at_slot[h]);
  }
  for (auto n : b.nest) out.nest.push_back({n.own + H, n.host < 0 ? -1 : n.host + H});
  // pieces are numbered by lowest edge, so records stay aligned
  return out;
}

std::vector<int> outer_edges(const Diagram& d) {
  auto rm = region_map(d);
  std::vector<int> out;
  for (int e = 0; e < d.num_edges(); ++e)
    if (rm.region_of_dart(2 * e) == rm.outer || rm.region_of_dart(2 * e + 1) == rm.outer) out.push_back(e);
  return out;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2, int e1, int e2) {
  int n1 = 0, n2 = 0;
  piece_of_edge(d1, &n1);
  piece_of_edge(d2, &n2);
  if (n1 != 1 || n2 != 1) throw InputError("connected sum needs connected summands");
  if (e1 < 0 || e1 >= d1.num_edges() || e2 < 0 || e2 >= d2.num_edges()) throw InputError("unknown edge");
  auto r1 = region_map(d1), r2 = region_map(d2);
  auto outer_side = [](const RegionMap& rm, int e) {
    int m = 0;
    if (rm.region_of_dart(2 * e) == rm.outer) m |= 1;
    if (rm.region_of_dart(2 * e + 1) == rm.outer) m |= 2;
    return m;
  };
  int m1 = outer_side(r1, e1), m2 = outer_side(r2, e2);
  if (!m1) throw InputError("edge " + std::to_string(e1) + " is not on the outer face of the first summand");
  if (!m2) throw InputError("edge " + std::to_string(e2) + " is not on the outer face of the second summand");
  if (!(m1 & m2)) throw InputError("outer faces of the summands meet the edges on opposite sides");
  if (d1.num_crossings() == 0) return d2;
  if (d2.num_crossings() == 0) return d1;
  int side = (m1 & m2 & 2) ? 1 : 0;  // prefer the right-hand side
  Diagram out = disjoint_union(d1, d2);
  int f2 = e2 + d1.num_edges();
  int h1 = 2 * e1 + 1, h2 = 2 * f2 + 1;
  int c1 = out.at_crossing[h1], s1 = out.at_slot[h1];
  int c2 = out.at_crossing[h2], s2 = out.at_slot[h2];
  out.at_crossing[h1] = c2, out.at_slot[h1] = s2, out.crossings[c2].slot[s2] = h1;
  out.at_crossing[h2] = c1, out.at_slot[h2] = s1, out.crossings[c1].slot[s1] = h2;
  out.nest = {{2 * e1 + side, -1}};
  out.validate();
  return out;
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (int c = 0; c < out.num_crossings(); ++c) flip_slots(out, c);
  return out;
}

Diagram reverse(const Diagram& d) {
  Diagram out = d;
  const int H = 2 * d.num_edges();
  for (int h = 0; h < H; ++h) {
    out.at_crossing[h] = d.at_crossing[h ^ 1];
  }
  for (int c = 0; c < d.num_crossings(); ++c) {
    const auto& s = d.crossings[c].slot;
    out.crossings[c].slot = {s[2] ^ 1, s[3] ^ 1, s[0] ^ 1, s[1] ^ 1};
    for (int j = 0; j < 4; ++j) out.at_slot[out.crossings[c].slot[j]] = j;
  }
  for (auto& n : out.nest) {
    n.own ^= 1;
    if (n.host >= 0) n.host ^= 1;
  }
  return out;
}

MonotonePath monotone_path(const Diagram& d, int x, PathMode mode) {
  if (x < 0 || x >= d.num_edges()) throw InputError("base point edge out of range");
  MonotonePath out;
  out.path.first_over.assign(d.num_crossings(), -1);
  int e = x;
  for (;;) {
    int c = d.head(e);
    if (c >= 0) {
      bool over = d.head_slot(e) != 0;
      if (out.path.first_over[c] < 0) {
        if (over != (mode == PathMode::descending)) {
          out.terminal = c;
          return out;
        }
        out.path.first_over[c] = over;
      }
      out.path.visits.push_back({c, over});
    }
    e = d.strand_next(e);
    if (e == x) return out;
  }
}

TravelState natural_travel(const Diagram& d, const std::vector<int>& base_edges) {
  auto comp = components(d);
  std::vector<char> used(comp.count, 0);
  TravelState t;
  t.first_over.assign(d.num_crossings(), -1);
  for (int b : base_edges) {
    if (b < 0 || b >= d.num_edges()) throw InputError("base point edge out of range");
    if (used[comp.of_edge[b]]++) throw InputError("two base points on one component");
    int e = b;
    do {
      int c = d.head(e);
      if (c >= 0) {
        bool over = d.head_slot(e) != 0;
        if (t.first_over[c] < 0) t.first_over[c] = over;
        t.visits.push_back({c, over});
      }
      e = d.strand_next(e);
    } while (e != b);
  }
  for (char u : used)
    if (!u) throw InputError("natural travel needs a base point on every component");
  return t;
}

namespace {

std::vector<int> piece_code(const Diagram& d, int start) {
  std::vector<int> le(d.num_edges(), -1), lc(d.num_crossings(), -1);
  std::vector<int> code, queue{start};
  le[start] = 0;
  int ne = 1, nc = 0;
  auto visit = [&](int h) {
    int c = d.at_crossing[h];
    if (lc[c] >= 0) return;
    lc[c] = nc++;
    int k = d.at_slot[h];
    code.push_back(k);
    for (int j = 0; j < 4; ++j) {
      int g = d.crossings[c].slot[(k + j) & 3];
      if (le[g >> 1] < 0) le[g >> 1] = ne++, queue.push_back(g >> 1);
      code.push_back(2 * le[g >> 1] + (g & 1));
    }
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    visit(2 * e + 1);
    visit(2 * e);
  }
  return code;
}

}  // namespace

std::string canonical_code(const Diagram& d) {
  int np = 0;
  auto piece = piece_of_edge(d, &np);
  std::vector<std::vector<int>> best(np);
  std::vector<char> have(np, 0);
  int loops = 0;
  for (int e = 0; e < d.num_edges(); ++e) {
    if (d.is_loop(e)) {
      ++loops;
      continue;
    }
    auto code = piece_code(d, e);
    int p = piece[e];
    if (!have[p] || code < best[p]) best[p] = std::move(code), have[p] = 1;
  }
  std::vector<std::string> parts;
  for (int p = 0; p < np; ++p) {
    if (!have[p]) continue;
    std::string s;
    for (int v : best[p]) s += std::to_string(v) + ",";
    parts.push_back(s);
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "L" + std::to_string(loops);
  for (auto& s : parts) out += "|" + s;
  return out;
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (int c = 0; c < d.num_crossings(); ++c)
    j["crossings"].push_back({{"slots", d.crossings[c].slot}, {"sign", d.sign(c)}});
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < d.num_edges(); ++e) {
    if (d.is_loop(e))
      j["edges"].push_back({{"loop", true}});
    else
      j["edges"].push_back({{"tail", {d.tail(e), d.tail_slot(e)}}, {"head", {d.head(e), d.head_slot(e)}}});
  }
  j["nest"] = nlohmann::json::array();
  for (auto n : d.nest) j["nest"].push_back({n.own, n.host});
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canonical_code(d)) h = (h ^ ch) * 1099511628211ull;
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  j["hash"] = buf;
  return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
  Diagram d;
  try {
    int E = static_cast<int>(j.at("edges").size());
    d.at_crossing.assign(2 * E, -1);
    d.at_slot.assign(2 * E, -1);
    for (const auto& c : j.at("crossings")) {
      Crossing x;
      auto s = c.at("slots").get<std::vector<int>>();
      if (s.size() != 4) throw InputError("crossing needs four slots");
      for (int k = 0; k < 4; ++k) {
        if (s[k] < 0 || s[k] >= 2 * E) throw InputError("slot half-edge out of range");
        x.slot[k] = s[k];
        d.at_crossing[s[k]] = d.num_crossings();
        d.at_slot[s[k]] = k;
      }
      d.crossings.push_back(x);
    }
    for (const auto& n : j.at("nest")) d.nest.push_back({n.at(0).get<int>(), n.at(1).get<int>()});
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("diagram json: ") + ex.what());
  }
  try {
    d.validate();
  } catch (const InvariantError& ex) {
    throw InputError(ex.what());
  }
  return d;
}

}  // namespace kc
