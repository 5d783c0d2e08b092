#include "scaffold.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "knotcert/errors.hpp"
#include "util.hpp"

namespace kc {

int Scaffold::add_vertex(bool crossing, int degree, int tag) {
  verts.push_back({crossing, std::vector<int>(degree, -1), tag});
  return static_cast<int>(verts.size()) - 1;
}

void Scaffold::attach(int h, int v, int i) {
  verts[v].rot[i] = h;
  vof[h] = v;
  idx[h] = i;
}

int Scaffold::add_edge(bool is_strand, int tag, int tv, int ti, int hv, int hi) {
  int e = num_edges();
  strand.push_back(is_strand);
  etag.push_back(tag);
  for (int k = 0; k < 2; ++k) {
    vof.push_back(-1);
    idx.push_back(-1);
    pass.push_back(-1);
  }
  if (tv >= 0) attach(2 * e, tv, ti);
  if (hv >= 0) attach(2 * e + 1, hv, hi);
  return e;
}

int Scaffold::next_dart(int d) const {
  int h = d ^ 1;
  int v = vof[h];
  if (v < 0) return d;
  const auto& r = verts[v].rot;
  int n = static_cast<int>(r.size());
  return r[(idx[h] + n - 1) % n];
}

Reduced reduce(const Scaffold& s) {
  const int E = s.num_edges();
  const int H = 2 * E;
  Reduced out;

  // scaffold faces
  std::vector<int> sface(H, -1);
  int F = 0;
  for (int d = 0; d < H; ++d) {
    if (sface[d] >= 0) continue;
    int x = d;
    int guard = 0;
    do {
      if (sface[x] >= 0) throw InvariantError("scaffold: broken face cycle");
      sface[x] = F;
      x = s.next_dart(x);
      if (++guard > H) throw InvariantError("scaffold: face walk does not close");
    } while (x != d);
    ++F;
  }
  const int OUTER = F;
  UnionFind uf(F + 1);
  for (int e = 0; e < E; ++e)
    if (!s.strand[e]) uf.unite(sface[2 * e], sface[2 * e + 1]);
  for (auto [own, host] : s.nest) uf.unite(sface[own], host < 0 ? OUTER : sface[host]);

  // trace strands through ghost vertices
  std::vector<int> edge_of(E, -1);
  std::vector<std::vector<int>> chains;
  out.crossing_of_vertex.assign(s.verts.size(), -1);
  int X = 0;
  for (std::size_t v = 0; v < s.verts.size(); ++v)
    if (s.verts[v].crossing) {
      if (s.verts[v].rot.size() != 4) throw InvariantError("scaffold: crossing of degree != 4");
      out.crossing_of_vertex[v] = X++;
      out.crossing_tag.push_back(s.verts[v].tag);
    }
  auto follow = [&](int start, bool from_crossing) {
    std::vector<int> chain;
    int id = static_cast<int>(chains.size());
    int cur = start;
    for (int guard = 0;; ++guard) {
      if (guard > E) throw InvariantError("scaffold: strand does not terminate");
      int e = cur >> 1;
      if (!s.strand[e]) throw InvariantError("scaffold: strand runs into a ghost edge");
      if (edge_of[e] >= 0) throw InvariantError("scaffold: strand edge used twice");
      edge_of[e] = id;
      chain.push_back(e);
      int hh = cur ^ 1;
      int w = s.vof[hh];
      if (w < 0) {
        if (from_crossing || chain.size() != 1) throw InvariantError("scaffold: dangling strand");
        break;
      }
      if (s.verts[w].crossing) {
        if (!from_crossing) throw InvariantError("scaffold: loop meets a crossing");
        break;
      }
      cur = s.pass[hh];
      if (cur < 0) throw InvariantError("scaffold: strand dead end at ghost vertex");
      if (!from_crossing && cur == start) break;
    }
    chains.push_back(std::move(chain));
  };
  for (std::size_t v = 0; v < s.verts.size(); ++v) {
    if (!s.verts[v].crossing) continue;
    for (int h : s.verts[v].rot)
      if (!(h & 1)) follow(h, true);
  }
  for (int e = 0; e < E; ++e)
    if (s.strand[e] && edge_of[e] < 0) follow(2 * e, false);

  const int NE = static_cast<int>(chains.size());
  Diagram& d = out.diagram;
  d.crossings.assign(X, {});
  d.at_crossing.assign(2 * NE, -1);
  d.at_slot.assign(2 * NE, -1);
  for (std::size_t v = 0; v < s.verts.size(); ++v) {
    int c = out.crossing_of_vertex[v];
    if (c < 0) continue;
    for (int j = 0; j < 4; ++j) {
      int h = s.verts[v].rot[j];
      int ne = edge_of[h >> 1];
      if (ne < 0) throw InvariantError("scaffold: crossing touches a ghost edge");
      const auto& ch = chains[ne];
      int nh;
      if (h & 1) {
        if (ch.back() != (h >> 1)) throw InvariantError("scaffold: chain end mismatch");
        nh = 2 * ne + 1;
      } else {
        if (ch.front() != (h >> 1)) throw InvariantError("scaffold: chain start mismatch");
        nh = 2 * ne;
      }
      d.crossings[c].slot[j] = nh;
      d.at_crossing[nh] = c;
      d.at_slot[nh] = j;
    }
  }
  out.edge_of_sedge = edge_of;
  out.edge_tags.resize(NE);
  for (int ne = 0; ne < NE; ++ne)
    for (int e : chains[ne])
      if (s.etag[e] >= 0) out.edge_tags[ne].push_back(s.etag[e]);

  // region class of each diagram dart
  std::vector<int> dart_class(2 * NE);
  for (int ne = 0; ne < NE; ++ne) {
    dart_class[2 * ne] = uf.find(sface[2 * chains[ne].front()]);
    dart_class[2 * ne + 1] = uf.find(sface[2 * chains[ne].front() + 1]);
  }
  const int outer_class = uf.find(OUTER);

  int npieces = 0;
  std::vector<int> piece = piece_of_edge(d, &npieces);
  std::map<int, std::vector<int>> pieces_at;  // class -> pieces
  std::vector<std::vector<int>> classes_of(npieces);
  for (int h = 0; h < 2 * NE; ++h) {
    int p = piece[h >> 1], k = dart_class[h];
    auto& v = classes_of[p];
    if (std::find(v.begin(), v.end(), k) == v.end()) {
      v.push_back(k);
      pieces_at[k].push_back(p);
    }
  }
  // BFS over the piece/region incidence tree from the unbounded region
  std::vector<int> parent_class(npieces, -2);
  std::map<int, int> found_by;  // class -> piece that reached it
  std::vector<int> queue{outer_class};
  found_by[outer_class] = -1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int k = queue[qi];
    auto it = pieces_at.find(k);
    if (it == pieces_at.end()) continue;
    for (int p : it->second) {
      if (parent_class[p] != -2) continue;
      parent_class[p] = k;
      for (int k2 : classes_of[p])
        if (!found_by.count(k2)) {
          found_by[k2] = p;
          queue.push_back(k2);
        }
    }
  }
  d.nest.assign(npieces, {});
  for (int p = 0; p < npieces; ++p) {
    if (parent_class[p] == -2) throw InvariantError("scaffold: piece not reachable from the outer region");
    int k = parent_class[p];
    int own = -1, host = -1;
    for (int h = 0; h < 2 * NE && own < 0; ++h)
      if (piece[h >> 1] == p && dart_class[h] == k) own = h;
    if (k != outer_class) {
      int q = found_by.at(k);
      for (int h = 0; h < 2 * NE && host < 0; ++h)
        if (piece[h >> 1] == q && dart_class[h] == k) host = h;
    }
    d.nest[p] = {own, host};
  }
  d.validate();

  RegionMap rm = region_map(d);
  std::map<int, int> class_region;
  class_region[outer_class] = rm.outer;
  for (int h = 0; h < 2 * NE; ++h) {
    int r = rm.region_of_dart(h);
    auto [it, fresh] = class_region.emplace(dart_class[h], r);
    if (!fresh && it->second != r) throw InvariantError("scaffold: region classes disagree");
  }
  out.sface_of_dart = sface;
  out.region_of_sface.assign(F, -1);
  for (int f = 0; f < F; ++f) {
    auto it = class_region.find(uf.find(f));
    if (it != class_region.end()) out.region_of_sface[f] = it->second;
  }
  return out;
}

void ghost_strands(Scaffold& s, const std::vector<char>& doomed) {
  for (int e = 0; e < s.num_edges(); ++e)
    if (doomed[e]) s.strand[e] = 0;
  for (auto& v : s.verts) {
    if (!v.crossing) continue;
    const auto& r = v.rot;
    bool du = doomed[r[0] >> 1], dover = doomed[r[1] >> 1];
    if (du != static_cast<bool>(doomed[r[2] >> 1]) || dover != static_cast<bool>(doomed[r[3] >> 1]))
      throw InvariantError("ghost_strands: doomed set is not a union of strands");
    if (!du && !dover) continue;
    v.crossing = false;
    if (!du) s.pass[r[0]] = r[2];
    if (!dover) {
      if (r[1] & 1)
        s.pass[r[1]] = r[3];
      else
        s.pass[r[3]] = r[1];
    }
  }
}

Scaffold to_scaffold(const Diagram& d) {
  Scaffold s;
  for (int c = 0; c < d.num_crossings(); ++c) {
    s.verts.push_back({true, std::vector<int>(d.crossings[c].slot.begin(), d.crossings[c].slot.end()), c});
  }
  int E = d.num_edges();
  s.strand.assign(E, 1);
  s.etag.resize(E);
  std::iota(s.etag.begin(), s.etag.end(), 0);
  s.vof = d.at_crossing;
  s.idx = d.at_slot;
  s.pass.assign(2 * E, -1);
  for (const auto& n : d.nest) s.nest.push_back({n.own, n.host});
  return s;
}

void smooth_vertex(Scaffold& s, int v) {
  auto sl = s.verts[v].rot;
  bool pos = !(sl[1] & 1);
  s.verts[v].crossing = false;
  s.verts[v].rot.assign(3, -1);
  int u2 = s.add_vertex(false, 3);
  std::array<int, 2> a, b;
  if (pos) {
    a = {sl[0], sl[1]}, b = {sl[2], sl[3]};
    s.pass[sl[0]] = sl[1], s.pass[sl[3]] = sl[2];
  } else {
    a = {sl[1], sl[2]}, b = {sl[3], sl[0]};
    s.pass[sl[1]] = sl[2], s.pass[sl[0]] = sl[3];
  }
  s.attach(a[0], v, 0), s.attach(a[1], v, 1);
  s.attach(b[0], u2, 0), s.attach(b[1], u2, 1);
  s.add_edge(false, -1, v, 2, u2, 2);
}

void flip_vertex(Scaffold& s, int v) {
  auto& r = s.verts[v].rot;
  if (r[1] & 1)
    r = {r[1], r[2], r[3], r[0]};
  else
    r = {r[3], r[0], r[1], r[2]};
  for (int j = 0; j < 4; ++j) s.idx[r[j]] = j;
}

}  // namespace kc
