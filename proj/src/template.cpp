#include "knotcert/template.hpp"

#include <algorithm>
#include <set>

#include "knotcert/errors.hpp"
#include "scaffold.hpp"
#include "util.hpp"

namespace kc {

namespace {

enum Role { AO = 0, CO = 1, AI = 2, CI = 3 };

struct Layout {
  std::vector<int> pos_on_arc, pos_on_circle;
  std::vector<int> seg_offset, seg_circle;
  explicit Layout(const Template& t) {
    pos_on_arc.assign(t.incidences.size(), -1);
    pos_on_circle.assign(t.incidences.size(), -1);
    for (const auto& a : t.arcs)
      for (std::size_t k = 0; k < a.size(); ++k) pos_on_arc[a[k]] = static_cast<int>(k);
    for (const auto& c : t.circles)
      for (std::size_t k = 0; k < c.size(); ++k) pos_on_circle[c[k]] = static_cast<int>(k);
    for (std::size_t c = 0; c < t.circles.size(); ++c) {
      seg_offset.push_back(static_cast<int>(seg_circle.size()));
      for (int k = 0; k < t.segment_count(static_cast<int>(c)); ++k) seg_circle.push_back(static_cast<int>(c));
    }
  }
  int segment_out(const Template& t, int inc) const { return seg_offset[t.incidences[inc].circle] + pos_on_circle[inc]; }
  int next_on_circle(const Template& t, int inc) const {
    const auto& c = t.circles[t.incidences[inc].circle];
    return c[(pos_on_circle[inc] + 1) % c.size()];
  }
};

std::vector<int> rotation_roles(const Template& t, const Layout& L, int inc) {
  const Incidence& x = t.incidences[inc];
  std::vector<int> full = x.co_orient ? std::vector<int>{AO, CO, AI, CI} : std::vector<int>{AO, CI, AI, CO};
  int p = L.pos_on_arc[inc];
  int last = t.arc_size(x.arc) - 1;
  std::vector<int> out;
  for (int r : full) {
    if (r == AI && p == 0) continue;
    if (r == AO && p == last) continue;
    out.push_back(r);
  }
  return out;
}

int role_index(const std::vector<int>& roles, int r) {
  auto it = std::find(roles.begin(), roles.end(), r);
  if (it == roles.end()) throw InvariantError("template: missing rotation role");
  return static_cast<int>(it - roles.begin());
}

struct TemplateScaffold {
  Scaffold s;
  std::vector<int> seg_edge;
  std::vector<std::pair<int, int>> letters;  // global letter -> (arc, pos)
  std::vector<std::vector<std::vector<int>>> level_edge;  // [arc][level][position]
  std::vector<int> vertex_of_inc;
};

TemplateScaffold make_scaffold(const Template& t, const BraidPlacement& pi, const Layout& L) {
  TemplateScaffold ts;
  Scaffold& s = ts.s;
  const int I = static_cast<int>(t.incidences.size());
  std::vector<std::vector<int>> roles(I);
  for (int i = 0; i < I; ++i) {
    roles[i] = rotation_roles(t, L, i);
    ts.vertex_of_inc.push_back(s.add_vertex(false, static_cast<int>(roles[i].size())));
  }
  auto at = [&](int inc, int r) { return std::pair<int, int>{ts.vertex_of_inc[inc], role_index(roles[inc], r)}; };
  for (const auto& a : t.arcs)
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      auto [tv, ti] = at(a[k], AO);
      auto [hv, hi] = at(a[k + 1], AI);
      s.add_edge(false, -1, tv, ti, hv, hi);
    }
  ts.seg_edge.assign(L.seg_circle.size(), -1);
  ts.level_edge.resize(t.arcs.size());
  for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
    const int m = t.arc_size(a);
    static const BraidWord none;
    auto it = pi.find(a);
    const BraidWord& w = it == pi.end() ? none : it->second;
    const int len = static_cast<int>(w.size());
    const bool co = t.incidences[t.arcs[a][0]].co_orient;
    ts.level_edge[a].assign(len + 1, std::vector<int>(m, -1));
    std::vector<std::pair<int, int>> pend(m);
    std::vector<int> pend_level(m, 0);
    for (int p = 0; p < m; ++p) pend[p] = at(t.arcs[a][p], CO);
    auto close = [&](int p, int e, int upto) {
      for (int l = pend_level[p]; l <= upto; ++l) ts.level_edge[a][l][p] = e;
    };
    for (int j = 0; j < len; ++j) {
      const Letter& x = w.letters[j];
      int lo = x.index - 1, hi = x.index;
      if (hi >= m) throw InputError("letter exceeds the strand count of arc " + std::to_string(a));
      int g = static_cast<int>(ts.letters.size());
      ts.letters.push_back({a, j});
      int X = s.add_vertex(true, 4, g);
      // corner slots: NW, NE, SW, SE
      int NW, NE, SW, SE;
      if (x.sign > 0)
        NW = 0, SW = 1, SE = 2, NE = 3;
      else
        NE = 0, NW = 1, SW = 2, SE = 3;
      int in_lo = co ? NE : NW, in_hi = co ? NW : NE;
      int out_lo = co ? SE : SW, out_hi = co ? SW : SE;
      int e1 = s.add_edge(true, -1, pend[lo].first, pend[lo].second, X, in_lo);
      int e2 = s.add_edge(true, -1, pend[hi].first, pend[hi].second, X, in_hi);
      close(lo, e1, j);
      close(hi, e2, j);
      pend[lo] = {X, out_lo}, pend[hi] = {X, out_hi};
      pend_level[lo] = pend_level[hi] = j + 1;
    }
    for (int p = 0; p < m; ++p) {
      int inc = t.arcs[a][p];
      int seg = L.segment_out(t, inc);
      auto [hv, hi] = at(L.next_on_circle(t, inc), CI);
      int e = s.add_edge(true, seg, pend[p].first, pend[p].second, hv, hi);
      close(p, e, len);
      ts.seg_edge[seg] = e;
    }
  }
  for (int c = 0; c < static_cast<int>(t.circles.size()); ++c)
    if (t.circles[c].empty()) ts.seg_edge[L.seg_offset[c]] = s.add_edge(true, L.seg_offset[c], -1, 0, -1, 0);
  for (int i = 0; i < I; ++i) {
    const auto& r = s.verts[ts.vertex_of_inc[i]].rot;
    s.pass[r[role_index(roles[i], CI)]] = r[role_index(roles[i], CO)];
  }
  auto dart = [&](const SidePos& p) {
    if (p.circle < 0 || p.circle >= static_cast<int>(t.circles.size()) || p.segment < 0 ||
        p.segment >= t.segment_count(p.circle))
      throw InputError("nesting position out of range");
    return 2 * ts.seg_edge[L.seg_offset[p.circle] + p.segment] + (p.left ? 0 : 1);
  };
  for (const auto& n : t.nest) s.nest.push_back({dart(n.own), n.host ? dart(*n.host) : -1});
  return ts;
}

// circles joined through arcs
std::vector<int> template_pieces(const Template& t, int* count) {
  UnionFind uf(static_cast<int>(t.circles.size()));
  for (const auto& a : t.arcs)
    for (int i : a) uf.unite(t.incidences[a[0]].circle, t.incidences[i].circle);
  std::vector<int> id(t.circles.size(), -1), out(t.circles.size());
  int n = 0;
  for (std::size_t c = 0; c < t.circles.size(); ++c) {
    int r = uf.find(static_cast<int>(c));
    if (id[r] < 0) id[r] = n++;
    out[c] = id[r];
  }
  *count = n;
  return out;
}

std::vector<std::string> structural_errors(const Template& t) {
  std::vector<std::string> err;
  const int I = static_cast<int>(t.incidences.size());
  const int C = static_cast<int>(t.circles.size()), A = static_cast<int>(t.arcs.size());
  std::vector<int> on_circle(I, 0), on_arc(I, 0);
  for (int c = 0; c < C; ++c)
    for (int i : t.circles[c]) {
      if (i < 0 || i >= I) {
        err.push_back("circle " + std::to_string(c) + " lists unknown incidence");
        continue;
      }
      ++on_circle[i];
      if (t.incidences[i].circle != c) err.push_back("incidence " + std::to_string(i) + " listed on the wrong circle");
    }
  for (int a = 0; a < A; ++a)
    for (int i : t.arcs[a]) {
      if (i < 0 || i >= I) {
        err.push_back("arc " + std::to_string(a) + " lists unknown incidence");
        continue;
      }
      ++on_arc[i];
      if (t.incidences[i].arc != a) err.push_back("incidence " + std::to_string(i) + " listed on the wrong arc");
    }
  for (int i = 0; i < I; ++i) {
    const auto& x = t.incidences[i];
    if (x.circle < 0 || x.circle >= C || x.arc < 0 || x.arc >= A)
      err.push_back("incidence " + std::to_string(i) + " references unknown circle or arc");
    if (on_circle[i] != 1 || on_arc[i] != 1) err.push_back("incidence " + std::to_string(i) + " must appear once on its circle and arc");
    if (x.side_change == x.endpoint) err.push_back("incidence " + std::to_string(i) + ": side-change bit disagrees with kind");
  }
  return err;
}

}  // namespace

int BoxIndex::crossing_of(int arc, int pos) const {
  for (std::size_t c = 0; c < letter_of_crossing.size(); ++c)
    if (letter_of_crossing[c] == std::pair<int, int>{arc, pos}) return static_cast<int>(c);
  return -1;
}

std::vector<std::string> validate(const Template& t, const BraidPlacement& pi) {
  auto err = structural_errors(t);
  if (!err.empty()) return err;
  for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
    const auto& arc = t.arcs[a];
    const std::string tag = "arc " + std::to_string(a);
    if (arc.size() < 2) err.push_back(tag + ": arc too short (needs at least 2 incidences)");
    std::set<int> seen;
    for (std::size_t k = 0; k < arc.size(); ++k) {
      const auto& x = t.incidences[arc[k]];
      if (!seen.insert(x.circle).second) err.push_back(tag + ": arc-circle multiplicity");
      bool end = k == 0 || k + 1 == arc.size();
      if (x.endpoint != end) err.push_back(tag + ": endpoint placement");
      if (x.co_orient != t.incidences[arc[0]].co_orient) err.push_back(tag + ": orientation clash inside the box");
    }
  }
  for (const auto& [a, w] : pi) {
    if (a < 0 || a >= static_cast<int>(t.arcs.size())) {
      err.push_back("placement for unknown arc " + std::to_string(a));
      continue;
    }
    for (const auto& x : w.letters)
      if (x.index >= t.arc_size(a)) {
        err.push_back("arc " + std::to_string(a) + ": strand bound (letter " + std::to_string(x.index) + ")");
        break;
      }
  }
  if (!err.empty()) return err;
  Layout L(t);
  int np = 0;
  auto piece = template_pieces(t, &np);
  std::vector<int> records(np, 0);
  if (t.nest.empty() || t.nest[0].host) err.push_back("outer face designation missing");
  for (const auto& n : t.nest) {
    for (const SidePos* p : {&n.own, n.host ? &*n.host : nullptr}) {
      if (!p) continue;
      if (p->circle < 0 || p->circle >= static_cast<int>(t.circles.size()) || p->segment < 0 ||
          p->segment >= t.segment_count(p->circle)) {
        err.push_back("nesting position out of range");
        return err;
      }
    }
    ++records[piece[n.own.circle]];
    if (n.host && piece[n.host->circle] == piece[n.own.circle]) err.push_back("piece nested in itself");
  }
  for (int p = 0; p < np; ++p)
    if (records[p] != 1) err.push_back("piece " + std::to_string(p) + " needs exactly one nesting record");
  if (!err.empty()) return err;
  // planarity of the circles-and-arcs map
  TemplateScaffold ts = make_scaffold(t, {}, L);
  const Scaffold& s = ts.s;
  const int E = s.num_edges();
  UnionFind uf(E);
  for (const auto& v : s.verts)
    for (int h : v.rot) uf.unite(v.rot[0] >> 1, h >> 1);
  std::map<int, int> V, Ecount, F;
  for (const auto& v : s.verts) ++V[uf.find(v.rot[0] >> 1)];
  for (int e = 0; e < E; ++e) {
    ++Ecount[uf.find(e)];
    if (s.vof[2 * e] < 0) ++V[uf.find(e)];
  }
  std::vector<char> seen(2 * E, 0);
  for (int d = 0; d < 2 * E; ++d) {
    if (seen[d]) continue;
    ++F[uf.find(d >> 1)];
    int x = d;
    do {
      seen[x] = 1;
      x = s.next_dart(x);
    } while (x != d);
  }
  for (auto [k, e] : Ecount)
    if (V[k] - e + F[k] != 2) {
      err.push_back("planarity: Euler relation fails");
      break;
    }
  return err;
}

bool is_knitted(const Template& t) {
  std::map<std::pair<int, int>, int> joined;
  for (const auto& a : t.arcs) {
    std::set<int> cs;
    for (int i : a) cs.insert(t.incidences[i].circle);
    for (int x : cs)
      for (int y : cs)
        if (x < y && ++joined[{x, y}] > 1) return false;
  }
  return true;
}

std::pair<Template, BraidPlacement> alexander_closure(const BraidWord& w) {
  Template t;
  const int n = w.strands;
  t.circles.resize(n);
  if (n == 1) {
    t.nest.push_back({{0, 0, true}, std::nullopt});
    return {t, {}};
  }
  t.arcs.resize(1);
  for (int p = 0; p < n; ++p) {
    bool end = p == 0 || p == n - 1;
    t.incidences.push_back({p, 0, end, !end, false});
    t.circles[p].push_back(p);
    t.arcs[0].push_back(p);
  }
  t.nest.push_back({{n - 1, 0, true}, std::nullopt});
  return {t, {{0, w}}};
}

std::pair<Diagram, BoxIndex> build_diagram(const Template& t, const BraidPlacement& pi) {
  auto err = validate(t, pi);
  if (!err.empty()) throw InputError("invalid template: " + err.front());
  Layout L(t);
  TemplateScaffold ts = make_scaffold(t, pi, L);
  Reduced red = reduce(ts.s);
  BoxIndex box;
  for (int tag : red.crossing_tag) box.letter_of_crossing.push_back(ts.letters[tag]);
  box.segments_of_edge = red.edge_tags;
  for (const auto& v : box.segments_of_edge) box.outside.push_back(!v.empty());
  box.segment_circle = L.seg_circle;
  box.segment_offset = L.seg_offset;
  return {std::move(red.diagram), std::move(box)};
}

Diagram closure_diagram(const BraidWord& w) {
  auto [t, pi] = alexander_closure(w);
  return build_diagram(t, pi).first;
}

std::pair<Template, BraidPlacement> induce(const Template& t, const BraidPlacement& pi,
                                           const std::vector<LetterSurgery>& surgeries,
                                           const std::vector<int>& deletions) {
  auto err = validate(t, pi);
  if (!err.empty()) throw InputError("invalid template: " + err.front());
  BraidPlacement p1 = pi;
  std::map<int, std::vector<int>> ops;
  for (const auto& s : surgeries) {
    auto it = pi.find(s.arc);
    if (it == pi.end() || s.pos < 0 || s.pos >= static_cast<int>(it->second.size()))
      throw InputError("surgery references a missing letter");
    auto& v = ops[s.arc];
    v.resize(it->second.size(), 0);
    if (v[s.pos]) throw InputError("letter operated on twice");
    v[s.pos] = s.op == Surgery::smooth ? 1 : 2;
  }
  for (auto& [a, v] : ops) {
    const BraidWord& w = pi.at(a);
    std::vector<Letter> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (v[k] == 1) continue;
      Letter x = w.letters[k];
      if (v[k] == 2) x.sign = -x.sign;
      out.push_back(x);
    }
    p1[a] = BraidWord(out, w.strands);
  }
  if (deletions.empty()) return {t, p1};

  Layout L(t);
  TemplateScaffold ts = make_scaffold(t, p1, L);
  Reduced red = reduce(ts.s);
  auto comp = components(red.diagram);
  std::vector<char> dead_comp(comp.count, 0);
  for (int k : deletions) {
    if (k < 0 || k >= comp.count) throw InputError("unknown component " + std::to_string(k));
    dead_comp[k] = 1;
  }
  const int SE = ts.s.num_edges();
  std::vector<char> dead(SE, 0);
  for (int e = 0; e < SE; ++e)
    if (ts.s.strand[e]) dead[e] = dead_comp[comp.of_edge[red.edge_of_sedge[e]]];

  const int A = static_cast<int>(t.arcs.size());
  std::vector<std::vector<int>> top(A), bot(A);
  std::vector<int> new_arc(A, -1);
  BraidPlacement p2;
  Template out;
  std::map<std::pair<int, int>, int> new_inc;  // (arc, top position) -> new incidence
  for (int a = 0; a < A; ++a) {
    const auto& lev = ts.level_edge[a];
    const int len = static_cast<int>(lev.size()) - 1, m = t.arc_size(a);
    for (int p = 0; p < m; ++p) {
      if (!dead[lev[0][p]]) top[a].push_back(p);
      if (!dead[lev[len][p]]) bot[a].push_back(p);
    }
    const int m2 = static_cast<int>(top[a].size());
    if (m2 < 2) continue;
    new_arc[a] = static_cast<int>(out.arcs.size());
    out.arcs.emplace_back();
    std::vector<Letter> letters;
    auto it = p1.find(a);
    bool touched = m2 != m;
    for (int j = 0; j < len; ++j) {
      const Letter& x = it->second.letters[j];
      int lo = x.index - 1;
      if (dead[lev[j][lo]] || dead[lev[j][lo + 1]]) continue;
      int below = 0;
      for (int q = 0; q < lo; ++q) below += dead[lev[j][q]];
      letters.push_back({x.index - below, x.sign});
    }
    BraidWord w(letters, m2);
    p2[new_arc[a]] = touched ? far_commutation_normal(w) : w;
    for (int r = 0; r < m2; ++r) {
      int id = static_cast<int>(out.incidences.size());
      new_inc[{a, top[a][r]}] = id;
      bool end = r == 0 || r == m2 - 1;
      out.incidences.push_back({-1, new_arc[a], end, !end, t.incidences[t.arcs[a][0]].co_orient});
      out.arcs.back().push_back(id);
    }
  }

  // rebuild circles by walking surviving strands through the boxes
  const int I = static_cast<int>(t.incidences.size());
  std::vector<char> visited(I, 0);
  std::map<int, SidePos> seg_map;  // old segment -> new segment (side filled later)
  auto alive_top = [&](int inc) {
    const auto& x = t.incidences[inc];
    return !dead[ts.level_edge[x.arc][0][L.pos_on_arc[inc]]];
  };
  for (int start = 0; start < I; ++start) {
    if (visited[start] || !alive_top(start)) continue;
    struct Ev {
      int inc;
      int seg;
    };
    std::vector<Ev> evs;
    int cur = start;
    do {
      visited[cur] = 1;
      const auto& x = t.incidences[cur];
      int a = x.arc;
      int r = static_cast<int>(std::find(top[a].begin(), top[a].end(), L.pos_on_arc[cur]) - top[a].begin());
      int q = bot[a][r];
      int exit_inc = t.arcs[a][q];
      evs.push_back({cur, L.segment_out(t, exit_inc)});
      cur = L.next_on_circle(t, exit_inc);
    } while (cur != start);
    int c2 = static_cast<int>(out.circles.size());
    out.circles.emplace_back();
    auto first = std::find_if(evs.begin(), evs.end(), [&](const Ev& e) { return new_arc[t.incidences[e.inc].arc] >= 0; });
    if (first == evs.end()) {
      for (const auto& e : evs) seg_map[e.seg] = {c2, 0, true};
      continue;
    }
    std::rotate(evs.begin(), first, evs.end());
    int k = -1;
    for (const auto& e : evs) {
      if (new_arc[t.incidences[e.inc].arc] >= 0) {
        int id = new_inc.at({t.incidences[e.inc].arc, L.pos_on_arc[e.inc]});
        out.incidences[id].circle = c2;
        out.circles[c2].push_back(id);
        ++k;
      }
      seg_map[e.seg] = {c2, k, true};
    }
  }
  for (int c = 0; c < static_cast<int>(t.circles.size()); ++c) {
    if (!t.circles[c].empty()) continue;
    int seg = L.seg_offset[c];
    if (dead[ts.seg_edge[seg]]) continue;
    seg_map[seg] = {static_cast<int>(out.circles.size()), 0, true};
    out.circles.emplace_back();
  }
  if (out.circles.empty()) return {out, p2};

  // nesting: regions of the reduced picture decide where each new piece sits
  Scaffold s2 = ts.s;
  ghost_strands(s2, dead);
  Reduced red2 = reduce(s2);
  RegionMap rm2 = region_map(red2.diagram);
  std::map<std::pair<int, int>, std::array<int, 2>> side_region;  // new (circle, segment) -> regions
  for (const auto& [seg, pos] : seg_map) {
    int e = ts.seg_edge[seg];
    if (side_region.count({pos.circle, pos.segment})) continue;
    side_region[{pos.circle, pos.segment}] = {red2.region_of_sface[red2.sface_of_dart[2 * e]],
                                              red2.region_of_sface[red2.sface_of_dart[2 * e + 1]]};
  }
  int np = 0;
  auto piece = template_pieces(out, &np);
  std::vector<std::vector<std::pair<SidePos, int>>> sides(np);
  for (const auto& [key, regs] : side_region) {
    sides[piece[key.first]].push_back({{key.first, key.second, true}, regs[0]});
    sides[piece[key.first]].push_back({{key.first, key.second, false}, regs[1]});
  }
  std::vector<int> parent_region(np, -2);
  std::map<int, int> found_by{{rm2.outer, -1}};
  std::vector<int> queue{rm2.outer};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int R = queue[qi];
    for (int p = 0; p < np; ++p) {
      if (parent_region[p] != -2) continue;
      bool touches = std::any_of(sides[p].begin(), sides[p].end(), [&](const auto& s) { return s.second == R; });
      if (!touches) continue;
      parent_region[p] = R;
      for (const auto& s : sides[p])
        if (!found_by.count(s.second)) found_by[s.second] = p, queue.push_back(s.second);
    }
  }
  std::vector<TemplateNest> tops, inner;
  for (int p = 0; p < np; ++p) {
    if (parent_region[p] == -2) throw InvariantError("induce: piece not reachable from the outer region");
    int R = parent_region[p];
    auto own = std::find_if(sides[p].begin(), sides[p].end(), [&](const auto& s) { return s.second == R; })->first;
    if (R == rm2.outer) {
      tops.push_back({own, std::nullopt});
    } else {
      int q = found_by.at(R);
      auto host = std::find_if(sides[q].begin(), sides[q].end(), [&](const auto& s) { return s.second == R; })->first;
      inner.push_back({own, host});
    }
  }
  out.nest = tops;
  out.nest.insert(out.nest.end(), inner.begin(), inner.end());
  return {out, p2};
}

std::pair<Template, BraidPlacement> mirror(const Template& t, const BraidPlacement& pi) {
  BraidPlacement out;
  for (const auto& [a, w] : pi) out[a] = mirror(w);
  return {t, out};
}

std::pair<Template, BraidPlacement> reverse(const Template& t, const BraidPlacement& pi) {
  Template out = t;
  for (auto& c : out.circles) std::reverse(c.begin(), c.end());
  for (auto& x : out.incidences) x.co_orient = !x.co_orient;
  auto flip = [&](SidePos p) {
    int n = static_cast<int>(t.circles[p.circle].size());
    if (n > 0) p.segment = ((n - 2 - p.segment) % n + n) % n;
    p.left = !p.left;
    return p;
  };
  for (auto& n : out.nest) {
    n.own = flip(n.own);
    if (n.host) n.host = flip(*n.host);
  }
  BraidPlacement p2;
  for (const auto& [a, w] : pi) p2[a] = reversed(w);
  return {out, p2};
}

std::pair<Template, BraidPlacement> double_letter(const Template& t, const BraidPlacement& pi, int arc, int pos) {
  auto it = pi.find(arc);
  if (it == pi.end() || pos < 0 || pos >= static_cast<int>(it->second.size())) throw InputError("no such letter");
  BraidPlacement out = pi;
  auto& l = out[arc].letters;
  l.insert(l.begin() + pos, l[pos]);
  return {t, out};
}

std::vector<SidePos> outer_sides(const Template& t, const BraidPlacement& pi) {
  Layout L(t);
  TemplateScaffold ts = make_scaffold(t, pi, L);
  Reduced red = reduce(ts.s);
  int outer = region_map(red.diagram).outer;
  std::vector<SidePos> out;
  for (int c = 0; c < static_cast<int>(t.circles.size()); ++c)
    for (int k = 0; k < t.segment_count(c); ++k) {
      int e = ts.seg_edge[L.seg_offset[c] + k];
      for (int side = 0; side < 2; ++side)
        if (red.region_of_sface[red.sface_of_dart[2 * e + side]] == outer) out.push_back({c, k, side == 0});
    }
  return out;
}

std::pair<Template, BraidPlacement> connected_sum(const Template& t1, const BraidPlacement& p1, SidePos s1,
                                                  const Template& t2, const BraidPlacement& p2, SidePos s2) {
  if (t1.nest.size() != 1 || t2.nest.size() != 1) throw InputError("template sum needs connected summands");
  auto o1 = outer_sides(t1, p1), o2 = outer_sides(t2, p2);
  if (std::find(o1.begin(), o1.end(), s1) == o1.end()) throw InputError("first segment is not on the outer face");
  if (std::find(o2.begin(), o2.end(), s2) == o2.end()) throw InputError("second segment is not on the outer face");
  if (s1.left != s2.left) throw InputError("outer faces meet the segments on opposite sides");
  Template out;
  const int I1 = static_cast<int>(t1.incidences.size()), C1 = static_cast<int>(t1.circles.size());
  const int A1 = static_cast<int>(t1.arcs.size());
  auto circ2 = [&](int c) { return c == s2.circle ? s1.circle : C1 + c - (c > s2.circle ? 1 : 0); };
  out.incidences = t1.incidences;
  for (auto x : t2.incidences) {
    x.circle = circ2(x.circle);
    x.arc += A1;
    out.incidences.push_back(x);
  }
  out.arcs = t1.arcs;
  for (auto a : t2.arcs) {
    for (int& i : a) i += I1;
    out.arcs.push_back(a);
  }
  out.circles = t1.circles;
  for (int c = 0; c < static_cast<int>(t2.circles.size()); ++c) {
    if (c == s2.circle) continue;
    auto l = t2.circles[c];
    for (int& i : l) i += I1;
    out.circles.push_back(l);
  }
  auto rotated = [](std::vector<int> l, int k, int off) {
    if (!l.empty()) std::rotate(l.begin(), l.begin() + (k + 1) % l.size(), l.end());
    for (int& i : l) i += off;
    return l;
  };
  auto a = rotated(t1.circles[s1.circle], s1.segment, 0);
  auto b = rotated(t2.circles[s2.circle], s2.segment, I1);
  std::vector<int> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  out.circles[s1.circle] = merged;
  int seg = merged.empty() ? 0 : static_cast<int>(merged.size()) - 1;
  out.nest = {{{s1.circle, seg, s1.left}, std::nullopt}};
  BraidPlacement pi = p1;
  for (const auto& [k, w] : p2) pi[k + A1] = w;
  return {out, pi};
}

namespace {

nlohmann::json side_json(const SidePos& p) {
  return {{"circle", p.circle}, {"segment", p.segment}, {"side", p.left ? "left" : "right"}};
}

SidePos side_from(const nlohmann::json& j) {
  SidePos p;
  p.circle = j.at("circle").get<int>();
  p.segment = j.value("segment", 0);
  std::string side = j.value("side", std::string("left"));
  if (side != "left" && side != "right") throw InputError("side must be left or right");
  p.left = side == "left";
  return p;
}

bool bit(const nlohmann::json& j) { return j.is_boolean() ? j.get<bool>() : j.get<int>() != 0; }

}  // namespace

nlohmann::json template_to_json(const Template& t) {
  nlohmann::json j;
  j["circles"] = nlohmann::json::array();
  for (std::size_t c = 0; c < t.circles.size(); ++c) j["circles"].push_back({{"id", c}, {"incidences", t.circles[c]}});
  j["arcs"] = nlohmann::json::array();
  for (std::size_t a = 0; a < t.arcs.size(); ++a) j["arcs"].push_back({{"id", a}, {"incidences", t.arcs[a]}});
  j["incidences"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.incidences.size(); ++i) {
    const auto& x = t.incidences[i];
    j["incidences"].push_back({{"id", i},
                               {"circle", x.circle},
                               {"arc", x.arc},
                               {"kind", x.endpoint ? "endpoint" : "transversal"},
                               {"side_change", static_cast<int>(x.side_change)},
                               {"co_orient", static_cast<int>(x.co_orient)}});
  }
  if (!t.nest.empty()) j["outer_face"] = side_json(t.nest[0].own);
  if (t.nest.size() > 1) {
    j["nesting"] = nlohmann::json::array();
    for (std::size_t k = 1; k < t.nest.size(); ++k) {
      auto r = side_json(t.nest[k].own);
      r["host"] = t.nest[k].host ? side_json(*t.nest[k].host) : nlohmann::json(nullptr);
      j["nesting"].push_back(r);
    }
  }
  return j;
}

Template template_from_json(const nlohmann::json& j) {
  Template t;
  try {
    auto ids = [](const nlohmann::json& list, const char* what) {
      std::vector<nlohmann::json> out;
      int k = 0;
      for (const auto& x : list) {
        if (x.at("id").get<int>() != k++) throw InputError(std::string(what) + " ids must be 0,1,2,... in order");
        out.push_back(x);
      }
      return out;
    };
    for (const auto& c : ids(j.at("circles"), "circle")) t.circles.push_back(c.at("incidences").get<std::vector<int>>());
    for (const auto& a : ids(j.value("arcs", nlohmann::json::array()), "arc"))
      t.arcs.push_back(a.at("incidences").get<std::vector<int>>());
    for (const auto& x : ids(j.value("incidences", nlohmann::json::array()), "incidence")) {
      Incidence in;
      in.circle = x.at("circle").get<int>();
      in.arc = x.at("arc").get<int>();
      std::string kind = x.at("kind").get<std::string>();
      if (kind != "endpoint" && kind != "transversal") throw InputError("incidence kind must be endpoint or transversal");
      in.endpoint = kind == "endpoint";
      in.side_change = x.contains("side_change") ? bit(x["side_change"]) : !in.endpoint;
      in.co_orient = bit(x.at("co_orient"));
      t.incidences.push_back(in);
    }
    t.nest.push_back({side_from(j.at("outer_face")), std::nullopt});
    if (j.contains("nesting"))
      for (const auto& n : j["nesting"]) {
        TemplateNest r{side_from(n), std::nullopt};
        if (n.contains("host") && !n["host"].is_null()) r.host = side_from(n["host"]);
        t.nest.push_back(r);
      }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("template json: ") + ex.what());
  }
  return t;
}

nlohmann::json placement_to_json(const BraidPlacement& pi) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [a, w] : pi) j[std::to_string(a)] = w.str();
  return j;
}

BraidPlacement placement_from_json(const nlohmann::json& j, const Template& t) {
  BraidPlacement pi;
  if (!j.is_object()) throw InputError("placement must be a JSON object mapping arc id to word");
  for (const auto& [key, val] : j.items()) {
    int a;
    try {
      a = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("placement key is not an arc id: " + key);
    }
    if (a < 0 || a >= static_cast<int>(t.arcs.size())) throw InputError("placement for unknown arc " + key);
    if (!val.is_string()) throw InputError("placement word must be a string");
    BraidWord w = BraidWord::parse(val.get<std::string>());
    pi[a] = BraidWord(w.letters, std::max(w.strands, t.arc_size(a)));
  }
  return pi;
}

}  // namespace kc
