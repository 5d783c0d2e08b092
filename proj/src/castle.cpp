#include "knotcert/castle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "knotcert/errors.hpp"
#include "scaffold.hpp"

namespace kc {

namespace {

int circle_half_edge(const Diagram& d, const SeifertPicture& p, int c, int circle, int parity) {
  for (int h : d.crossings[c].slot)
    if ((h & 1) == parity && p.circle_of_edge[h >> 1] == circle) return h >> 1;
  throw InvariantError("castle: crossing " + std::to_string(c) + " is not on circle " + std::to_string(circle));
}

int other_circle(const SeifertPicture& p, int c, int circle) {
  auto cc = p.crossing_circles[c];
  return cc[0] == circle ? cc[1] : cc[0];
}

int position(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

// edges of a floor strictly between two of its crossings
std::vector<int> between(const Floor& f, int a, int b) {
  int i = position(f.crossings, a), j = position(f.crossings, b);
  if (i > j) std::swap(i, j);
  return {f.edges.begin() + i + 1, f.edges.begin() + j + 1};
}

}  // namespace

Castle build_castle(const Diagram& d, int circle, int base_edge) {
  Castle k;
  k.diagram = d;
  k.picture = seifert_smooth(d);
  const auto& p = k.picture;
  if (circle < 0 || circle >= p.size()) throw InputError("unknown circle " + std::to_string(circle));
  auto inner = innermost_circles(d);
  if (std::find(inner.begin(), inner.end(), circle) == inner.end())
    throw InputError("circle " + std::to_string(circle) + " is not innermost");
  if (base_edge < 0 || base_edge >= d.num_edges() || p.circle_of_edge[base_edge] != circle)
    throw InputError("base point is not on the circle");
  k.circle = circle;
  k.base_edge = base_edge;
  k.floor_of_circle.assign(p.size(), -1);

  Floor f0;
  f0.circle = circle;
  const auto& ce = p.circles[circle];
  int at = position(ce, base_edge);
  for (std::size_t i = 0; i < ce.size(); ++i) {
    int e = ce[(at + i) % ce.size()];
    f0.edges.push_back(e);
    if (d.head(e) >= 0) f0.crossings.push_back(d.head(e));
  }
  k.floors.push_back(f0);
  k.floor_of_circle[circle] = 0;

  for (std::size_t fi = 0; fi < k.floors.size(); ++fi) {
    const Floor F = k.floors[fi];
    std::vector<int> order;
    std::map<int, std::pair<int, int>> span;  // circle -> (first, last) shared crossing
    for (int c : F.crossings) {
      int b = other_circle(p, c, F.circle);
      if (k.floor_of_circle[b] >= 0) continue;
      auto it = span.find(b);
      if (it == span.end()) {
        span[b] = {c, c};
        order.push_back(b);
      } else {
        it->second.second = c;
      }
    }
    for (int b : order) {
      auto [first, last] = span[b];
      Floor g;
      g.circle = b;
      g.level = F.level + 1;
      g.parent = static_cast<int>(fi);
      int e = circle_half_edge(d, p, first, b, 1);
      int stop = circle_half_edge(d, p, last, b, 0);
      for (int guard = 0;; ++guard) {
        if (guard > d.num_edges()) throw InvariantError("castle: floor walk does not close");
        g.edges.push_back(e);
        if (e == stop && !g.crossings.empty()) break;
        g.crossings.push_back(d.head(e));
        e = d.seifert_next(e);
      }
      k.floor_of_circle[b] = static_cast<int>(k.floors.size());
      k.floors.push_back(std::move(g));
    }
  }

  for (int c = 0; c < d.num_crossings(); ++c) {
    auto cc = p.crossing_circles[c];
    int a = k.floor_of_circle[cc[0]], b = k.floor_of_circle[cc[1]];
    if (a < 0 || b < 0) continue;
    if (position(k.floors[a].crossings, c) < 0 || position(k.floors[b].crossings, c) < 0) continue;
    k.ladders.push_back(c);
    k.ladder_floors.push_back({std::min(a, b), std::max(a, b)});
  }
  return k;
}

std::vector<std::string> castle_invariant_errors(const Castle& k) {
  std::vector<std::string> err;
  int zero = 0;
  for (const auto& f : k.floors) zero += f.level == 0;
  if (zero != 1) err.push_back("level-0 floor count is " + std::to_string(zero));
  std::vector<int> per_circle(k.picture.size(), 0);
  for (const auto& f : k.floors)
    if (++per_circle[f.circle] == 2) err.push_back("circle " + std::to_string(f.circle) + " carries two floors");
  std::set<std::pair<int, int>> pairs(k.ladder_floors.begin(), k.ladder_floors.end());
  const int n = static_cast<int>(k.floors.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : pairs) adj[a].push_back(b), adj[b].push_back(a);
  std::vector<int> depth(n, -1);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[queue[qi]])
      if (depth[w] < 0) depth[w] = depth[queue[qi]] + 1, queue.push_back(w);
  if (static_cast<int>(queue.size()) != n) err.push_back("floor graph is disconnected");
  if (static_cast<int>(pairs.size()) != n - 1) err.push_back("floor graph is not a tree");
  for (int i = 0; i < n; ++i)
    if (depth[i] >= 0 && depth[i] != k.floors[i].level)
      err.push_back("floor " + std::to_string(i) + " level differs from its depth");
  return err;
}

std::vector<Trap> find_traps(const Castle& k) {
  std::vector<Trap> out;
  const Diagram& d = k.diagram;
  if (k.ladders.size() < 2) return out;
  RegionMap rm = region_map(d);
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (std::size_t i = 0; i < k.ladders.size(); ++i) by_pair[k.ladder_floors[i]].push_back(k.ladders[i]);
  for (auto& [fp, ls] : by_pair) {
    int f1 = fp.first, f2 = fp.second;
    if (k.floors[f1].level > k.floors[f2].level) std::swap(f1, f2);
    const Floor& F1 = k.floors[f1];
    const Floor& F2 = k.floors[f2];
    std::sort(ls.begin(), ls.end(),
              [&](int a, int b) { return position(F1.crossings, a) < position(F1.crossings, b); });
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      int s1 = ls[i], s2 = ls[i + 1];
      std::vector<char> eb(d.num_edges(), 0), cb(d.num_crossings(), 0);
      for (int e : between(F1, s1, s2)) eb[e] = 1;
      for (int e : between(F2, s1, s2)) eb[e] = 1;
      cb[s1] = cb[s2] = 1;
      auto reached = reach_regions(d, rm, rm.region_of_dart(2 * k.base_edge), eb, cb);
      Trap t{f1, f2, s1, s2, -1, {}};
      for (int g = 0; g < static_cast<int>(k.floors.size()); ++g) {
        const Floor& G = k.floors[g];
        if (G.circle == F1.circle || G.circle == F2.circle) continue;
        if (!reached[rm.region_of_dart(2 * G.edges[0])]) t.interior.push_back(g);
      }
      if (!t.interior.empty()) {
        t.inner = t.interior[0];
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::string castle_dot(const Castle& k, const std::vector<Trap>& traps) {
  std::ostringstream os;
  std::set<int> hot;
  for (const auto& t : traps) hot.insert({t.s1, t.s2});
  os << "graph castle {\n  rankdir=BT;\n";
  int top = 0;
  for (const auto& f : k.floors) top = std::max(top, f.level);
  for (int lv = 0; lv <= top; ++lv) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < k.floors.size(); ++i)
      if (k.floors[i].level == lv) os << " f" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < k.floors.size(); ++i)
    os << "  f" << i << " [shape=box, label=\"circle " << k.floors[i].circle << "\\nlevel " << k.floors[i].level
       << "\"];\n";
  for (std::size_t i = 0; i < k.ladders.size(); ++i) {
    os << "  f" << k.ladder_floors[i].first << " -- f" << k.ladder_floors[i].second << " [label=\"x" << k.ladders[i]
       << "\"";
    if (hot.count(k.ladders[i])) os << ", color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

AppropriatePair find_appropriate_pair(const Diagram& d, const std::vector<char>& outside,
                                      std::optional<std::pair<int, int>> start) {
  if (static_cast<int>(outside.size()) != d.num_edges()) throw InputError("box flags do not match the diagram");
  auto p = seifert_smooth(d);
  auto rm = region_map(d);
  auto inner = innermost_circles(d);
  // bounded-side innermost circles first
  std::stable_partition(inner.begin(), inner.end(), [&](int c) {
    return std::find(p.parent.begin(), p.parent.end(), c) == p.parent.end();
  });
  auto first_outside = [&](int circle) {
    int best = -1;
    for (int e : p.circles[circle])
      if (outside[e] && (best < 0 || e < best)) best = e;
    return best;
  };
  AppropriatePair ans;
  if (start) {
    ans.circle = start->first;
    ans.edge = start->second;
    if (!outside[ans.edge]) throw InputError("start base point lies inside a braid box");
  } else {
    for (int c : inner)
      if ((ans.edge = first_outside(c)) >= 0) {
        ans.circle = c;
        break;
      }
    if (ans.edge < 0) throw InvariantError("no innermost circle reaches outside the braid boxes");
  }
  const int cap = std::max(4, d.num_crossings() * p.size());
  for (;;) {
    Castle k = build_castle(d, ans.circle, ans.edge);
    auto traps = find_traps(k);
    if (traps.empty()) return ans;
    if (++ans.iterations > cap) throw InvariantError("appropriate pair search exceeded its iteration cap");
    const Trap& tr = traps[0];
    // a floor inside the trap hanging off one of its two floors
    int cp = -1, side = -1;
    for (int g : tr.interior) {
      for (std::size_t i = 0; i < k.ladders.size() && cp < 0; ++i) {
        auto [a, b] = k.ladder_floors[i];
        int o = a == g ? b : (b == g ? a : -1);
        if (o == tr.f1 || o == tr.f2) cp = g, side = o;
      }
      if (cp >= 0) break;
    }
    if (cp < 0) cp = tr.inner, side = tr.f1;
    int Cp = k.floors[cp].circle;
    auto left = circle_left_side(d, rm, p, Cp);
    bool x_left = left[rm.region_of_dart(2 * ans.edge)];
    int Cpp = -1;
    for (int c : inner) {
      if (c == Cp) continue;
      if (left[rm.region_of_dart(2 * p.circles[c][0])] != x_left) {
        Cpp = c;
        break;
      }
    }
    if (Cpp < 0) Cpp = Cp;
    const Floor& Fj = k.floors[side];
    auto sub = between(Fj, tr.s1, tr.s2);
    std::set<int> sub_set(sub.begin(), sub.end()), fj_set(Fj.edges.begin(), Fj.edges.end());
    std::vector<int> cand;
    for (int e : p.circles[Cpp])
      if (outside[e]) cand.push_back(e);
    std::sort(cand.begin(), cand.end());
    if (cand.empty()) throw InvariantError("derived circle does not reach outside the braid boxes");
    int y = -1;
    for (int e : cand) {
      Castle k2 = build_castle(d, Cpp, e);
      int g = k2.floor_of_circle[Fj.circle];
      bool ok = true;
      if (g >= 0) {
        const auto& ge = k2.floors[g].edges;
        bool meets = std::any_of(ge.begin(), ge.end(), [&](int x) { return fj_set.count(x) > 0; });
        if (meets) ok = std::all_of(ge.begin(), ge.end(), [&](int x) { return sub_set.count(x) > 0; });
      }
      if (ok) {
        y = e;
        break;
      }
    }
    if (y < 0) {
      y = cand[0];
      ans.fallback = true;
    }
    ans.circle = Cpp;
    ans.edge = y;
  }
}

namespace {

struct SpecialChooser {
  const Diagram* root;
  std::vector<char> outside;
  int fallbacks = 0;
  int calls = 0;
  std::unordered_map<std::string, int> cache;

  int operator()(const PhaseContext& ctx) {
    const Diagram& D = *root;
    std::string key(ctx.state.begin(), ctx.state.end());
    bool any = false;
    for (int ph : ctx.edge_phase) {
      key.push_back(ph >= 0 ? '1' : '0');
      any |= ph < 0;
    }
    if (!any) return -1;
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    ++calls;
    Scaffold s = to_scaffold(D);
    for (int c = 0; c < D.num_crossings(); ++c) {
      if (ctx.state[c] == kFlip) flip_vertex(s, c);
      if (ctx.state[c] == kSmooth) smooth_vertex(s, c);
    }
    std::vector<char> doomed(s.num_edges(), 0);
    for (int e = 0; e < D.num_edges(); ++e) doomed[e] = ctx.edge_phase[e] >= 0;
    ghost_strands(s, doomed);
    Reduced r = reduce(s);
    const Diagram& dd = r.diagram;
    std::vector<char> out2(dd.num_edges(), 0);
    for (int e = 0; e < dd.num_edges(); ++e)
      for (int t : r.edge_tags[e]) out2[e] |= outside[t];
    auto pr = find_appropriate_pair(dd, out2);
    fallbacks += pr.fallback;
    int y = -1;
    for (int t : r.edge_tags[pr.edge])
      if (outside[t]) {
        y = t;
        break;
      }
    if (y < 0 || ctx.edge_phase[y] >= 0) throw InvariantError("special tree: base point lost in the induced diagram");
    cache.emplace(std::move(key), y);
    return y;
  }
};

}  // namespace

SpecialTree build_special_tree(const Template& t, const BraidPlacement& pi, Flavor flavor) {
  auto errs = validate(t, pi);
  if (!errs.empty()) throw InputError("template: " + errs[0]);
  auto [d, box] = build_diagram(t, pi);
  auto ch = std::make_shared<SpecialChooser>();
  ch->root = &d;
  ch->outside = box.outside;
  TreeOptions opt;
  opt.strategy = flavor == Flavor::X ? Strategy::x_coherent : Strategy::y_coherent;
  opt.chooser = [ch](const PhaseContext& c) { return (*ch)(c); };
  SpecialTree st;
  st.tree = build_tree(d, opt);
  st.fallbacks = ch->fallbacks;
  st.chooser_calls = ch->calls;
  return st;
}

Laurent2 special_homfly(const Template& t, const BraidPlacement& pi, Flavor flavor) {
  auto errs = validate(t, pi);
  if (!errs.empty()) throw InputError("template: " + errs[0]);
  auto [d, box] = build_diagram(t, pi);
  auto ch = std::make_shared<SpecialChooser>();
  ch->root = &d;
  ch->outside = box.outside;
  TreeOptions opt;
  opt.strategy = flavor == Flavor::X ? Strategy::x_coherent : Strategy::y_coherent;
  opt.chooser = [ch](const PhaseContext& c) { return (*ch)(c); };
  return skein_sum(d, opt);
}

}  // namespace kc
