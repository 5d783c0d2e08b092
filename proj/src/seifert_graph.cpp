#include "knotcert/seifert_graph.hpp"

#include <algorithm>
#include <sstream>

namespace kc {

SeifertGraph seifert_graph(const Diagram& d) {
  auto p = seifert_smooth(d);
  SeifertGraph g;
  g.vertices = p.size();
  for (int c = 0; c < d.num_crossings(); ++c)
    g.edges.push_back({p.crossing_circles[c][0], p.crossing_circles[c][1], d.sign(c), c});
  return g;
}

std::vector<Block> blocks(const SeifertGraph& g) {
  const int V = g.vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbour, edge)
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    adj[g.edges[i].u].push_back({g.edges[i].v, i});
    if (g.edges[i].u != g.edges[i].v) adj[g.edges[i].v].push_back({g.edges[i].u, i});
  }
  std::vector<int> disc(V, -1), low(V, 0);
  std::vector<int> estack;
  std::vector<Block> out;
  int timer = 0;
  auto emit = [&](int stop_edge) {
    Block b;
    for (;;) {
      int e = estack.back();
      estack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(g.edges[e].u);
      b.vertices.push_back(g.edges[e].v);
      if (e == stop_edge) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out.push_back(std::move(b));
  };
  struct Frame {
    int v, via, next;
  };
  for (int root = 0; root < V; ++root) {
    if (disc[root] >= 0) continue;
    if (adj[root].empty()) {
      disc[root] = timer++;
      out.push_back({{root}, {}});
      continue;
    }
    std::vector<Frame> st{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.next < static_cast<int>(adj[f.v].size())) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.via) continue;
        if (disc[w] < 0) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          estack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        } else if (w == f.v) {
          estack.push_back(e);
        }
      } else {
        Frame done = f;
        st.pop_back();
        if (st.empty()) break;
        int u = st.back().v;
        low[u] = std::min(low[u], low[done.v]);
        if (low[done.v] >= disc[u]) emit(done.via);
      }
    }
  }
  return out;
}

bool is_bipartite(const SeifertGraph& g) {
  std::vector<int> col(g.vertices, -1);
  std::vector<std::vector<int>> adj(g.vertices);
  for (const auto& e : g.edges) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);
  for (int s = 0; s < g.vertices; ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    std::vector<int> st{s};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v]) {
        if (col[w] < 0) {
          col[w] = col[v] ^ 1;
          st.push_back(w);
        } else if (col[w] == col[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_homogeneous(const Diagram& d) {
  auto g = seifert_graph(d);
  for (const auto& b : blocks(g))
    for (int e : b.edges)
      if (g.edges[e].sign != g.edges[b.edges[0]].sign) return false;
  return true;
}

bool is_alternating(const Diagram& d) {
  auto comp = components(d);
  std::vector<char> done(comp.count, 0);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (done[comp.of_edge[e]]++) continue;
    std::vector<int> overs;
    int x = e;
    do {
      if (d.head(x) >= 0) overs.push_back(d.head_slot(x) != 0);
      x = d.strand_next(x);
    } while (x != e);
    for (std::size_t i = 0; i < overs.size(); ++i)
      if (overs[i] == overs[(i + 1) % overs.size()]) return false;
  }
  return true;
}

DiagramClass classify(const Diagram& d, const std::optional<std::pair<Template, BraidPlacement>>& tp) {
  DiagramClass k;
  k.homogeneous = is_homogeneous(d);
  int pos = 0, neg = 0;
  for (int c = 0; c < d.num_crossings(); ++c) (d.sign(c) > 0 ? pos : neg)++;
  k.positive = neg == 0;
  k.negative = pos == 0;
  k.alternating = is_alternating(d);
  if (tp && is_knitted(tp->first)) {
    k.locally_twisted = true;
    for (int a = 0; a < static_cast<int>(tp->first.arcs.size()); ++a) {
      auto it = tp->second.find(a);
      BraidWord w = it == tp->second.end() ? BraidWord({}, tp->first.arc_size(a)) : it->second;
      if (!locally_twisted_check(w, TwistMode::both).ok) k.locally_twisted = false;
    }
  }
  k.lth = k.homogeneous && k.locally_twisted;
  return k;
}

std::string seifert_graph_dot(const SeifertGraph& g) {
  std::ostringstream os;
  os << "graph seifert {\n";
  for (int v = 0; v < g.vertices; ++v) os << "  c" << v << ";\n";
  for (const auto& e : g.edges)
    os << "  c" << e.u << " -- c" << e.v << " [label=\"" << (e.sign > 0 ? "+" : "-") << "\", xlabel=\"x" << e.crossing
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace kc
