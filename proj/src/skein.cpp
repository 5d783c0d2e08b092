#include "knotcert/skein.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "knotcert/errors.hpp"

namespace kc {

namespace {

int seifert_out(int sign, int in) {
  if (sign > 0) return in == 0 ? 1 : 2;
  return in == 0 ? 3 : 2;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Laurent2 delta_pow(int k) {
  static std::mutex mu;
  static std::vector<Laurent2> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(Laurent2::constant(1));
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * unlink_poly(2));
  return cache[k];
}

class Engine {
 public:
  Engine(const Diagram& d, const TreeOptions& opt, ResolutionTree* out) : d_(d), opt_(opt), out_(out) {
    const int X = d.num_crossings(), E = d.num_edges();
    sign_.resize(X);
    for (int c = 0; c < X; ++c) sign_[c] = d.sign(c);
    writhe_ = d.writhe();
    state_.assign(X, kOrig);
    seen_.assign(X, 0);
    edge_phase_.assign(E, -1);
    if (opt.strategy != Strategy::descending) {
      auto p = seifert_smooth(d);
      cw_.resize(E);
      for (int e = 0; e < E; ++e) cw_[e] = p.orientation[p.circle_of_edge[e]] == Orientation::clockwise;
    }
    if (out_) {
      out_->root = d;
      out_->root_writhe = writhe_;
      out_->nodes.push_back({});
    }
  }

  void run() { start_phase(); }

  std::map<std::array<int, 4>, std::int64_t> histogram;

 private:
  const Diagram& d_;
  const TreeOptions& opt_;
  ResolutionTree* out_;
  std::vector<int> sign_;
  std::vector<char> cw_;
  int writhe_ = 0;
  std::vector<std::uint8_t> state_;
  std::vector<char> seen_;
  std::vector<int> edge_phase_;
  std::vector<int> bases_;
  std::vector<int> trail_;  // >= 0: edge marked; < 0: ~crossing marked seen
  int t_ = 0, t_minus_ = 0, dw_ = 0;
  int node_ = 0;

  int choose() {
    if (opt_.chooser) {
      PhaseContext ctx{d_, state_, edge_phase_, static_cast<int>(bases_.size())};
      int b = opt_.chooser(ctx);
      if (b < 0) {
        for (int p : edge_phase_)
          if (p < 0) throw InvariantError("base chooser gave up with untravelled edges left");
        return -1;
      }
      if (b >= d_.num_edges() || edge_phase_[b] >= 0) throw InvariantError("base chooser returned a travelled edge");
      return b;
    }
    if (opt_.seed == 0) {
      for (int e = 0; e < d_.num_edges(); ++e)
        if (edge_phase_[e] < 0) return e;
      return -1;
    }
    std::vector<int> free;
    std::uint64_t h = opt_.seed;
    for (int e = 0; e < d_.num_edges(); ++e)
      if (edge_phase_[e] < 0) free.push_back(e);
    if (free.empty()) return -1;
    for (auto s : state_) h = mix(h ^ s);
    for (int p : edge_phase_) h = mix(h ^ static_cast<std::uint64_t>(p + 1));
    return free[h % free.size()];
  }

  bool descending_for(int b) const {
    switch (opt_.strategy) {
      case Strategy::descending: return true;
      case Strategy::x_coherent: return cw_[b];
      case Strategy::y_coherent: return !cw_[b];
    }
    return true;
  }

  void start_phase() {
    int b = choose();
    if (b < 0) {
      leaf();
      return;
    }
    bases_.push_back(b);
    walk(b, b, descending_for(b));
    bases_.pop_back();
  }

  int out_edge(int c, int k) const {
    const auto& s = d_.crossings[c].slot;
    return (state_[c] == kSmooth ? s[seifert_out(sign_[c], k)] : s[(k + 2) & 3]) >> 1;
  }

  void walk(int e, int base, bool desc) {
    const int phase = static_cast<int>(bases_.size()) - 1;
    std::size_t mark = trail_.size();
    for (;;) {
      edge_phase_[e] = phase;
      trail_.push_back(e);
      int c = d_.head(e);
      int next = e;
      if (c >= 0) {
        int k = d_.head_slot(e);
        if (!seen_[c]) {
          bool over = k != 0;
          if (over != desc) {
            branch(c, k, base, desc);
            break;
          }
          seen_[c] = 1;
          trail_.push_back(~c);
        }
        next = out_edge(c, k);
      }
      if (next == base) {
        start_phase();
        break;
      }
      e = next;
    }
    undo(mark);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      if (x >= 0)
        edge_phase_[x] = -1;
      else
        seen_[~x] = 0;
    }
  }

  void branch(int c, int k, int base, bool desc) {
    const int parent = node_;
    for (std::uint8_t op : {kFlip, kSmooth}) {
      state_[c] = op;
      seen_[c] = 1;
      if (op == kFlip) {
        dw_ -= 2 * sign_[c];
      } else {
        dw_ -= sign_[c];
        ++t_;
        if (sign_[c] < 0) ++t_minus_;
      }
      if (out_) {
        int id = static_cast<int>(out_->nodes.size());
        TreeNode n;
        n.parent = parent;
        n.crossing = c;
        n.op = op;
        out_->nodes.push_back(n);
        out_->nodes[parent].children[op == kFlip ? 0 : 1] = id;
        node_ = id;
      }
      int next = out_edge(c, k);
      if (next == base)
        start_phase();
      else
        walk(next, base, desc);
      if (op == kFlip) {
        dw_ += 2 * sign_[c];
      } else {
        dw_ += sign_[c];
        --t_;
        if (sign_[c] < 0) --t_minus_;
      }
      state_[c] = kOrig;
      seen_[c] = 0;
      node_ = parent;
    }
  }

  void leaf() {
    const int gamma = static_cast<int>(bases_.size());
    ++histogram[{t_minus_ & 1, dw_, t_, gamma}];
    if (!out_) return;
    if (out_->leaves.size() >= opt_.leaf_cap) throw ResourceError("resolution tree exceeds the leaf cap");
    LeafInfo L;
    L.t = t_;
    L.t_minus = t_minus_;
    L.t_plus = t_ - t_minus_;
    L.omega = writhe_ + dw_;
    L.gamma = gamma;
    L.phase_bases = bases_;
    L.state = state_;
    for (int c = 0; c < d_.num_crossings(); ++c) {
      if (state_[c] == kSmooth) continue;
      const auto& s = d_.crossings[c].slot;
      int other_in = (s[1] & 1) ? s[1] : s[3];
      if (edge_phase_[s[0] >> 1] == edge_phase_[other_in >> 1]) ++L.self_crossings;
    }
    out_->nodes[node_].leaf = static_cast<int>(out_->leaves.size());
    out_->leaves.push_back(std::move(L));
  }
};

Laurent2 sum_histogram(const std::map<std::array<int, 4>, std::int64_t>& h) {
  Laurent2 out;
  for (const auto& [k, n] : h) {
    auto [parity, dw, t, gamma] = k;
    Laurent2 term = Laurent2::monomial(parity ? -n : n, dw, t) * delta_pow(gamma - 1);
    out += term;
  }
  return out;
}

}  // namespace

ResolutionTree build_tree(const Diagram& d, const TreeOptions& opt) {
  ResolutionTree t;
  Engine eng(d, opt, &t);
  eng.run();
  return t;
}

Laurent2 leaf_term(const LeafInfo& L, int root_writhe) {
  if (L.gamma == 0) return Laurent2::constant(1);
  return Laurent2::monomial((L.t_minus & 1) ? -1 : 1, L.omega - root_writhe, L.t) * delta_pow(L.gamma - 1);
}

Laurent2 evaluate_tree(const ResolutionTree& t) {
  std::map<std::array<int, 4>, std::int64_t> h;
  for (const auto& L : t.leaves) {
    if (L.gamma == 0) return Laurent2::constant(1);
    ++h[{L.t_minus & 1, L.omega - t.root_writhe, L.t, L.gamma}];
  }
  return sum_histogram(h);
}

Laurent2 skein_sum(const Diagram& d, const TreeOptions& opt) {
  if (d.empty()) return Laurent2::constant(1);
  Engine eng(d, opt, nullptr);
  eng.run();
  return sum_histogram(eng.histogram);
}

Diagram leaf_diagram(const ResolutionTree& t, int leaf) {
  return apply_surgeries(t.root, t.leaves.at(leaf).state);
}

namespace {
std::mutex memo_mu;
std::unordered_map<std::string, Laurent2> memo;
}  // namespace

Laurent2 homfly(const Diagram& d) {
  std::string key = canonical_code(d);
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Laurent2 p = skein_sum(d);
  std::lock_guard<std::mutex> lock(memo_mu);
  memo.emplace(key, p);
  return p;
}

void clear_homfly_cache() {
  std::lock_guard<std::mutex> lock(memo_mu);
  memo.clear();
}

std::string tree_dot(const ResolutionTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    os << "  n" << i << " [label=\"";
    if (n.crossing < 0)
      os << "root";
    else
      os << (n.op == kFlip ? "flip " : "smooth ") << n.crossing;
    if (n.leaf >= 0) {
      const auto& L = t.leaves[n.leaf];
      os << "\\nt=" << L.t << " w=" << L.omega << " g=" << L.gamma;
    }
    os << "\"];\n";
    if (n.parent >= 0) os << "  n" << n.parent << " -> n" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kc
