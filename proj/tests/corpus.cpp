#include "corpus.hpp"

#include <algorithm>
#include <random>

namespace kc::corpus {

const std::vector<std::string>& showcase_words() {
  static const std::vector<std::string> w = {
      "-1 2 -1 2 -1 2 -1 2 -1",
      "-2 -3 -2 1 -3 -2 -3 -2 1",
      "-2 -3 -2 1 -2 1 -3 -2 1",
      "-2 -3 -2 1 4 -2 -3 1 -2 4",
      "-2 -1 -2 3 -2 4 3 -1 -2 4 3 4",
      "-1 -2 -1 -3 -2 -1 -3 -2 -1 -3 -2 -3",
  };
  return w;
}

std::string layered_word() { return "-1 -6 -2 -5 -1 -4 -6 3 -5 -1 -6 -1 -4 3 -5 -2 -4 -6 -1 3 -5 -2 -4"; }

std::vector<std::pair<std::string, BraidWord>> torus_words() {
  std::vector<std::pair<std::string, BraidWord>> out;
  for (int q = 2; q <= 7; ++q) {
    std::string s;
    for (int i = 0; i < q; ++i) s += "1 ";
    out.push_back({"s1^" + std::to_string(q), BraidWord::parse(s, 2)});
  }
  for (int q = 3; q <= 6; ++q) {
    std::string s;
    for (int i = 0; i < q; ++i) s += "1 2 ";
    out.push_back({"(s1s2)^" + std::to_string(q), BraidWord::parse(s, 3)});
  }
  out.push_back({"(s1s2s1)^2", BraidWord::parse("1 2 1 1 2 1", 3)});
  BraidWord delta = half_twist_word(1, 4, 1, 4);
  for (int k = 0; k <= 2; ++k) {
    BraidWord w = delta;
    for (int i = 0; i < k; ++i) w = concat(w, BraidWord::parse("1 2 3", 4));
    w = concat(w, delta);
    out.push_back({"D4(s1s2s3)^" + std::to_string(k) + "D4", w});
  }
  return out;
}

Instance closure(const std::string& name, const BraidWord& w) {
  auto [t, pi] = alexander_closure(w);
  return {name, t, pi, true};
}

std::vector<Instance> random_lt(int count, std::uint64_t seed, int max_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 2 + static_cast<int>(rng() % 4);
    SignPattern r(n - 1);
    for (int& x : r) x = (rng() & 1) ? 1 : -1;
    auto bp = layer_breakpoints(r, n);
    int need = 0;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) need += (bp[k + 1] - bp[k] + 1) * (bp[k + 1] - bp[k]);
    if (need > max_crossings) continue;
    int budget = need + static_cast<int>(rng() % (max_crossings - need + 1));
    BraidWord w = random_locally_twisted_word(r, budget, rng());
    out.push_back(closure("lt" + std::to_string(out.size()) + ":" + w.str(), w));
  }
  return out;
}

BraidWord random_word(std::uint64_t seed, int max_strands, int max_len) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % (max_strands - 1));
  int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<Letter> l;
  for (int i = 0; i < len; ++i) l.push_back({1 + static_cast<int>(rng() % (n - 1)), (rng() & 1) ? 1 : -1});
  return BraidWord(std::move(l), n);
}

std::vector<Instance> golden() {
  std::vector<Instance> out;
  int k = 1;
  for (const auto& w : showcase_words()) out.push_back(closure("show-" + std::to_string(k++), BraidWord::parse(w)));
  for (const auto& [name, w] : torus_words()) out.push_back(closure(name, w));
  auto r = random_lt(100, 20240611);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

namespace {

Template from_lists(const std::vector<std::pair<int, int>>& arc_ends, std::vector<std::vector<int>> circles,
                    SidePos outer) {
  Template t;
  t.arcs.resize(arc_ends.size());
  for (std::size_t a = 0; a < arc_ends.size(); ++a) {
    t.incidences.push_back({arc_ends[a].first, static_cast<int>(a), true, false, false});
    t.incidences.push_back({arc_ends[a].second, static_cast<int>(a), true, false, false});
    t.arcs[a] = {static_cast<int>(2 * a), static_cast<int>(2 * a + 1)};
  }
  t.circles = std::move(circles);
  t.nest.push_back({outer, std::nullopt});
  return t;
}

}  // namespace

Instance trap_standin() {
  // arcs: C-A east, C-A west, A-B south-east, south, south-west, A-D1, A-D2
  Template t = from_lists({{0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {1, 3}, {1, 4}},
                          {{0, 2}, {1, 4, 10, 6, 12, 8, 3}, {5, 7, 9}, {11}, {13}}, {2, 0, true});
  BraidPlacement pi;
  for (int a = 0; a < 7; ++a) pi[a] = BraidWord::parse(a >= 5 ? "1" : "1 1", 2);
  return {"trap-standin", t, pi, false};
}

Instance two_pocket(const BraidWord& left, const BraidWord& right) {
  // O = 0, P = 1, Q = 2; arcs run from the pockets out to O
  Template t = from_lists({{1, 0}, {2, 0}}, {{1, 3}, {0}, {2}}, {0, 0, true});
  BraidPlacement pi{{0, BraidWord(left.letters, 2)}, {1, BraidWord(right.letters, 2)}};
  return {"two-pocket", t, pi, true};
}

std::vector<Instance> random_three_circle(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 100000; ++tries) {
    // circle 1 is the hub; circles 0 and 2 attach to it
    int k0 = 1 + static_cast<int>(rng() % 3), k2 = 1 + static_cast<int>(rng() % 3);
    bool chain = rng() & 1;
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < k0; ++i) ends.push_back({0, 1});
    for (int i = 0; i < k2; ++i) ends.push_back(chain ? std::pair{1, 2} : std::pair{2, 1});
    std::vector<std::vector<int>> circ(3);
    std::vector<int> hub;
    for (int a = 0; a < k0 + k2; ++a) {
      int inc0 = 2 * a, inc1 = 2 * a + 1;
      int on_hub = ends[a].first == 1 ? inc0 : inc1;
      int other = on_hub == inc0 ? inc1 : inc0;
      hub.push_back(on_hub);
      circ[a < k0 ? 0 : 2].push_back(other);
    }
    std::shuffle(hub.begin(), hub.end(), rng);
    circ[1] = hub;
    SidePos outer = chain ? SidePos{2, 0, true} : SidePos{1, 0, true};
    Template t = from_lists(ends, circ, outer);
    BraidPlacement pi;
    for (int a = 0; a < k0 + k2; ++a) pi[a] = BraidWord::parse((rng() & 1) ? "1 1" : "1", 2);
    if (!validate(t, pi).empty()) continue;
    out.push_back({"three-circle-" + std::to_string(out.size()), t, pi, is_knitted(t)});
  }
  return out;
}

}  // namespace kc::corpus
