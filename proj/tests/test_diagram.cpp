#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/skein.hpp"
#include "knotcert/template.hpp"

using namespace kc;

namespace {

Diagram C(const char* s, std::optional<int> n = std::nullopt) { return closure_diagram(BraidWord::parse(s, n)); }

// reflection of the plane across a line: rotations reverse, faces swap sides
Diagram reflect(const Diagram& d) {
  Diagram out = d;
  for (int c = 0; c < d.num_crossings(); ++c) {
    auto s = d.crossings[c].slot;
    out.crossings[c].slot = {s[0], s[3], s[2], s[1]};
    for (int j = 0; j < 4; ++j) out.at_slot[out.crossings[c].slot[j]] = j;
  }
  for (auto& n : out.nest) {
    n.own ^= 1;
    if (n.host >= 0) n.host ^= 1;
  }
  return out;
}

int euler(const Diagram& d) {
  auto rm = region_map(d);
  int v = d.num_crossings();
  for (int e = 0; e < d.num_edges(); ++e) v += d.is_loop(e);
  return v - d.num_edges() + rm.faces;
}

}  // namespace

TEST_CASE("closure diagrams are well formed") {
  for (const char* w : {"1 1 1", "1 -1", "1 2 1 2", "-2 -3 -2 1 -2 1 -3 -2 1"}) {
    CAPTURE(w);
    auto d = C(w);
    CHECK_NOTHROW(d.validate());
    CHECK(euler(d) == 2);
    std::vector<int> seen(d.num_edges(), 0);
    auto p = seifert_smooth(d);
    for (const auto& c : p.circles)
      for (int e : c) ++seen[e];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}

TEST_CASE("seifert circles") {
  CHECK(seifert_smooth(C("1 1 1")).size() == 2);
  CHECK(seifert_smooth(C("", 1)).size() == 1);
  CHECK(seifert_smooth(C("1 -1")).size() == 2);
}

TEST_CASE("stats") {
  auto s = diagram_stats(C("1 1 1"));
  CHECK(s.s == 2);
  CHECK(s.writhe == 3);
  CHECK(s.crossing_count == 3);
  CHECK(s.component_count == 1);
  auto u = diagram_stats(C("1 -1"));
  CHECK(u.writhe == 0);
  // σ1σ1⁻¹ closes up to two components
  CHECK(u.component_count == 2);
  auto f = diagram_stats(C("-2 -3 -2 1 -2 1 -3 -2 1"));
  CHECK(f.writhe == -3);
  CHECK(f.crossing_count == 9);
  CHECK(f.s == 4);
}

TEST_CASE("circle orientation") {
  for (const char* w : {"1 1 1", "1 -2 1 -2", "", "2 2 -1"}) {
    auto d = C(w, 3);
    auto p = seifert_smooth(d);
    for (int k = 0; k < p.size(); ++k) CHECK(circle_orientation(p, k) == Orientation::clockwise);
    auto r = reflect(d);
    CHECK_NOTHROW(r.validate());
    auto q = seifert_smooth(r);
    for (int k = 0; k < q.size(); ++k) CHECK(circle_orientation(q, k) == Orientation::counterclockwise);
  }
  auto loop = reflect(C("", 1));
  CHECK(circle_orientation(seifert_smooth(loop), 0) == Orientation::counterclockwise);
  CHECK_THROWS_AS(circle_orientation(seifert_smooth(loop), 3), InputError);
}

TEST_CASE("reflection mirrors the polynomial") {
  auto d = C("1 1 1");
  CHECK(homfly(reflect(d)) == homfly(d).mirrored());
}

TEST_CASE("innermost circles") {
  auto in = innermost_circles(C("1 1 1"));
  CHECK(in.size() == 2);
  CHECK(innermost_circles(C("", 1)) == std::vector<int>{0});
  auto d = C("1 2", 3);
  auto p = seifert_smooth(d);
  auto i3 = innermost_circles(d);
  REQUIRE(i3.size() == 2);
  // the deepest and the outermost of the chain
  int depth0 = 0, depth1 = 0;
  for (int k = i3[0]; p.parent[k] >= 0; k = p.parent[k]) ++depth0;
  for (int k = i3[1]; p.parent[k] >= 0; k = p.parent[k]) ++depth1;
  CHECK(std::min(depth0, depth1) == 0);
  CHECK(std::max(depth0, depth1) == 2);
}

TEST_CASE("smoothing and flipping") {
  auto d = C("1 1 1");
  for (int c = 0; c < 3; ++c) {
    auto s = smooth_crossing(d, c);
    CHECK(canonical_code(s) == canonical_code(C("1 1")));
    CHECK(components(s).count == 2);
    CHECK(flip_crossing(d, c).writhe() == 1);
    CHECK(flip_crossing(flip_crossing(d, c), c).crossings[c].slot == d.crossings[c].slot);
  }
  CHECK_THROWS_AS(smooth_crossing(d, 3), InputError);

  auto g = C("1 2 1 2");
  auto depths = [](const SeifertPicture& p) {
    std::vector<int> out;
    for (int k = 0; k < p.size(); ++k) {
      int n = 0;
      for (int x = k; p.parent[x] >= 0; x = p.parent[x]) ++n;
      out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto pg = seifert_smooth(g);
  for (int c = 0; c < g.num_crossings(); ++c) {
    auto ps = seifert_smooth(smooth_crossing(g, c));
    CHECK(ps.size() == pg.size());
    CHECK(ps.orientation == pg.orientation);
    CHECK(depths(ps) == depths(pg));
  }
}

TEST_CASE("component deletion") {
  auto u2 = C("", 2);
  auto one = delete_component(u2, 0);
  CHECK(one.num_crossings() == 0);
  CHECK(components(one).count == 1);

  auto hopf = C("1 1");
  auto h = delete_component(hopf, 1);
  CHECK(h.num_crossings() == 0);
  CHECK(components(h).count == 1);

  auto none = delete_component(C("", 1), 0);
  CHECK(none.empty());
  CHECK(components(none).count == 0);
  CHECK_THROWS_AS(delete_component(hopf, 2), InputError);
}

TEST_CASE("monotone paths") {
  auto k = C("1");
  for (int e = 0; e < k.num_edges(); ++e) {
    bool dc = monotone_path(k, e, PathMode::descending).closed();
    bool ac = monotone_path(k, e, PathMode::ascending).closed();
    CHECK(dc != ac);
  }
  CHECK(monotone_path(C("", 1), 0, PathMode::descending).closed());

  auto t = C("1 1 1");
  for (int e = 0; e < t.num_edges(); ++e) {
    if (t.head_slot(e) != 0) continue;
    auto m = monotone_path(t, e, PathMode::descending);
    CHECK(m.terminal == t.head(e));
  }
}

TEST_CASE("crossing doubling") {
  auto hopf = C("1 1");
  auto dd = double_crossing(hopf, 0);
  CHECK(canonical_code(dd) == canonical_code(C("1 1 1")));
  CHECK(dd.writhe() == hopf.writhe() + 1);
  // the move changes the link: Hopf link to trefoil
  CHECK(homfly(dd) != homfly(hopf));
  auto m = C("-1 2 -1");
  for (int c = 0; c < m.num_crossings(); ++c) CHECK(double_crossing(m, c).writhe() == m.writhe() + m.sign(c));
}

TEST_CASE("connected sums") {
  auto t = C("1 1 1");
  auto u = C("", 1);
  auto ut = connected_sum(u, t, outer_edges(u)[0], outer_edges(t)[0]);
  CHECK(diagram_stats(ut).crossing_count == 3);
  CHECK(canonical_code(ut) == canonical_code(t));

  auto tt = connected_sum(t, t, outer_edges(t)[0], outer_edges(t)[0]);
  CHECK(tt.num_crossings() == 6);
  CHECK(homfly(tt) == homfly(t) * homfly(t));
  CHECK_THROWS_AS(connected_sum(C("", 2), t, 0, 0), InputError);
}

TEST_CASE("mirror and reverse") {
  auto t = C("1 1 1");
  CHECK(canonical_code(mirror(t)) == canonical_code(C("-1 -1 -1")));
  CHECK(mirror(t).writhe() == -3);
  CHECK(homfly(mirror(t)) == homfly(t).mirrored());
  auto f = C("-2 -3 -2 1 -2 1 -3 -2 1");
  CHECK(homfly(reverse(f)) == homfly(f));
  CHECK_NOTHROW(reverse(f).validate());
}

TEST_CASE("json round trip") {
  auto f = C("-2 -3 -2 1 -2 1 -3 -2 1");
  auto g = diagram_from_json(to_json(f));
  CHECK(canonical_code(g) == canonical_code(f));
  CHECK(g.crossings.size() == f.crossings.size());
}

TEST_CASE("canonical code ignores labels") {
  // cyclic rotation of the word redraws the same closure
  CHECK(canonical_code(C("1 2 -1 2")) == canonical_code(C("2 -1 2 1")));
  CHECK(canonical_code(C("1 -2 1 -2")) != canonical_code(C("1 2 1 2")));
}
