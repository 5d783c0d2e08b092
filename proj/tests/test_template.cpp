#include <doctest.h>

#include <fstream>
#include <random>

#include "corpus.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/skein.hpp"
#include "knotcert/template.hpp"

using namespace kc;

namespace {

Template with_arcs(const std::vector<std::pair<int, int>>& ends, std::vector<std::vector<int>> circles, SidePos outer) {
  Template t;
  for (std::size_t a = 0; a < ends.size(); ++a) {
    int id = static_cast<int>(a);
    t.incidences.push_back({ends[a].first, id, true, false, false});
    t.incidences.push_back({ends[a].second, id, true, false, false});
    t.arcs.push_back({2 * id, 2 * id + 1});
  }
  t.circles = std::move(circles);
  t.nest.push_back({outer, std::nullopt});
  return t;
}

bool has(const std::vector<std::string>& err, const std::string& needle) {
  for (const auto& e : err)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(KC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("validation") {
  auto [t, pi] = alexander_closure(BraidWord::parse("1 -2 1 2"));
  CHECK(validate(t, pi).empty());

  auto twice = with_arcs({{0, 0}}, {{0, 1}}, {0, 0, true});
  CHECK(has(validate(twice, {}), "arc-circle multiplicity"));

  auto [h, hp] = alexander_closure(BraidWord::parse("1 1"));
  hp[0] = BraidWord::parse("2 1", 3);
  CHECK(has(validate(h, hp), "strand bound"));
}

TEST_CASE("knitted templates") {
  for (int n = 1; n <= 6; ++n) CHECK(is_knitted(alexander_closure(BraidWord({}, n)).first));
  auto parallel = with_arcs({{0, 1}, {0, 1}}, {{0, 2}, {1, 3}}, {1, 0, true});
  BraidPlacement pp{{0, BraidWord::parse("1 1")}, {1, BraidWord::parse("1 1")}};
  CHECK(validate(parallel, pp).empty());
  CHECK_FALSE(is_knitted(parallel));
  auto chain = with_arcs({{0, 1}, {1, 2}}, {{0}, {1, 2}, {3}}, {2, 0, true});
  BraidPlacement cp{{0, BraidWord::parse("1 1")}, {1, BraidWord::parse("-1 -1")}};
  CHECK(validate(chain, cp).empty());
  CHECK(is_knitted(chain));
  CHECK_FALSE(is_knitted(corpus::trap_standin().t));
}

TEST_CASE("alexander closure templates") {
  auto [t, pi] = alexander_closure(BraidWord::parse("1 1 1"));
  CHECK(t.circles.size() == 2);
  CHECK(t.arcs.size() == 1);
  CHECK(t.arc_size(0) == 2);
  auto [u, upi] = alexander_closure(BraidWord({}, 3));
  auto du = build_diagram(u, upi).first;
  CHECK(du.num_crossings() == 0);
  CHECK(components(du).count == 3);
  auto [f, fpi] = alexander_closure(BraidWord::parse("-2 -3 -2 1 -2 1 -3 -2 1"));
  CHECK(f.circles.size() == 4);
  CHECK(f.arcs.size() == 1);
}

TEST_CASE("building diagrams") {
  auto [t, pi] = alexander_closure(BraidWord::parse("1 1 1"));
  auto [d, box] = build_diagram(t, pi);
  auto st = diagram_stats(d);
  CHECK(st.s == 2);
  CHECK(st.writhe == 3);
  CHECK(st.crossing_count == 3);
  CHECK(box.letter_of_crossing.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(box.crossing_of(0, k) >= 0);

  std::vector<corpus::Instance> all = corpus::golden();
  all.push_back(corpus::trap_standin());
  for (auto& x : corpus::random_three_circle(20, 3)) all.push_back(x);
  for (const auto& in : all) {
    CAPTURE(in.name);
    CHECK(seifert_smooth(build_diagram(in.t, in.pi).first).size() == static_cast<int>(in.t.circles.size()));
    BraidPlacement empty;
    for (const auto& [a, w] : in.pi) empty[a] = BraidWord({}, w.strands);
    auto u = build_diagram(in.t, empty).first;
    CHECK(u.num_crossings() == 0);
    CHECK(components(u).count == static_cast<int>(in.t.circles.size()));
  }
}

TEST_CASE("induced templates") {
  auto [t, pi] = alexander_closure(BraidWord::parse("1 1"));
  auto same = induce(t, pi, {}, {});
  CHECK(same.first == t);
  CHECK(same.second == pi);

  auto [t1, p1] = induce(t, pi, {{0, 0, Surgery::smooth}, {0, 1, Surgery::smooth}}, {0});
  CHECK(t1.circles.size() == 1);
  auto d1 = build_diagram(t1, p1).first;
  CHECK(d1.num_crossings() == 0);
  CHECK(components(d1).count == 1);

  // flips keep the diagram shape and induced templates stay knitted
  std::mt19937_64 rng(11);
  for (const auto& in : corpus::golden()) {
    if (in.pi.at(0).size() > 12) continue;
    CAPTURE(in.name);
    const auto& w = in.pi.at(0);
    std::vector<LetterSurgery> ops;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      auto r = rng() % 3;
      if (r == 1) ops.push_back({0, k, Surgery::smooth});
      if (r == 2) ops.push_back({0, k, Surgery::flip});
    }
    auto [tt, pp] = induce(in.t, in.pi, ops, {});
    CHECK(validate(tt, pp).empty());
    CHECK(is_knitted(tt));
    auto dd = build_diagram(tt, pp).first;
    int smooth = 0;
    for (auto& o : ops) smooth += o.op == Surgery::smooth;
    CHECK(dd.num_crossings() == static_cast<int>(w.size()) - smooth);
    if (components(dd).count > 1) {
      auto [td, pd] = induce(in.t, in.pi, ops, {0});
      CHECK(validate(td, pd).empty());
      CHECK(is_knitted(td));
      CHECK(components(build_diagram(td, pd).first).count == components(dd).count - 1);
    }
  }
}

TEST_CASE("template transforms") {
  auto [t, pi] = alexander_closure(BraidWord::parse("-2 -3 -2 1 -2 1 -3 -2 1"));
  auto d = build_diagram(t, pi).first;
  auto [mt, mp] = mirror(t, pi);
  CHECK(homfly(build_diagram(mt, mp).first) == homfly(d).mirrored());
  auto [rt, rp] = reverse(t, pi);
  CHECK(homfly(build_diagram(rt, rp).first) == homfly(d));
  auto [dt, dp] = double_letter(t, pi, 0, 3);
  auto dd = build_diagram(dt, dp).first;
  CHECK(dd.num_crossings() == 10);
  CHECK(dd.writhe() == d.writhe() + 1);
  CHECK_THROWS_AS(double_letter(t, pi, 0, 99), InputError);

  auto [h, hp] = alexander_closure(BraidWord::parse("1 1 1"));
  auto s1 = outer_sides(h, hp);
  auto s2 = outer_sides(t, pi);
  REQUIRE(!s1.empty());
  REQUIRE(!s2.empty());
  SidePos a = s1[0], b = s2[0];
  for (const auto& x : s2)
    if (x.left == a.left) b = x;
  auto [st, sp] = connected_sum(h, hp, a, t, pi, b);
  CHECK(validate(st, sp).empty());
  auto ds = build_diagram(st, sp).first;
  CHECK(ds.num_crossings() == 12);
  CHECK(homfly(ds) == homfly(d) * homfly(build_diagram(h, hp).first));
}

TEST_CASE("json formats") {
  auto in = corpus::trap_standin();
  auto t2 = template_from_json(template_to_json(in.t));
  CHECK(t2 == in.t);
  CHECK(placement_from_json(placement_to_json(in.pi), in.t) == in.pi);
  CHECK_THROWS_AS(template_from_json(nlohmann::json::parse(R"({"circles": 3})")), InputError);
  CHECK_THROWS_AS(placement_from_json(nlohmann::json::parse(R"({"9": "1"})"), in.t), InputError);

  auto ht = template_from_json(load("hopf_template.json"));
  auto hp = placement_from_json(load("hopf_placement.json"), ht);
  CHECK(validate(ht, hp).empty());
  auto hopf = Laurent2::monomial(1, -1, -1) - Laurent2::monomial(1, -3, -1) + Laurent2::monomial(1, -1, 1);
  CHECK(homfly(build_diagram(ht, hp).first) == hopf);
}
