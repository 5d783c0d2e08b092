#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "knotcert/castle.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/errors.hpp"

using namespace kc;

namespace {

Diagram C(const char* s, std::optional<int> n = std::nullopt) { return closure_diagram(BraidWord::parse(s, n)); }

}  // namespace

TEST_CASE("mfw reports") {
  auto r = mfw_report(C("1 1 1"));
  CHECK(r.e == -4);
  CHECK(r.E == -2);
  CHECK(r.m == 0);
  CHECK(r.M == 2);
  CHECK(r.s == 2);
  CHECK(r.mfw_sharp);
  CHECK(r.eq2_lower_sharp);
  CHECK(r.eq2_upper_sharp);
  CHECK(r.eq5_sharp);

  auto u = mfw_report(C("", 1));
  CHECK(u.e == 0);
  CHECK(u.E == 0);
  CHECK(u.s == 1);
  CHECK(u.mfw_sharp);

  // a 2-component unlink drawn with two crossings: still sharp
  auto l = mfw_report(C("1 -1"));
  CHECK(l.polynomial == unlink_poly(2));
  CHECK(l.s == 2);
  CHECK(l.mfw_sharp);

  // an unknot drawn on two strands
  auto k = mfw_report(C("1 1 -1"));
  CHECK(k.polynomial == Laurent2::constant(1));
  CHECK(k.s == 2);
  CHECK_FALSE(k.mfw_sharp);
}

TEST_CASE("bound violations are reported") {
  auto d = C("1 1 1");
  CHECK_THROWS_AS(mfw_report(d, Laurent2::monomial(1, 4, 0)), InvariantError);
  CHECK_THROWS_AS(mfw_report(d, Laurent2::monomial(1, -2, 7)), InvariantError);
}

TEST_CASE("certificates") {
  auto c = certify(C("1 1 1"));
  CHECK(c.optimal);
  CHECK(c.minimal);
  CHECK(c.braid_index == 2);
  CHECK(c.crossing_number == 3);

  auto [t, pi] = alexander_closure(BraidWord::parse("-2 -3 -2 1 -2 1 -3 -2 1"));
  auto f = certify(build_diagram(t, pi).first, std::pair{t, pi});
  CHECK(f.minimal);
  CHECK(f.crossing_number == 9);
  CHECK(f.braid_index == 4);
  CHECK(std::find(f.criteria.begin(), f.criteria.end(), "locally-twisted-homogeneous") != f.criteria.end());

  auto n = certify(C("1 1 -1"));
  CHECK_FALSE(n.issued());
  CHECK_FALSE(n.braid_index);
  CHECK_FALSE(n.crossing_number);

  // sharp but not homogeneous: optimal only
  auto o = certify(C("1 -1"));
  CHECK(o.optimal);
  CHECK_FALSE(o.minimal);
  CHECK(o.braid_index == 2);
  CHECK_FALSE(o.crossing_number);
}

TEST_CASE("twisted bound verdicts") {
  auto [h, hp] = alexander_closure(BraidWord::parse("1 1"));
  auto a = verify_theorem2(h, hp);
  CHECK(a.minus_applies);
  CHECK(a.plus_applies);
  CHECK(a.E == -1);
  CHECK(a.e == -3);
  CHECK(a.upper_target == -1);
  CHECK(a.lower_target == -3);
  CHECK(a.verdict == "confirmed");

  auto [t, pi] = alexander_closure(BraidWord::parse("-2 -3 -2 1 -2 1 -3 -2 1"));
  auto b = verify_theorem2(t, pi);
  CHECK(b.E == 6);
  CHECK(b.e == 0);
  CHECK(b.verdict == "confirmed");

  // minus mode leaves the positive σ2 layer unconstrained
  auto [m, mp] = alexander_closure(BraidWord::parse("-1 2 -1"));
  auto c = verify_theorem2(m, mp);
  CHECK(c.minus_applies);
  CHECK_FALSE(c.plus_applies);
  CHECK(c.verdict == "confirmed");
  auto [n, np] = alexander_closure(BraidWord::parse("-1 2"));
  CHECK(verify_theorem2(n, np).verdict == "not applicable");

  auto s = corpus::trap_standin();
  CHECK_THROWS_AS(verify_theorem2(s.t, s.pi), InputError);
}

TEST_CASE("leaf spectra") {
  auto in = corpus::closure("trefoil", BraidWord::parse("1 1 1"));
  auto d = build_diagram(in.t, in.pi).first;
  auto st = build_special_tree(in.t, in.pi, Flavor::X);
  auto sp = leaf_spectrum(st.tree, d);
  CHECK(sp.inequality6_holds);
  for (const auto& r : sp.rows) CHECK(r.tight6 == (r.omega == 0 && r.gamma == 2));
  CHECK(sp.all_positive_smoothed_leaf);
  CHECK(sp.max_t_signs_agree);

  auto u = C("", 1);
  auto su = leaf_spectrum(build_tree(u), u);
  REQUIRE(su.rows.size() == 1);
  CHECK(su.rows[0].tight6);
  CHECK(su.rows[0].top_degree_contributor);
}

TEST_CASE("certificate json") {
  auto d = C("1 1 1");
  auto r = mfw_report(d);
  auto c = certify(d, r);
  auto [t, pi] = alexander_closure(BraidWord::parse("1 1 1"));
  auto j = certificate_json("1 1 1", d, r, c, verify_theorem2(t, pi));
  for (const char* key : {"input", "stats", "polynomial", "e", "E", "m", "M", "flags", "verdicts", "reasons", "criteria"})
    CHECK(j.contains(key));
  CHECK(j["E"] == -2);
  CHECK(j["verdicts"]["minimal"] == true);
  CHECK(j["verdicts"]["braid_index"] == 2);
  CHECK(j["verdicts"]["verdict"] == "certified");
  CHECK(j["verdicts"]["locally_twisted"]["minus"] == true);
  CHECK(Laurent2::from_json(j["polynomial"]["terms"]) == r.polynomial);
}
