#include <doctest.h>

#include "corpus.hpp"
#include "knotcert/braid.hpp"
#include "knotcert/errors.hpp"

using namespace kc;

namespace {
BraidWord W(const char* s, std::optional<int> n = std::nullopt) { return BraidWord::parse(s, n); }
}  // namespace

TEST_CASE("parse and print") {
  auto w = W("1 -2 3");
  CHECK(w.strands == 4);
  CHECK(w.size() == 3);
  CHECK(w.letters[1] == Letter{2, -1});
  CHECK(w.str() == "1 -2 3");
  CHECK(W("").empty());
  CHECK(W("", 3).strands == 3);
  CHECK(W("1 -1").writhe() == 0);
  CHECK_THROWS_AS(W("0"), InputError);
  CHECK_THROWS_AS(W("1 x"), InputError);
  CHECK_THROWS_AS(W("3", 3), InputError);
}

TEST_CASE("half twist words") {
  CHECK(half_twist_word(1, 2, 1).str() == "1");
  CHECK(half_twist_word(1, 3, 1).str() == "1 2 1");
  CHECK(half_twist_word(2, 4, -1).str() == "-2 -3 -2");
  CHECK(half_twist_word(1, 4, 1).size() == 6);
}

TEST_CASE("permutations") {
  CHECK(permutation_of(W("", 3)).is_identity());
  CHECK(permutation_of(W("1 2 3")).image == std::vector<int>{4, 1, 2, 3});
  CHECK(permutation_of(W("1 2 1")).image == std::vector<int>{3, 2, 1});
  CHECK(permutation_of(W("1 -1")).is_identity());
}

TEST_CASE("half twist recognition") {
  CHECK(represents_half_twist(W("1 2 1"), 1, 3, 1));
  CHECK(represents_half_twist(W("2 1 2"), 1, 3, 1));
  CHECK_FALSE(represents_half_twist(W("1 2 2"), 1, 3, 1));
  CHECK_THROWS_AS(represents_half_twist(W("1 2 1"), 1, 3, -1), InputError);
  CHECK_THROWS_AS(represents_half_twist(W("1 3"), 1, 3, 1), InputError);
  CHECK(represents_half_twist(W("-2 -3 -2"), 2, 4, -1));
}

TEST_CASE("homogeneity") {
  CHECK(is_r_homogeneous(W("1 -2 1"), {1, -1}));
  CHECK_FALSE(is_r_homogeneous(W("1 -1"), {1}));
  CHECK_FALSE(is_r_homogeneous(W("1 -1"), {-1}));
  CHECK(is_r_homogeneous(W("", 3), {1, -1}));
}

TEST_CASE("uniform layers") {
  auto w = BraidWord::parse(corpus::layered_word());
  CHECK(w.strands == 7);
  SignPattern r{-1, -1, 1, -1, -1, -1};
  REQUIRE(is_r_homogeneous(w, r));
  auto L = uniform_layers(w, r);
  CHECK(L.breakpoints == std::vector<int>{1, 3, 4, 7});
  REQUIRE(L.layers.size() == 3);
  std::size_t total = 0;
  for (const auto& l : L.layers) total += l.size();
  CHECK(total == w.size());
  for (const auto& x : L.layers[0].letters) CHECK((x.index >= 1 && x.index <= 2));
  for (const auto& x : L.layers[1].letters) CHECK(x.index == 3);
  for (const auto& x : L.layers[2].letters) CHECK((x.index >= 4 && x.index <= 6));

  auto c = uniform_layers(W("1 2 1 2"), {1, 1});
  REQUIRE(c.layers.size() == 1);
  CHECK(c.layers[0] == W("1 2 1 2"));

  auto e = uniform_layers(W("", 3), {1, -1});
  CHECK(e.breakpoints == std::vector<int>{1, 2, 3});
  for (const auto& l : e.layers) CHECK(l.empty());
}

TEST_CASE("locally twisted words") {
  auto v = locally_twisted_check(W("-1 2 -1 2 -1 2 -1 2 -1"), TwistMode::both);
  CHECK(v.ok);

  auto h = locally_twisted_check(W("1 1"), TwistMode::both);
  REQUIRE(h.ok);
  REQUIRE(h.splits.size() == 1);
  CHECK(h.splits[0].prefix_end == 1);
  CHECK(h.splits[0].suffix_begin == 1);

  CHECK_FALSE(locally_twisted_check(W("1"), TwistMode::both).ok);
  CHECK_FALSE(locally_twisted_check(W("1"), TwistMode::plus).ok);

  // the σ2 layer has a single letter
  CHECK_FALSE(locally_twisted_check(W("-1 2 -1"), TwistMode::both).ok);

  for (const auto& s : corpus::showcase_words()) {
    CAPTURE(s);
    CHECK(locally_twisted_check(W(s.c_str()), TwistMode::both).ok);
  }
  // minus mode ignores positive layers
  CHECK(locally_twisted_check(W("1 -2 -2"), TwistMode::minus).ok);
  CHECK_FALSE(locally_twisted_check(W("1 -2 -2"), TwistMode::plus).ok);
}

TEST_CASE("fragment forms") {
  auto a = fragment_witness(W("-2 -1 -2"));
  CHECK(a.prefix_form.str() == "-2 -1 -2");
  auto b = fragment_witness(W("-1 -2 -1"));
  CHECK(b.prefix_form.str() == "-1 -2 -1");
  CHECK(b.suffix_form.str() == "-1 -2 -1");
  auto d = half_twist_word(1, 4, -1);
  auto f = fragment_witness(d);
  CHECK(f.prefix_form.size() == d.size());
  CHECK(f.suffix_form.size() == d.size());
  CHECK(far_commutation_normal(f.prefix_form) == far_commutation_normal(d));
  CHECK(far_commutation_normal(f.suffix_form) == far_commutation_normal(d));
  CHECK(permutation_of(f.prefix_form) == permutation_of(d));
}

TEST_CASE("random locally twisted words") {
  CHECK(random_locally_twisted_word({-1}, 2, 7).str() == "-1 -1");
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto w = random_locally_twisted_word({1, 1}, 6, seed);
    CHECK(w.size() == 6);
    CHECK(locally_twisted_check(w, TwistMode::both).ok);
    auto u = random_locally_twisted_word({1, -1, -1}, 14, seed);
    CHECK(locally_twisted_check(u, TwistMode::both).ok);
    CHECK(locally_twisted_check(mirror(u), TwistMode::both).ok);
    CHECK(locally_twisted_check(reversed(u), TwistMode::both).ok);
  }
  CHECK(random_locally_twisted_word({1, -1}, 9, 5) == random_locally_twisted_word({1, -1}, 9, 5));
}

TEST_CASE("word transforms") {
  CHECK(mirror(W("1 -2")).str() == "-1 2");
  CHECK(reversed(W("1 -2")).str() == "-2 1");
  CHECK(flipped(W("1 2", 4)).str() == "3 2");
  CHECK(concat(W("1"), W("2")).str() == "1 2");
  CHECK(far_commutation_normal(W("3 1")).str() == "1 3");
  CHECK(far_commutation_normal(W("2 1")).str() == "2 1");
}
