#include <doctest.h>

#include "knotcert/errors.hpp"
#include "knotcert/laurent.hpp"

using namespace kc;

namespace {
Laurent2 M(std::int64_t c, int i, int j) { return Laurent2::monomial(c, i, j); }
}  // namespace

TEST_CASE("laurent2 arithmetic") {
  auto p = M(1, 1, 0) - M(1, -1, 0);
  CHECK((p * p) == M(1, 2, 0) - M(2, 0, 0) + M(1, -2, 0));
  CHECK((p - p).is_zero());
  CHECK((3 * p).coeff(1, 0) == 3);
  CHECK(p.pow(0) == Laurent2::constant(1));
  CHECK_THROWS_AS(p.pow(-1), InputError);
  CHECK(Laurent2::constant(0).is_zero());
}

TEST_CASE("degrees and slices") {
  auto p = M(-1, -4, 0) + M(2, -2, 0) + M(1, -2, 2);
  CHECK(p.min_a() == -4);
  CHECK(p.max_a() == -2);
  CHECK(p.min_z() == 0);
  CHECK(p.max_z() == 2);
  CHECK(p.a_slice(-2) == M(2, 0, 0) + M(1, 0, 2));
  CHECK(p.z_slice(0) == M(-1, -4, 0) + M(2, -2, 0));
  CHECK_THROWS_AS(Laurent2().max_a(), InputError);
}

TEST_CASE("mirror substitution") {
  auto p = M(-1, -4, 0) + M(2, -2, 0) + M(1, -2, 2);
  CHECK(p.mirrored() == M(-1, 4, 0) + M(2, 2, 0) + M(1, 2, 2));
  CHECK(M(1, 1, -1).mirrored() == M(-1, -1, -1));
  CHECK(p.mirrored().mirrored() == p);
}

TEST_CASE("unlink polynomials") {
  CHECK(unlink_poly(1) == Laurent2::constant(1));
  CHECK(unlink_poly(2) == M(1, 1, -1) - M(1, -1, -1));
  CHECK(unlink_poly(3) == M(1, 2, -2) - M(2, 0, -2) + M(1, -2, -2));
  CHECK_THROWS_AS(unlink_poly(0), InputError);
}

TEST_CASE("text and json") {
  auto p = M(-1, -4, 0) + M(2, -2, 0) + M(1, -2, 2);
  CHECK(p.str() == "-1 a^-4 z^0 + 2 a^-2 z^0 + 1 a^-2 z^2");
  CHECK(Laurent2::constant(1).str() == "1");
  CHECK(Laurent2().str() == "0");
  CHECK(Laurent2::from_json(p.to_json()) == p);
}

TEST_CASE("laurent1 and the jones substitution") {
  auto q = Laurent1::monomial(1, 1), qi = Laurent1::monomial(1, -1);
  auto d = q + Laurent1::monomial(-1, -1);
  CHECK((d * (q + qi)).div_q_minus_qinv() == q + qi);
  CHECK_THROWS((q).div_q_minus_qinv());
  CHECK(homfly_to_jones(Laurent2::constant(1)) == Laurent1::monomial(1, 0));
  // unlink of two: -(q + q^{-1})
  CHECK(homfly_to_jones(unlink_poly(2)) == Laurent1::monomial(-1, 1) + Laurent1::monomial(-1, -1));
  auto trefoil = M(-1, -4, 0) + M(2, -2, 0) + M(1, -2, 2);
  auto v = homfly_to_jones(trefoil);
  CHECK(v == Laurent1::monomial(-1, 8) + Laurent1::monomial(1, 6) + Laurent1::monomial(1, 2));
}
