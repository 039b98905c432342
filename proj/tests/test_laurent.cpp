#include <doctest.h>

#include <random>

#include "heckelib/linalg.hpp"
#include "heckelib/rational.hpp"

using namespace hecke;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-6, 6), width(0, 4);
  const long lo = deg(rng);
  std::vector<Int> c;
  for (int i = 0, w = width(rng); i <= w; ++i) c.push_back(Int(coef(rng)));
  return LaurentPoly(lo, std::move(c));
}

}  // namespace

TEST_CASE("addition") {
  const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  CHECK(v + vinv == LaurentPoly(-1, {Int(1), Int(0), Int(1)}));
  std::mt19937 rng(7);
  const LaurentPoly p = random_poly(rng);
  CHECK(p + LaurentPoly() == p);
  // cancellation restores canonical form
  const LaurentPoly q = (v + vinv) + (-v);
  CHECK(q == vinv);
  CHECK(q.min_deg() == -1);
  CHECK(q.max_deg() == -1);
}

TEST_CASE("multiplication") {
  const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  CHECK(v * vinv == LaurentPoly(1));
  const LaurentPoly b = v + vinv;
  CHECK(b * b == LaurentPoly(-2, {Int(1), Int(0), Int(2), Int(0), Int(1)}));
  CHECK((vinv - v) * v == LaurentPoly(1) - v * v);
}

TEST_CASE("bar involution") {
  const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  CHECK(v.bar() == vinv);
  CHECK((vinv - v).bar() == v - vinv);
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_poly(rng), q = random_poly(rng);
    CHECK(p.bar().bar() == p);
    CHECK((p * q).bar() == p.bar() * q.bar());
  }
}

TEST_CASE("evaluation at v=1") {
  CHECK((LaurentPoly::v(1) + LaurentPoly::v(-1)).eval_one() == 2);
  CHECK(LaurentPoly().eval_one() == 0);
  CHECK(LaurentPoly(-2, {Int(1), Int(0), Int(2), Int(0), Int(1)}).eval_one() == 4);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(1);
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("rational function reduction") {
  const LaurentPoly v = LaurentPoly::v(1);
  // v^2-1 over v-1 reduces to v+1
  const RationalFunction r(v * v - LaurentPoly(1), v - LaurentPoly(1));
  CHECK(r.is_laurent());
  CHECK(r.num() == v + LaurentPoly(1));
  // denominators are normalized to honest polynomials with min_deg 0
  const RationalFunction q(LaurentPoly(1), v);
  CHECK(q.den() == LaurentPoly(1));
  CHECK(q.num() == LaurentPoly::v(-1));
}

TEST_CASE("matrix inversion over the fraction field") {
  CHECK(rf_is_identity(rf_invert_matrix(poly_identity(3))));

  PolyMatrix d = poly_zero(2, 2);
  d[0][0] = LaurentPoly::v(1);
  d[1][1] = LaurentPoly::v(-1);
  RFMatrix inv = rf_invert_matrix(d);
  CHECK(inv[0][0] == RationalFunction(LaurentPoly::v(-1)));
  CHECK(inv[1][1] == RationalFunction(LaurentPoly::v(1)));
  CHECK(inv[0][1].is_zero());

  // Gram matrix of the S_2 cell module form and its inverse
  PolyMatrix g = poly_zero(1, 1);
  g[0][0] = LaurentPoly::v_plus_vinv();
  RFMatrix ginv = rf_invert_matrix(g);
  CHECK(rf_is_identity(rf_mul(ginv, rf_from_poly(g))));

  PolyMatrix sing = poly_zero(2, 2);
  sing[0][0] = LaurentPoly(1);
  CHECK_THROWS_AS((void)rf_invert_matrix(sing), SingularMatrix);
}

TEST_CASE("random 3x3 inverse multiplies back to identity") {
  std::mt19937 rng(12);
  int done = 0;
  while (done < 5) {
    PolyMatrix m = poly_zero(3, 3);
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng);
    RFMatrix inv;
    try {
      inv = rf_invert_matrix(m);
    } catch (const SingularMatrix&) {
      continue;
    }
    CHECK(rf_is_identity(rf_mul(inv, rf_from_poly(m))));
    CHECK(rf_is_identity(rf_mul(rf_from_poly(m), inv)));
    ++done;
  }
}

TEST_CASE("nullspace") {
  // x + y = 0 over Q(v): one-dimensional null space
  RFMatrix m(1, std::vector<RationalFunction>{RationalFunction(1), RationalFunction(1)});
  auto basis = rf_nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -basis[0][1]);
}
