#include <doctest.h>

#include "heckelib/parabolic.hpp"

using namespace hecke;

namespace {

const LaurentPoly V = LaurentPoly::v(1);
const LaurentPoly VINV = LaurentPoly::v(-1);
const LaurentPoly B = LaurentPoly::v_plus_vinv();

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> comp;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1 << i)) {
        comp.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    comp.push_back(run);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

TEST_CASE("sign and permutation actions in S_3 over <s>") {
  ParabolicData p(3, {2, 1});
  // basis: e, t, ts
  const ParabolicModule sign = parabolic_module(ParabolicKind::sign, p);
  // N_e KLgen_s = 0  (es = s is not short)
  for (int j = 0; j < 3; ++j) CHECK(sign.act(1)[0][size_t(j)].is_zero());

  const ParabolicModule perm = parabolic_module(ParabolicKind::permutation, p);
  // M_e KLgen_s = (v+v^-1) M_e
  CHECK(perm.act(1)[0][0] == B);
  CHECK(perm.act(1)[0][1].is_zero());
  // first case: M_e KLgen_t = M_t + v M_e
  CHECK(perm.act(2)[0][0] == V);
  CHECK(perm.act(2)[0][1] == LaurentPoly(1));
  // second case: M_t KLgen_t = M_e + v^-1 M_t
  CHECK(perm.act(2)[1][0] == LaurentPoly(1));
  CHECK(perm.act(2)[1][1] == VINV);
}

TEST_CASE("parabolic modules satisfy the defining relations") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      ParabolicData p(n, comp);
      CHECK(satisfies_kl_relations(parabolic_module(ParabolicKind::sign, p).action));
      CHECK(satisfies_kl_relations(parabolic_module(ParabolicKind::permutation, p).action));
    }
}

TEST_CASE("twisting matrices") {
  // regular case in S_2: T_s swaps the Vermas with the echo term
  ParabolicData p2(2, {1, 1});
  const TwistingAction t2 = twisting_matrices(p2);
  REQUIRE(t2.dim() == 2);
  PolyMatrix expected = poly_zero(2, 2);
  expected[0][1] = LaurentPoly(1);
  expected[1][0] = LaurentPoly(1);
  expected[1][1] = VINV - V;
  CHECK(t2.act(1) == expected);

  // singular diagonal entries square consistently: v^-2 = 1 + (v^-1-v)v^-1
  CHECK(VINV * VINV == LaurentPoly(1) + (VINV - V) * VINV);

  for (int n = 2; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      ParabolicData p(n, comp);
      CHECK(satisfies_standard_relations(twisting_matrices(p).matrices));
    }
}

TEST_CASE("twisting at v=1 is the permutation representation") {
  // Prop: specializing v=1 gives Z[W] (x)_{Z[W']} Z with the left action
  ParabolicData p(3, {2, 1});
  const TwistingAction t = twisting_matrices(p);
  // at v=1 the matrices represent the simple reflections acting on cosets
  std::vector<PolyMatrix> g;
  for (int s = 1; s < 3; ++s) g.push_back(poly_eval_one(t.act(s)));
  // involutions
  for (const auto& m : g) CHECK(poly_eq(poly_mul(m, m), poly_identity(t.dim())));
  // the action permutes the cosets: s . (x W') = (sx) W'
  for (int s = 1; s < 3; ++s)
    for (int i = 0; i < t.dim(); ++i) {
      const Permutation sx = t.basis[size_t(i)].left_mult_s(s);
      for (int j = 0; j < t.dim(); ++j) {
        // coset of sx equals coset of basis[j] iff sx basis[j]^-1 in W'
        const bool same = p.in_subgroup(sx * t.basis[size_t(j)].inverse());
        CHECK(g[size_t(s - 1)][size_t(i)][size_t(j)] == (same ? LaurentPoly(1) : LaurentPoly()));
      }
    }
}

TEST_CASE("parabolic modules match induced modules from the singleton cells") {
  // S_3 over <s>: sign from R'={e}, permutation from R'={s}={w0'}
  ParabolicData p(3, {2, 1});
  const InducedModule from_e = induce(p, Permutation::identity(3));
  const InducedModule from_w0p = induce(p, Permutation::simple(3, 1));
  const auto iso_sign = parabolic_iso_check(parabolic_module(ParabolicKind::sign, p), from_e);
  CHECK(iso_sign.has_value());
  const auto iso_perm =
      parabolic_iso_check(parabolic_module(ParabolicKind::permutation, p), from_w0p);
  CHECK(iso_perm.has_value());
  // crossing them must fail
  CHECK_FALSE(
      parabolic_iso_check(parabolic_module(ParabolicKind::sign, p), from_w0p).has_value());
  CHECK_FALSE(
      parabolic_iso_check(parabolic_module(ParabolicKind::permutation, p), from_e).has_value());

  // W' trivial: both constructions give the regular module on aligned bases
  ParabolicData triv(3, {1, 1, 1});
  const InducedModule reg = induce(triv, Permutation::identity(3));
  for (ParabolicKind kind : {ParabolicKind::sign, ParabolicKind::permutation}) {
    const ParabolicModule pm = parabolic_module(kind, triv);
    for (int s = 1; s < 3; ++s)
      CHECK(pm.act(s) == sparse_to_dense(reg.act(s), reg.dim()));
  }

  // all compositions of 4
  for (const auto& comp : compositions_of(4)) {
    ParabolicData q(4, comp);
    const InducedModule se = induce(q, Permutation::identity(4));
    const InducedModule sw = induce(q, q.w0_prime());
    CHECK(parabolic_iso_check(parabolic_module(ParabolicKind::sign, q), se).has_value());
    CHECK(
        parabolic_iso_check(parabolic_module(ParabolicKind::permutation, q), sw).has_value());
  }
}
