#include <doctest.h>

#include "heckelib/cellmod.hpp"
#include "heckelib/characters.hpp"

using namespace hecke;

namespace {

const LaurentPoly B = LaurentPoly::v_plus_vinv();

struct Ctx {
  KLTable t;
  CellDecomposition c;
  explicit Ctx(int n) : t(n), c(t) {}
};

}  // namespace

TEST_CASE("one-dimensional cell modules of S_3") {
  Ctx ctx(3);
  const CellModule top = cell_module(Permutation::longest(3), ctx.t, ctx.c);
  REQUIRE(top.dim() == 1);
  CHECK(top.act(1)[0][0] == B);
  CHECK(top.act(2)[0][0] == B);

  const CellModule bottom = cell_module(Permutation::identity(3), ctx.t, ctx.c);
  REQUIRE(bottom.dim() == 1);
  CHECK(bottom.act(1)[0][0].is_zero());
  CHECK(bottom.act(2)[0][0].is_zero());
}

TEST_CASE("the two-dimensional cell module of S_3") {
  Ctx ctx(3);
  const CellModule m = cell_module(Permutation::simple(3, 1), ctx.t, ctx.c);
  REQUIRE(m.dim() == 2);
  REQUIRE(m.cell[0] == Permutation::simple(3, 1));
  REQUIRE(m.cell[1] == Permutation::from_word(3, {1, 2}));
  // row convention: row i = image of C_{cell[i]}
  PolyMatrix expected_s = poly_zero(2, 2);
  expected_s[0][0] = B;
  expected_s[1][0] = LaurentPoly(1);
  CHECK(m.act(1) == expected_s);
  PolyMatrix expected_t = poly_zero(2, 2);
  expected_t[0][1] = LaurentPoly(1);
  expected_t[1][1] = B;
  CHECK(m.act(2) == expected_t);
}

TEST_CASE("cell module actions satisfy the defining relations") {
  for (int n = 2; n <= 5; ++n) {
    Ctx ctx(n);
    for (const auto& cell : ctx.c.right_cells()) {
      const CellModule m = cell_module(ctx.t.table().perm(cell[0]), ctx.t, ctx.c);
      CHECK(satisfies_kl_relations(m.action));
    }
  }
}

TEST_CASE("invariant form") {
  Ctx ctx(3);
  const CellModule top = cell_module(Permutation::longest(3), ctx.t, ctx.c);
  const PolyMatrix g_top = invariant_form(top);
  CHECK(g_top[0][0].is_one());

  const CellModule m = cell_module(Permutation::simple(3, 1), ctx.t, ctx.c);
  const PolyMatrix g = invariant_form(m);
  CHECK(form_is_invariant(m.action, g));
  // nondegenerate
  CHECK(!rf_det(rf_from_poly(g)).is_zero());
  // scaling by v keeps invariance but breaks the normalization
  const PolyMatrix scaled = poly_scale(LaurentPoly::v(), g);
  CHECK(form_is_invariant(m.action, scaled));
  CHECK(scaled != g);
}

TEST_CASE("invariance and nondegeneracy for all cells up to n=5") {
  for (int n = 2; n <= 5; ++n) {
    Ctx ctx(n);
    for (const auto& cell : ctx.c.right_cells()) {
      const CellModule m = cell_module(ctx.t.table().perm(cell[0]), ctx.t, ctx.c);
      const PolyMatrix g = invariant_form(m);
      CHECK(form_is_invariant(m.action, g));
      CHECK(!rf_det(rf_from_poly(g)).is_zero());
    }
  }
}

TEST_CASE("cell isomorphisms detect the two-sided cell") {
  Ctx ctx(3);
  const CellModule m1 = cell_module(Permutation::simple(3, 1), ctx.t, ctx.c);
  const CellModule m2 = cell_module(Permutation::simple(3, 2), ctx.t, ctx.c);
  CHECK(cell_iso(m1, m1).has_value());
  CHECK(cell_iso(m1, m2).has_value());

  const CellModule e = cell_module(Permutation::identity(3), ctx.t, ctx.c);
  const CellModule w0 = cell_module(Permutation::longest(3), ctx.t, ctx.c);
  CHECK_FALSE(cell_iso(e, w0).has_value());

  // n <= 4 full check: iso iff same two-sided cell (n=5 in acceptance)
  for (int n = 2; n <= 4; ++n) {
    Ctx c2(n);
    const auto& cells = c2.c.right_cells();
    std::vector<CellModule> mods;
    for (const auto& cell : cells)
      mods.push_back(cell_module(c2.t.table().perm(cell[0]), c2.t, c2.c));
    for (size_t a = 0; a < cells.size(); ++a)
      for (size_t b = a; b < cells.size(); ++b) {
        const bool same_two_sided = c2.c.two_sided_cell_of(cells[a][0]) ==
                                    c2.c.two_sided_cell_of(cells[b][0]);
        const auto iso = cell_iso(mods[a], mods[b]);
        CHECK(iso.has_value() == same_two_sided);
        if (iso) {
          // genuine intertwiner: A1 phi = phi A2
          for (int s = 1; s < n; ++s) {
            CHECK(rf_eq(rf_mul(rf_from_poly(mods[a].act(s)), *iso),
                        rf_mul(*iso, rf_from_poly(mods[b].act(s)))));
          }
        }
      }
  }
}

TEST_CASE("cell module characters at v=1 are irreducible characters") {
  // the cell of RSK shape lambda carries the Specht module labeled by
  // the conjugate partition; at v=1 the generator matrices minus the
  // identity give the group action
  for (int n = 2; n <= 5; ++n) {
    Ctx ctx(n);
    for (const auto& cell : ctx.c.right_cells()) {
      const CellModule m = cell_module(ctx.t.table().perm(cell[0]), ctx.t, ctx.c);
      const Partition label = rsk_shape(m.cell[0]).conjugate();
      std::vector<PolyMatrix> group_gen;
      for (int s = 1; s < n; ++s) {
        PolyMatrix g = poly_eval_one(m.act(s));
        for (int i = 0; i < m.dim(); ++i) g[size_t(i)][size_t(i)] -= LaurentPoly(1);
        group_gen.push_back(std::move(g));
      }
      for (const Partition& ct : partitions_of(n)) {
        const Permutation rep = canonical_class_rep(ct, n);
        PolyMatrix rho = poly_identity(m.dim());
        for (int s : rep.reduced_word()) rho = poly_mul(rho, group_gen[size_t(s - 1)]);
        LaurentPoly trace;
        for (int i = 0; i < m.dim(); ++i) trace += rho[size_t(i)][size_t(i)];
        CHECK(trace == LaurentPoly(mn_character(label, ct)));
      }
    }
  }
}
