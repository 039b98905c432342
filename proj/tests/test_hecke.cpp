#include <doctest.h>

#include <map>
#include <random>

#include "heckelib/kl.hpp"

using namespace hecke;

namespace {

const LaurentPoly V = LaurentPoly::v(1);
const LaurentPoly VINV = LaurentPoly::v(-1);

HeckeElt random_elt(int n, std::mt19937& rng) {
  const auto all = all_permutations(n);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), deg(-2, 2), terms(1, 4);
  HeckeElt a(n);
  for (int t = terms(rng); t > 0; --t)
    a.add_term(all[pick(rng)], LaurentPoly::monomial(Int(coef(rng)), deg(rng)));
  return a;
}

// independent KL construction: only bar-invariance, unitriangularity and
// the vZ[v] condition, built by triangular elimination over the standard
// basis; no use of formula (1) or mu
std::vector<std::map<int, LaurentPoly>> oracle_kl_columns(int n) {
  const PermTable& T = *perm_table(n);
  std::vector<std::map<int, LaurentPoly>> bar_h(size_t(T.size()));
  for (int x = 0; x < T.size(); ++x) {
    const HeckeElt b = h_bar(HeckeElt::standard(T.perm(x)));
    for (const auto& [w, c] : b.support()) bar_h[size_t(x)][T.rank(w)] = c;
  }
  auto positive_part = [](const LaurentPoly& g) {
    LaurentPoly c;
    for (long d = 1; d <= g.max_deg(); ++d) c += LaurentPoly::monomial(g.coeff(d), d);
    return c;
  };
  std::vector<std::map<int, LaurentPoly>> cols(size_t(T.size()));
  for (int x = 0; x < T.size(); ++x) {
    std::map<int, LaurentPoly> cur{{x, LaurentPoly(1)}};
    // defect bar(cur) - cur, maintained incrementally
    std::map<int, LaurentPoly> defect = bar_h[size_t(x)];
    defect[x] -= LaurentPoly(1);
    auto drop_zeros = [](std::map<int, LaurentPoly>& m) {
      for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    };
    drop_zeros(defect);
    while (!defect.empty()) {
      const int m = std::prev(defect.end())->first;
      const LaurentPoly g = std::prev(defect.end())->second;
      REQUIRE(m < x);
      REQUIRE(g.bar() == -g);
      const LaurentPoly c = positive_part(g);
      for (const auto& [y, p] : cols[size_t(m)]) {
        cur[y] += c * p;
        defect[y] -= g * p;
      }
      drop_zeros(defect);
      drop_zeros(cur);
    }
    for (const auto& [y, p] : cur)
      if (y != x) REQUIRE(p.in_v_zv());
    cols[size_t(x)] = std::move(cur);
  }
  return cols;
}

}  // namespace

TEST_CASE("standard basis multiplication") {
  const int n = 3;
  std::mt19937 rng(3);
  const HeckeElt a = random_elt(n, rng);
  CHECK(h_mul(HeckeElt::unit(n), a) == a);
  CHECK(h_mul(a, HeckeElt::unit(n)) == a);

  const HeckeElt hs = HeckeElt::standard(Permutation::simple(n, 1));
  HeckeElt expected(n);
  expected.add_term(Permutation::identity(n), LaurentPoly(1));
  expected.add_term(Permutation::simple(n, 1), VINV - V);
  CHECK(h_mul(hs, hs) == expected);

  // KL generator squares to (v+v^-1) times itself
  const HeckeElt ks = HeckeElt::kl_generator(n, 1);
  CHECK(h_mul(ks, ks) == h_scale(LaurentPoly::v_plus_vinv(), ks));
}

TEST_CASE("bar involution") {
  const int n = 3;
  CHECK(h_bar(HeckeElt::unit(n)) == HeckeElt::unit(n));

  HeckeElt expected(n);
  expected.add_term(Permutation::simple(n, 1), LaurentPoly(1));
  expected.add_term(Permutation::identity(n), V - VINV);
  CHECK(h_bar(HeckeElt::standard(Permutation::simple(n, 1))) == expected);

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const HeckeElt a = random_elt(4, rng);
    CHECK(h_bar(h_bar(a)) == a);
    const HeckeElt b = random_elt(4, rng);
    CHECK(h_bar(h_mul(a, b)) == h_mul(h_bar(a), h_bar(b)));
  }
}

TEST_CASE("sigma anti-automorphism") {
  const int n = 4;
  const HeckeElt hs = HeckeElt::standard(Permutation::simple(n, 1));
  CHECK(h_sigma(hs) == hs);
  const Permutation s1s2 = Permutation::from_word(n, {1, 2});
  const Permutation s2s1 = Permutation::from_word(n, {2, 1});
  CHECK(h_sigma(HeckeElt::standard(s1s2)) == HeckeElt::standard(s2s1));

  std::mt19937 rng(9);
  for (int i = 0; i < 15; ++i) {
    const HeckeElt a = random_elt(n, rng), b = random_elt(n, rng);
    CHECK(h_sigma(h_mul(a, b)) == h_mul(h_sigma(b), h_sigma(a)));
    CHECK(h_bar(h_sigma(a)) == h_sigma(h_bar(a)));
  }
}

TEST_CASE("braid and quadratic relations for KL generators") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      const HeckeElt a = HeckeElt::kl_generator(n, i);
      CHECK(h_mul(a, a) == h_scale(LaurentPoly::v_plus_vinv(), a));
      for (int j = i + 1; j < n; ++j) {
        const HeckeElt b = HeckeElt::kl_generator(n, j);
        if (j == i + 1) {
          CHECK(h_add(h_mul(h_mul(a, b), a), b) == h_add(h_mul(h_mul(b, a), b), a));
        } else {
          CHECK(h_mul(a, b) == h_mul(b, a));
        }
      }
    }
  }
}

TEST_CASE("kl table small values") {
  KLTable t2(2);
  CHECK(t2.h(Permutation::identity(2), Permutation::simple(2, 1)) == V);

  // in S_3 every entry is v^(l(x)-l(y))
  KLTable t3(3);
  const PermTable& T = t3.table();
  for (int x = 0; x < T.size(); ++x)
    for (int y = 0; y < T.size(); ++y) {
      if (bruhat_leq(T.perm(y), T.perm(x)))
        CHECK(t3.h(y, x) == LaurentPoly::v(T.length(x) - T.length(y)));
      else
        CHECK(t3.h(y, x).is_zero());
    }
}

TEST_CASE("mu of a covering pair is 1") {
  for (int n = 2; n <= 5; ++n) {
    KLTable t(n);
    const PermTable& T = t.table();
    for (int x = 0; x < T.size(); ++x)
      for (int i = 1; i < n; ++i) {
        if (T.right_descent(x, i)) continue;
        CHECK(t.mu(x, T.right(x, i)) == 1);
      }
  }
}

TEST_CASE("kl basis elements are bar invariant") {
  KLTable t(4);
  for (int x = 0; x < t.table().size(); ++x) {
    const HeckeElt b = t.kl_basis_elt(x);
    CHECK(h_bar(b) == b);
  }
}

TEST_CASE("kl oracle equivalence") {
  for (int n = 2; n <= 4; ++n) {
    KLTable t(n);
    const auto oracle = oracle_kl_columns(n);
    for (int x = 0; x < t.table().size(); ++x) {
      std::map<int, LaurentPoly> got;
      for (const auto& [y, p] : t.column(x)) got[y] = p;
      CHECK(got == oracle[size_t(x)]);
    }
  }
}

TEST_CASE("kl positivity") {
  for (int n = 2; n <= 5; ++n) {
    KLTable t(n);
    for (int x = 0; x < t.table().size(); ++x)
      for (const auto& [y, p] : t.column(x))
        for (const auto& c : p.coeffs()) CHECK(c >= 0);
  }
}

TEST_CASE("base change to and from the kl basis") {
  KLTable t(4);
  // KL basis elements map to unit vectors
  for (int x = 0; x < t.table().size(); ++x) {
    const auto coeffs = to_kl(t.kl_basis_elt(x), t);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.begin()->first == t.table().perm(x));
    CHECK(coeffs.begin()->second.is_one());
  }
  // H_s = KL_s - v KL_e
  const auto hs = to_kl(HeckeElt::standard(Permutation::simple(4, 1)), t);
  REQUIRE(hs.size() == 2);
  CHECK(hs.at(Permutation::simple(4, 1)).is_one());
  CHECK(hs.at(Permutation::identity(4)) == -V);

  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    const HeckeElt a = random_elt(4, rng);
    CHECK(from_kl(to_kl(a, t), t) == a);
  }
}

TEST_CASE("kl structure constants respect the left order") {
  // coefficients of KL_w KL_x expand over y >=_L w (checked via cells in
  // test_cells; here only bar invariance of products)
  KLTable t(3);
  for (int w = 0; w < 6; ++w)
    for (int x = 0; x < 6; ++x) {
      const HeckeElt prod = h_mul(t.kl_basis_elt(w), t.kl_basis_elt(x));
      CHECK(h_bar(prod) == prod);
    }
}
