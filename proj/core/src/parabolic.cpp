#include "heckelib/parabolic.hpp"

#include <algorithm>

namespace hecke {

ParabolicModule parabolic_module(ParabolicKind kind, const ParabolicData& p) {
  const auto& shorts = p.short_reps();
  const int d = int(shorts.size());
  const int n = p.n();
  static const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);

  ParabolicModule m{kind, p, {}};
  for (int s = 1; s < n; ++s) {
    PolyMatrix a = poly_zero(d, d);
    for (int i = 0; i < d; ++i) {
      const Permutation& x = shorts[size_t(i)];
      const Permutation xs = x.right_mult_s(s);
      const int si = p.short_index(xs);
      if (si >= 0) {
        a[size_t(i)][size_t(si)] += LaurentPoly(1);
        a[size_t(i)][size_t(i)] += x.right_descent(s) ? vinv : v;
      } else if (kind == ParabolicKind::permutation) {
        a[size_t(i)][size_t(i)] = LaurentPoly::v_plus_vinv();
      }
      // sign: zero row when xs leaves the short representatives
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

TwistingAction twisting_matrices(const ParabolicData& p) {
  TwistingAction t{p, {}, {}};
  for (const Permutation& w : p.short_reps()) t.basis.push_back(w.inverse());
  std::sort(t.basis.begin(), t.basis.end(), length_lex_less);

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < t.basis.size(); ++i) index[t.basis[i].one_line()] = int(i);
  auto left_short = [&](const Permutation& x) {
    auto it = index.find(x.one_line());
    return it == index.end() ? -1 : it->second;
  };

  const int d = t.dim();
  const int n = p.n();
  static const LaurentPoly vinv = LaurentPoly::v(-1);
  static const LaurentPoly vinv_minus_v = LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (int s = 1; s < n; ++s) {
    PolyMatrix a = poly_zero(d, d);
    for (int i = 0; i < d; ++i) {
      const Permutation& x = t.basis[size_t(i)];
      const Permutation sx = x.left_mult_s(s);
      const int si = left_short(sx);
      if (si < 0) {
        a[size_t(i)][size_t(i)] = vinv;
      } else if (sx.length() < x.length()) {
        a[size_t(i)][size_t(si)] += LaurentPoly(1);
        a[size_t(i)][size_t(i)] += vinv_minus_v;
      } else {
        a[size_t(i)][size_t(si)] += LaurentPoly(1);
      }
    }
    t.matrices.push_back(std::move(a));
  }
  return t;
}

std::optional<RFMatrix> parabolic_iso_check(const ParabolicModule& pm, const InducedModule& im) {
  if (pm.para.n() != im.n() || pm.para.composition() != im.para.composition())
    throw SizeMismatch("parabolic_iso_check: mismatched parabolic data");
  if (im.cell.dim() != 1)
    throw std::invalid_argument("parabolic_iso_check: expected a one-dimensional cell");
  std::vector<PolyMatrix> dense;
  for (int s = 1; s < im.n(); ++s) dense.push_back(sparse_to_dense(im.act(s), im.dim()));
  return module_intertwiner(pm.action, dense);
}

}  // namespace hecke
