#include "heckelib/cellmod.hpp"

#include <algorithm>

namespace hecke {

CellModule cell_module(const Permutation& member, const KLTable& t,
                       const CellDecomposition& c) {
  const PermTable& T = t.table();
  const int cell_id = c.right_cell_of(T.rank(member));
  const std::vector<int>& ranks = c.right_cells()[size_t(cell_id)];  // rank order = (length, lex)

  CellModule m;
  m.n = t.n();
  std::map<int, int> index;
  for (size_t i = 0; i < ranks.size(); ++i) {
    m.cell.push_back(T.perm(ranks[i]));
    index[ranks[i]] = int(i);
  }

  const int d = m.dim();
  for (int s = 1; s < m.n; ++s) {
    PolyMatrix a = poly_zero(d, d);
    for (int i = 0; i < d; ++i) {
      const int x = ranks[size_t(i)];
      if (T.right_descent(x, s)) {
        a[size_t(i)][size_t(i)] = LaurentPoly::v_plus_vinv();
        continue;
      }
      const int xs = T.right(x, s);
      auto it = index.find(xs);
      if (it != index.end()) a[size_t(i)][size_t(it->second)] += LaurentPoly(1);
      for (const auto& [y, mu] : t.mu_list(x)) {
        if (!T.right_descent(y, s)) continue;
        auto jt = index.find(y);
        if (jt != index.end()) a[size_t(i)][size_t(jt->second)] += LaurentPoly(Int(mu));
      }
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

PolyMatrix word_action(const CellModule& m, const std::vector<int>& word) {
  PolyMatrix r = poly_identity(m.dim());
  for (int s : word) r = poly_mul(r, m.act(s));
  return r;
}

bool satisfies_kl_relations(const std::vector<PolyMatrix>& action) {
  const int gens = int(action.size());
  for (int i = 0; i < gens; ++i) {
    const PolyMatrix& a = action[size_t(i)];
    if (!poly_eq(poly_mul(a, a), poly_scale(LaurentPoly::v_plus_vinv(), a))) return false;
    for (int j = i + 1; j < gens; ++j) {
      const PolyMatrix& b = action[size_t(j)];
      if (j == i + 1) {
        const PolyMatrix lhs = poly_add(poly_mul(poly_mul(a, b), a), b);
        const PolyMatrix rhs = poly_add(poly_mul(poly_mul(b, a), b), a);
        if (!poly_eq(lhs, rhs)) return false;
      } else {
        if (!poly_eq(poly_mul(a, b), poly_mul(b, a))) return false;
      }
    }
  }
  return true;
}

bool satisfies_standard_relations(const std::vector<PolyMatrix>& action) {
  const int gens = int(action.size());
  const int d = action.empty() ? 0 : int(action[0].size());
  const PolyMatrix id = poly_identity(d);
  const LaurentPoly vinv_minus_v = LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (int i = 0; i < gens; ++i) {
    const PolyMatrix& a = action[size_t(i)];
    if (!poly_eq(poly_mul(a, a), poly_add(id, poly_scale(vinv_minus_v, a)))) return false;
    for (int j = i + 1; j < gens; ++j) {
      const PolyMatrix& b = action[size_t(j)];
      if (j == i + 1) {
        if (!poly_eq(poly_mul(poly_mul(a, b), a), poly_mul(poly_mul(b, a), b))) return false;
      } else {
        if (!poly_eq(poly_mul(a, b), poly_mul(b, a))) return false;
      }
    }
  }
  return true;
}

PolyMatrix solve_invariant_form(const std::vector<PolyMatrix>& action) {
  const int d = action.empty() ? 1 : int(action[0].size());
  // unknowns: g_{jk} for j <= k
  auto unknown = [d](int j, int k) {
    if (j > k) std::swap(j, k);
    return j * d - j * (j - 1) / 2 + (k - j);
  };
  const int unknowns = d * (d + 1) / 2;
  PolyMatrix system;
  for (const PolyMatrix& msk : action) {
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        // (M G - G M^T)[i][k] = sum_j M[i][j] g_{jk} - g_{ij} M[k][j]
        auto row = std::vector<LaurentPoly>(size_t(unknowns));
        for (int j = 0; j < d; ++j) {
          row[size_t(unknown(j, k))] += msk[size_t(i)][size_t(j)];
          row[size_t(unknown(i, j))] -= msk[size_t(k)][size_t(j)];
        }
        bool nontrivial = false;
        for (const auto& e : row)
          if (!e.is_zero()) {
            nontrivial = true;
            break;
          }
        if (nontrivial) system.push_back(std::move(row));
      }
  }

  std::vector<std::vector<RationalFunction>> basis;
  if (system.empty()) {
    // no constraints (e.g. S_1): any symmetric matrix works, the line is
    // not unique unless d(d+1)/2 == 1
    if (unknowns != 1) throw NonUniqueForm("invariant form: unconstrained system");
    basis = {{RationalFunction(1)}};
  } else {
    basis = rf_nullspace(rf_from_poly(system));
  }
  if (basis.size() != 1)
    throw NonUniqueForm("invariant form: solution space has dimension " +
                        std::to_string(basis.size()));

  const std::vector<LaurentPoly> flat = rf_vector_primitive(basis[0]);
  PolyMatrix g = poly_zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = j; k < d; ++k) {
      g[size_t(j)][size_t(k)] = flat[size_t(unknown(j, k))];
      g[size_t(k)][size_t(j)] = flat[size_t(unknown(j, k))];
    }

  // normalize: center the support of the anchor entry (the diagonal at
  // the minimal-length basis element when nonzero) and fix its sign
  const LaurentPoly* anchor = nullptr;
  if (!g[0][0].is_zero()) anchor = &g[0][0];
  for (int i = 0; anchor == nullptr && i < d; ++i)
    if (!g[size_t(i)][size_t(i)].is_zero()) anchor = &g[size_t(i)][size_t(i)];
  for (int i = 0; anchor == nullptr && i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!g[size_t(i)][size_t(j)].is_zero()) {
        anchor = &g[size_t(i)][size_t(j)];
        break;
      }
  if (anchor == nullptr) throw NonUniqueForm("invariant form: zero solution");
  const long span = anchor->min_deg() + anchor->max_deg();
  const long shift = -(span >= 0 ? span / 2 : (span - 1) / 2);  // floor
  const bool negate = anchor->coeffs().back() < 0;
  for (auto& row : g)
    for (auto& e : row) {
      e = e.shifted(shift);
      if (negate) e = -e;
    }
  return g;
}

PolyMatrix invariant_form(const CellModule& m) { return solve_invariant_form(m.action); }

bool form_is_invariant(const std::vector<PolyMatrix>& action, const PolyMatrix& g) {
  const PolyMatrix gt = poly_transpose(g);
  if (!poly_eq(g, gt)) return false;
  for (const PolyMatrix& a : action)
    if (!poly_eq(poly_mul(a, g), poly_mul(g, poly_transpose(a)))) return false;
  return true;
}

std::optional<RFMatrix> module_intertwiner(const std::vector<PolyMatrix>& a1,
                                           const std::vector<PolyMatrix>& a2) {
  const int d1 = a1.empty() ? 0 : int(a1[0].size());
  const int d2 = a2.empty() ? 0 : int(a2[0].size());
  if (d1 != d2 || d1 == 0) return std::nullopt;  // invertible maps need equal dims
  const int d = d1;
  auto unknown = [d](int j, int k) { return j * d + k; };
  PolyMatrix system;
  for (size_t s = 0; s < a1.size(); ++s) {
    const PolyMatrix& A = a1[s];
    const PolyMatrix& B = a2[s];
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        // (A F - F B)[i][k] = sum_j A[i][j] f_{jk} - f_{ij} B[j][k]
        auto row = std::vector<LaurentPoly>(size_t(d * d));
        for (int j = 0; j < d; ++j) {
          row[size_t(unknown(j, k))] += A[size_t(i)][size_t(j)];
          row[size_t(unknown(i, j))] -= B[size_t(j)][size_t(k)];
        }
        system.push_back(std::move(row));
      }
  }
  const auto basis = rf_nullspace(rf_from_poly(system));
  auto unpack = [d](const std::vector<RationalFunction>& flat) {
    auto f = RFMatrix(size_t(d), std::vector<RationalFunction>(size_t(d)));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) f[size_t(j)][size_t(k)] = flat[size_t(j * d + k)];
    return f;
  };
  for (const auto& vec : basis) {
    RFMatrix f = unpack(vec);
    if (!rf_det(f).is_zero()) return f;
  }
  if (basis.size() > 1) {
    // generic combination
    auto sum = std::vector<RationalFunction>(size_t(d * d));
    for (const auto& vec : basis)
      for (size_t i = 0; i < vec.size(); ++i) sum[i] += vec[i];
    RFMatrix f = unpack(sum);
    if (!rf_det(f).is_zero()) return f;
  }
  return std::nullopt;
}

std::optional<RFMatrix> cell_iso(const CellModule& m1, const CellModule& m2) {
  if (m1.n != m2.n) throw SizeMismatch("cell_iso: mixed group sizes");
  return module_intertwiner(m1.action, m2.action);
}

}  // namespace hecke
