#include "heckelib/linalg.hpp"

#include <algorithm>
#include <map>

namespace hecke {

PolyMatrix poly_identity(int d) {
  auto m = PolyMatrix(size_t(d), std::vector<LaurentPoly>(size_t(d)));
  for (int i = 0; i < d; ++i) m[size_t(i)][size_t(i)] = LaurentPoly(1);
  return m;
}

PolyMatrix poly_zero(int rows, int cols) {
  return PolyMatrix(size_t(rows), std::vector<LaurentPoly>(size_t(cols)));
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix r(n, std::vector<LaurentPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

PolyMatrix poly_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

PolyMatrix poly_scale(const LaurentPoly& c, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

PolyMatrix poly_transpose(const PolyMatrix& a) {
  if (a.empty()) return a;
  PolyMatrix r(a[0].size(), std::vector<LaurentPoly>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

bool poly_eq(const PolyMatrix& a, const PolyMatrix& b) { return a == b; }

PolyMatrix poly_eval_one(const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x = LaurentPoly(x.eval_one());
  return r;
}

SparseVec sparse_normalize(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            out.end());
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  return sparse_axpy(a, LaurentPoly(1), b);
}

SparseVec sparse_axpy(const SparseVec& a, const LaurentPoly& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      LaurentPoly x = c * b[j].second;
      if (!x.is_zero()) out.emplace_back(b[j].first, std::move(x));
      ++j;
    } else {
      LaurentPoly x = a[i].second + c * b[j].second;
      if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_apply(const SparseVec& row, const SparseMatrix& m) {
  std::map<int, LaurentPoly> acc;
  for (const auto& [col, val] : row)
    for (const auto& [c2, v2] : m[size_t(col)]) {
      auto it = acc.try_emplace(c2, LaurentPoly()).first;
      it->second += val * v2;
    }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [c, p] : acc)
    if (!p.is_zero()) out.emplace_back(c, std::move(p));
  return out;
}

SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sparse_apply(a[i], b);
  return r;
}

SparseMatrix sparse_add(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sparse_add(a[i], b[i]);
  return r;
}

SparseMatrix sparse_scale(const LaurentPoly& c, const SparseMatrix& m) {
  SparseMatrix r = m;
  for (auto& row : r) {
    for (auto& [col, val] : row) val *= c;
    row.erase(std::remove_if(row.begin(), row.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              row.end());
  }
  return r;
}

SparseMatrix sparse_identity(int d) {
  auto m = SparseMatrix(size_t(d));
  for (int i = 0; i < d; ++i) m[size_t(i)].emplace_back(i, LaurentPoly(1));
  return m;
}

bool sparse_eq(const SparseMatrix& a, const SparseMatrix& b) { return a == b; }

PolyMatrix sparse_to_dense(const SparseMatrix& m, int cols) {
  PolyMatrix r(m.size(), std::vector<LaurentPoly>(size_t(cols)));
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& [c, v] : m[i]) r[i][size_t(c)] = v;
  return r;
}

SparseMatrix dense_to_sparse(const PolyMatrix& m) {
  SparseMatrix r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) r[i].emplace_back(int(j), m[i][j]);
  return r;
}

RFMatrix rf_from_poly(const PolyMatrix& m) {
  RFMatrix r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

RFMatrix rf_mul(const RFMatrix& a, const RFMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RFMatrix r(n, std::vector<RationalFunction>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

RFMatrix rf_transpose(const RFMatrix& a) {
  if (a.empty()) return a;
  RFMatrix r(a[0].size(), std::vector<RationalFunction>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

RFMatrix rf_identity(int d) {
  auto m = RFMatrix(size_t(d), std::vector<RationalFunction>(size_t(d)));
  for (int i = 0; i < d; ++i) m[size_t(i)][size_t(i)] = RationalFunction(1);
  return m;
}

bool rf_eq(const RFMatrix& a, const RFMatrix& b) { return a == b; }

bool rf_is_identity(const RFMatrix& a) { return rf_eq(a, rf_identity(int(a.size()))); }

RFMatrix rf_invert_matrix(const RFMatrix& m) {
  const size_t d = m.size();
  RFMatrix a = m;
  RFMatrix inv = rf_identity(int(d));
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) throw SingularMatrix("rf_invert_matrix: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const RationalFunction p = a[col][col].inverse();
    for (size_t j = 0; j < d; ++j) {
      a[col][j] *= p;
      inv[col][j] *= p;
    }
    for (size_t i = 0; i < d; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const RationalFunction f = a[i][col];
      for (size_t j = 0; j < d; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RFMatrix rf_invert_matrix(const PolyMatrix& m) { return rf_invert_matrix(rf_from_poly(m)); }

RationalFunction rf_det(const RFMatrix& m) {
  RFMatrix a = m;
  const size_t d = a.size();
  RationalFunction det(1);
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) return RationalFunction();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const RationalFunction p = a[col][col].inverse();
    for (size_t i = col + 1; i < d; ++i) {
      if (a[i][col].is_zero()) continue;
      const RationalFunction f = a[i][col] * p;
      for (size_t j = col; j < d; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::vector<std::vector<RationalFunction>> rf_nullspace(const RFMatrix& m) {
  if (m.empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  RFMatrix a = m;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const RationalFunction p = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] *= p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RationalFunction f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(int(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[size_t(c)] = true;
  std::vector<std::vector<RationalFunction>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RationalFunction> x(cols);
    x[free] = RationalFunction(1);
    for (size_t i = 0; i < pivot_col.size(); ++i)
      x[size_t(pivot_col[i])] = -a[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<LaurentPoly> rf_vector_primitive(const std::vector<RationalFunction>& x) {
  LaurentPoly lcm(1);
  for (const auto& e : x) {
    if (e.is_zero()) continue;
    const LaurentPoly g = laurent_gcd(lcm, e.den());
    // lcm = lcm * den / gcd, computed via the rational reducer
    lcm = RationalFunction(lcm * e.den(), g).num();
  }
  std::vector<LaurentPoly> out;
  out.reserve(x.size());
  Int content = 0;
  for (const auto& e : x) {
    RationalFunction scaled = e * RationalFunction(lcm);
    if (!scaled.is_laurent()) throw std::logic_error("rf_vector_primitive: lcm failed");
    out.push_back(scaled.num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().content().get_mpz_t());
  }
  if (content > 1) {
    for (auto& p : out) {
      std::vector<Int> c = p.coeffs();
      for (auto& q : c) {
        Int d;
        mpz_divexact(d.get_mpz_t(), q.get_mpz_t(), content.get_mpz_t());
        q = d;
      }
      p = LaurentPoly(p.min_deg(), std::move(c));
    }
  }
  return out;
}

}  // namespace hecke
