#include "heckelib/induced.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace hecke {

std::shared_ptr<const KLTable> kl_table_shared(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const KLTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ptr = std::make_shared<const KLTable>(n);
  cache[n] = ptr;
  return ptr;
}

std::shared_ptr<const CellDecomposition> cells_shared(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CellDecomposition>> cache;
  auto t = kl_table_shared(n);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ptr = std::make_shared<const CellDecomposition>(*t);
  cache[n] = ptr;
  return ptr;
}

PolyMatrix ProductCellModule::act_global(int g) const {
  if (!para.is_sub_generator(g))
    throw std::invalid_argument("act_global: generator not in the subgroup");
  const int b = para.block_of(g);
  const int local = g - para.block_start(b);
  const PolyMatrix& fact = factors[size_t(b)].act(local);
  const int d = dim();
  PolyMatrix m = poly_zero(d, d);
  for (int t = 0; t < d; ++t)
    for (int u = 0; u < d; ++u) {
      bool same = true;
      for (size_t j = 0; same && j < tuples[size_t(t)].size(); ++j)
        if (int(j) != b && tuples[size_t(t)][j] != tuples[size_t(u)][j]) same = false;
      if (!same) continue;
      m[size_t(t)][size_t(u)] =
          fact[size_t(tuples[size_t(t)][size_t(b)])][size_t(tuples[size_t(u)][size_t(b)])];
    }
  return m;
}

PolyMatrix ProductCellModule::form() const {
  std::vector<PolyMatrix> factor_forms;
  factor_forms.reserve(factors.size());
  for (const CellModule& f : factors) factor_forms.push_back(invariant_form(f));
  const int d = dim();
  PolyMatrix g = poly_zero(d, d);
  for (int t = 0; t < d; ++t)
    for (int u = 0; u < d; ++u) {
      LaurentPoly prod(1);
      for (size_t j = 0; j < factors.size(); ++j) {
        prod *= factor_forms[j][size_t(tuples[size_t(t)][j])][size_t(tuples[size_t(u)][j])];
        if (prod.is_zero()) break;
      }
      g[size_t(t)][size_t(u)] = prod;
    }
  return g;
}

ProductCellModule product_cell_module(const ParabolicData& p, const Permutation& member) {
  if (!p.in_subgroup(member))
    throw NotACell("product cell: representative not in the Young subgroup");
  ProductCellModule out{p, {}, {}, {}};
  const auto blocks = p.split(member);
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int k = p.composition()[b];
    auto t = kl_table_shared(k);
    auto c = cells_shared(k);
    out.factors.push_back(cell_module(blocks[b], *t, *c));
  }
  // cartesian product of the factor cells
  std::vector<std::vector<int>> tuples{{}};
  for (const CellModule& f : out.factors) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int i = 0; i < f.dim(); ++i) {
        auto ext = t;
        ext.push_back(i);
        next.push_back(std::move(ext));
      }
    tuples = std::move(next);
  }
  std::vector<std::pair<Permutation, std::vector<int>>> entries;
  for (auto& t : tuples) {
    std::vector<Permutation> parts;
    for (size_t b = 0; b < out.factors.size(); ++b)
      parts.push_back(out.factors[b].cell[size_t(t[b])]);
    entries.emplace_back(p.embed(parts), std::move(t));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
  for (auto& [perm, tup] : entries) {
    out.basis.push_back(perm);
    out.tuples.push_back(tup);
  }
  return out;
}

ProductCellModule product_cell_module(const ParabolicData& p,
                                      const std::vector<Permutation>& r_prime) {
  if (r_prime.empty()) throw NotACell("product cell: empty set");
  ProductCellModule m = product_cell_module(p, r_prime[0]);
  std::set<std::vector<int>> expected, given;
  for (const Permutation& w : m.basis) expected.insert(w.one_line());
  for (const Permutation& w : r_prime) given.insert(w.one_line());
  if (expected != given)
    throw NotACell("product cell: the set is not a product of right cells of the factors");
  return m;
}

int InducedModule::index_of(int x, int w) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].x == x && basis[i].w == w) return int(i);
  throw std::logic_error("InducedModule: bad pair");
}

namespace {

InducedModule build_induced(const ParabolicData& p, ProductCellModule cellmod) {
  InducedModule m{p, std::move(cellmod), {}, {}, {}};
  const auto& shorts = p.short_reps();

  std::vector<std::pair<Permutation, IndexPair>> entries;
  for (int x = 0; x < m.cell.dim(); ++x)
    for (int w = 0; w < int(shorts.size()); ++w)
      entries.emplace_back(m.cell.basis[size_t(x)] * shorts[size_t(w)], IndexPair{x, w});
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
  for (auto& [prod, pair] : entries) {
    m.products.push_back(prod);
    m.basis.push_back(pair);
  }
  auto index = std::vector<int>(size_t(m.cell.dim() * int(shorts.size())), -1);
  auto at = [&](int x, int w) -> int& { return index[size_t(x * int(shorts.size()) + w)]; };
  for (int i = 0; i < m.dim(); ++i) at(m.basis[size_t(i)].x, m.basis[size_t(i)].w) = i;

  // case C needs the product-cell action of the pulled-through generator
  std::map<int, PolyMatrix> sub_action;
  for (int g : p.sub_generators()) sub_action.emplace(g, m.cell.act_global(g));

  const int n = p.n();
  static const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  for (int s = 1; s < n; ++s) {
    auto a = SparseMatrix(size_t(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
      const auto [x, w] = m.basis[size_t(i)];
      const Permutation& wp = shorts[size_t(w)];
      const Permutation ws = wp.right_mult_s(s);
      const int si = p.short_index(ws);
      SparseVec row;
      if (si >= 0) {
        row.emplace_back(at(x, si), LaurentPoly(1));
        row.emplace_back(i, wp.right_descent(s) ? vinv : v);
      } else {
        // ws = s'w for a simple reflection s' of W'
        const Permutation sp = ws * wp.inverse();
        int g = -1;
        for (int cand : p.sub_generators())
          if (sp == Permutation::simple(n, cand)) {
            g = cand;
            break;
          }
        if (g < 0) throw std::logic_error("induce: pulled-through reflection not simple");
        const PolyMatrix& act = sub_action.at(g);
        for (int xp = 0; xp < m.cell.dim(); ++xp) {
          const LaurentPoly& c = act[size_t(x)][size_t(xp)];
          if (!c.is_zero()) row.emplace_back(at(xp, w), c);
        }
      }
      a[size_t(i)] = sparse_normalize(std::move(row));
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

}  // namespace

InducedModule induce(const ParabolicData& p, const Permutation& r_prime_member) {
  return build_induced(p, product_cell_module(p, r_prime_member));
}

InducedModule induce(const ParabolicData& p, const std::vector<Permutation>& r_prime) {
  return build_induced(p, product_cell_module(p, r_prime));
}

std::vector<Permutation> j_set(const InducedModule& m) {
  auto cells = cells_shared(m.n());
  const PermTable& T = cells->table();
  std::set<std::vector<int>> products;
  for (const Permutation& p : m.products) products.insert(p.one_line());
  std::vector<Permutation> out;
  for (int y = 0; y < T.size(); ++y) {
    const Permutation& yp = T.perm(y);
    if (products.count(yp.one_line())) continue;
    for (const Permutation& r : m.cell.basis) {
      if (cells->right_leq(r, yp)) {  // y >=_R R'
        out.push_back(yp);
        break;
      }
    }
  }
  return out;  // rank order = (length, lex)
}

InducedBar::InducedBar(const InducedModule& m) : m_(m) {
  const ParabolicData& p = m.para;
  const int n = p.n();
  static const LaurentPoly v = LaurentPoly::v(1);

  // cell-module vectors x . H_u, memoized over (x, u)
  std::map<int, PolyMatrix> sub_std_action;  // H_g = KLgen_g - v
  for (int g : p.sub_generators()) {
    PolyMatrix a = m.cell.act_global(g);
    for (int i = 0; i < m.cell.dim(); ++i) a[size_t(i)][size_t(i)] -= v;
    sub_std_action.emplace(g, std::move(a));
  }
  std::map<std::pair<int, std::vector<int>>, std::vector<LaurentPoly>> cellvec;
  auto cell_apply = [&](int x, const Permutation& u) -> const std::vector<LaurentPoly>& {
    const auto key = std::make_pair(x, u.one_line());
    auto it = cellvec.find(key);
    if (it != cellvec.end()) return it->second;
    auto vec = std::vector<LaurentPoly>(size_t(m_.cell.dim()));
    vec[size_t(x)] = LaurentPoly(1);
    for (int g : u.reduced_word()) {
      const PolyMatrix& a = sub_std_action.at(g);
      auto next = std::vector<LaurentPoly>(size_t(m_.cell.dim()));
      for (int i = 0; i < m_.cell.dim(); ++i) {
        if (vec[size_t(i)].is_zero()) continue;
        for (int j = 0; j < m_.cell.dim(); ++j)
          if (!a[size_t(i)][size_t(j)].is_zero())
            next[size_t(j)] += vec[size_t(i)] * a[size_t(i)][size_t(j)];
      }
      vec = std::move(next);
    }
    return cellvec.emplace(key, std::move(vec)).first->second;
  };

  // bar(H_w) per short representative, shared across all x
  const auto& shorts = p.short_reps();
  std::vector<HeckeElt> bar_h;
  bar_h.reserve(shorts.size());
  for (const Permutation& w : shorts) bar_h.push_back(h_bar(HeckeElt::standard(w)));

  auto index = std::vector<std::vector<int>>(size_t(m.cell.dim()),
                                             std::vector<int>(shorts.size(), -1));
  for (int i = 0; i < m.dim(); ++i)
    index[size_t(m.basis[size_t(i)].x)][size_t(m.basis[size_t(i)].w)] = i;

  bar_basis_.resize(size_t(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    const auto [x, w] = m.basis[size_t(i)];
    SparseVec acc;
    for (const auto& [y, c] : bar_h[size_t(w)].support()) {
      const auto [u, wp] = p.decompose(y);
      const int wi = p.short_index(wp);
      const auto& vec = cell_apply(x, u);
      for (int xp = 0; xp < m.cell.dim(); ++xp)
        if (!vec[size_t(xp)].is_zero())
          acc.emplace_back(index[size_t(xp)][size_t(wi)], c * vec[size_t(xp)]);
    }
    bar_basis_[size_t(i)] = sparse_normalize(std::move(acc));
  }
}

SparseVec InducedBar::operator()(const SparseVec& elt) const {
  SparseVec acc;
  for (const auto& [idx, coeff] : elt) {
    const LaurentPoly cb = coeff.bar();
    for (const auto& [j, p] : bar_basis_[size_t(idx)]) acc.emplace_back(j, cb * p);
  }
  return sparse_normalize(std::move(acc));
}

InducedKL kl_elements(const InducedModule& m) {
  InducedBar bar(m);
  const int d = m.dim();

  auto positive_part = [](const LaurentPoly& g) {
    LaurentPoly c;
    for (long deg = 1; deg <= g.max_deg(); ++deg)
      c += LaurentPoly::monomial(g.coeff(deg), deg);
    return c;
  };

  InducedKL out;
  out.columns.resize(size_t(d));
  for (int j = 0; j < d; ++j) {
    // triangularity of the bar defect in the (length, lex) order
    SparseVec defect = sparse_axpy(bar.basis_bar(j), LaurentPoly(-1), {{j, LaurentPoly(1)}});
    const int lj = m.products[size_t(j)].length();
    for (const auto& [idx, c] : defect) {
      if (m.products[size_t(idx)].length() >= lj)
        throw TriangularityViolation("kl_elements: bar defect not strictly shorter at index " +
                                     std::to_string(j));
    }
    SparseVec col{{j, LaurentPoly(1)}};
    while (!defect.empty()) {
      const auto [idx, g] = defect.back();
      if (idx >= j || g.bar() != -g)
        throw TriangularityViolation("kl_elements: defect elimination left the cone");
      const LaurentPoly c = positive_part(g);
      if (!c.is_zero()) col = sparse_axpy(col, c, out.columns[size_t(idx)]);
      defect = sparse_axpy(defect, -g, out.columns[size_t(idx)]);
    }
    for (const auto& [idx, c] : col)
      if (idx != j && !c.in_v_zv())
        throw TriangularityViolation("kl_elements: off-diagonal coefficient outside vZ[v]");
    out.columns[size_t(j)] = std::move(col);
  }

  // action in the box basis by triangular elimination
  for (size_t s = 0; s < m.action.size(); ++s) {
    auto b = SparseMatrix(size_t(d));
    for (int j = 0; j < d; ++j) {
      SparseVec img = sparse_apply(out.columns[size_t(j)], m.action[s]);
      SparseVec row;
      while (!img.empty()) {
        const auto [idx, c] = img.back();
        row.emplace_back(idx, c);
        img = sparse_axpy(img, -c, out.columns[size_t(idx)]);
      }
      b[size_t(j)] = sparse_normalize(std::move(row));
    }
    out.action.push_back(std::move(b));
  }
  return out;
}

PolyMatrix ind_form(const InducedModule& m) {
  const PolyMatrix cell_g = m.cell.form();
  const int d = m.dim();
  PolyMatrix g = poly_zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (m.basis[size_t(i)].w != m.basis[size_t(j)].w) continue;
      g[size_t(i)][size_t(j)] = cell_g[size_t(m.basis[size_t(i)].x)][size_t(m.basis[size_t(j)].x)];
    }
  return g;
}

FourBases four_bases(const InducedModule& m) {
  const InducedKL kl = kl_elements(m);
  FourBases out;
  const int d = m.dim();
  out.kl = poly_zero(d, d);
  for (int j = 0; j < d; ++j)
    for (const auto& [i, c] : kl.columns[size_t(j)]) out.kl[size_t(i)][size_t(j)] = c;

  const PolyMatrix g = ind_form(m);
  out.dual_kl_s = rf_invert_matrix(g);  // symmetric, so no transpose needed
  out.dual_kl = rf_transpose(rf_invert_matrix(poly_mul(g, out.kl)));
  return out;
}

}  // namespace hecke
