#include "heckelib/cells.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace hecke {

namespace {

// Tarjan, iterative; components come out in reverse topological order
// (every edge points from its own component to an earlier-finished one)
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& graph) {
  const int n = int(graph.size());
  std::vector<int> num(size_t(n), -1), low(size_t(n), 0), stack_index(size_t(n), -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (num[size_t(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    num[size_t(root)] = low[size_t(root)] = counter++;
    stack_index[size_t(root)] = int(stack.size());
    stack.push_back(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < graph[size_t(f.v)].size()) {
        const int u = graph[size_t(f.v)][f.edge++];
        if (num[size_t(u)] == -1) {
          num[size_t(u)] = low[size_t(u)] = counter++;
          stack_index[size_t(u)] = int(stack.size());
          stack.push_back(u);
          frames.push_back({u, 0});
        } else if (stack_index[size_t(u)] != -1) {
          low[size_t(f.v)] = std::min(low[size_t(f.v)], num[size_t(u)]);
        }
      } else {
        if (low[size_t(f.v)] == num[size_t(f.v)]) {
          const size_t base = size_t(stack_index[size_t(f.v)]);
          std::vector<int> comp(stack.begin() + long(base), stack.end());
          for (int u : comp) stack_index[size_t(u)] = -1;
          stack.resize(base);
          sccs.push_back(std::move(comp));
        }
        const int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[size_t(frames.back().v)] = std::min(low[size_t(frames.back().v)], low[size_t(v)]);
      }
    }
  }
  return sccs;
}

// canonical ordering: sort members, then cells by minimal member rank
std::vector<std::vector<int>> canonical_cells(std::vector<std::vector<int>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return cells;
}

std::vector<int> membership(const std::vector<std::vector<int>>& cells, int sz) {
  std::vector<int> of(size_t(sz), -1);
  for (size_t c = 0; c < cells.size(); ++c)
    for (int r : cells[c]) of[size_t(r)] = int(c);
  return of;
}

}  // namespace

CellDecomposition::CellDecomposition(const KLTable& t) : n_(t.n()), tbl_(t.table_ptr()) {
  const PermTable& T = *tbl_;
  const int sz = T.size();

  // one-step edges of the left relation: a -> b iff mu(a,b) != 0 and
  // D_L(a) \ D_L(b) nonempty; mu pairs are read off the stored mu lists
  auto left_graph = std::vector<std::vector<int>>(size_t(sz));
  auto right_graph = std::vector<std::vector<int>>(size_t(sz));
  for (int x = 0; x < sz; ++x) {
    for (const auto& [y, m] : t.mu_list(x)) {
      (void)m;
      for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        if (T.left_descent_mask(a) & ~T.left_descent_mask(b))
          left_graph[size_t(a)].push_back(b);
        if (T.right_descent_mask(a) & ~T.right_descent_mask(b))
          right_graph[size_t(a)].push_back(b);
      }
    }
  }

  left_ = canonical_cells(strongly_connected_components(left_graph));
  right_ = canonical_cells(strongly_connected_components(right_graph));
  left_of_ = membership(left_, sz);
  right_of_ = membership(right_, sz);

  // two-sided cells: join left and right partitions
  std::vector<int> parent(size_t(sz), 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[size_t(a)] != a) a = parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
    return a;
  };
  auto unite = [&](int a, int b) { parent[size_t(find(a))] = find(b); };
  for (const auto& cell : left_)
    for (size_t i = 1; i < cell.size(); ++i) unite(cell[0], cell[i]);
  for (const auto& cell : right_)
    for (size_t i = 1; i < cell.size(); ++i) unite(cell[0], cell[i]);
  std::map<int, std::vector<int>> comps;
  for (int r = 0; r < sz; ++r) comps[find(r)].push_back(r);
  std::vector<std::vector<int>> two;
  for (auto& [root, members] : comps) two.push_back(std::move(members));
  two_sided_ = canonical_cells(std::move(two));
  two_of_ = membership(two_sided_, sz);

  // right preorder on cells: reachability in the condensation
  const int rc = int(right_.size());
  auto cell_graph = std::vector<std::vector<int>>(size_t(rc));
  for (int a = 0; a < sz; ++a)
    for (int b : right_graph[size_t(a)]) {
      const int ca = right_of_[size_t(a)], cb = right_of_[size_t(b)];
      if (ca != cb) cell_graph[size_t(ca)].push_back(cb);
    }
  right_below_.assign(size_t(rc), std::vector<bool>(size_t(rc), false));
  for (int c = 0; c < rc; ++c) {
    // DFS: everything reachable from c is <=_R c
    std::vector<int> todo{c};
    right_below_[size_t(c)][size_t(c)] = true;
    while (!todo.empty()) {
      const int cur = todo.back();
      todo.pop_back();
      for (int nxt : cell_graph[size_t(cur)]) {
        if (!right_below_[size_t(c)][size_t(nxt)]) {
          right_below_[size_t(c)][size_t(nxt)] = true;
          todo.push_back(nxt);
        }
      }
    }
  }
}

bool CellDecomposition::right_leq(int x, int y) const {
  return right_below_[size_t(right_of_[size_t(y)])][size_t(right_of_[size_t(x)])];
}

bool CellDecomposition::right_leq(const Permutation& x, const Permutation& y) const {
  return right_leq(tbl_->rank(x), tbl_->rank(y));
}

bool CellDecomposition::right_cell_leq(int cell_a, int cell_b) const {
  return right_below_[size_t(cell_b)][size_t(cell_a)];
}

std::vector<int> CellDecomposition::down_set(int right_cell) const {
  std::vector<int> out;
  for (size_t c = 0; c < right_.size(); ++c) {
    if (right_below_[size_t(right_cell)][c])
      out.insert(out.end(), right_[c].begin(), right_[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition CellDecomposition::right_cell_shape(int cell) const {
  return rsk_shape(tbl_->perm(right_[size_t(cell)][0]));
}

CellDecomposition compute_cells(const KLTable& t) { return CellDecomposition(t); }

namespace {

std::vector<std::vector<int>> group_by_tableau(int n, bool by_p) {
  const PermTable& T = *perm_table(n);
  std::map<StandardTableau, std::vector<int>> groups;
  for (int r = 0; r < T.size(); ++r) {
    RskPair pq = rsk(T.perm(r));
    groups[by_p ? pq.p : pq.q].push_back(r);
  }
  std::vector<std::vector<int>> cells;
  for (auto& [tab, members] : groups) cells.push_back(std::move(members));
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return cells;
}

}  // namespace

RskSide rsk_right_cell_side() {
  static std::once_flag once;
  static RskSide side = RskSide::P;
  std::call_once(once, []() {
    // fix the convention against the mu-graph in S_3, where the right
    // cells are {e}, {s,st}, {t,ts}, {w_0}
    KLTable t(3);
    CellDecomposition cells(t);
    const auto by_p = group_by_tableau(3, true);
    const auto by_q = group_by_tableau(3, false);
    if (by_p == cells.right_cells())
      side = RskSide::P;
    else if (by_q == cells.right_cells())
      side = RskSide::Q;
    else
      throw ConventionMismatch("cells_via_rsk: neither tableau side matches the mu-graph");
  });
  return side;
}

RskCells cells_via_rsk(int n) {
  const bool right_is_p = (rsk_right_cell_side() == RskSide::P);
  RskCells out;
  out.right_cells = group_by_tableau(n, right_is_p);
  out.left_cells = group_by_tableau(n, !right_is_p);
  return out;
}

std::pair<Permutation, Permutation> singular_pair(const Partition& r) {
  const int k = r.sum();
  if (k < 2) throw std::invalid_argument("singular_pair: need k >= 2");

  // nu: block j contributes (r_j - 1, ..., 1, 0)
  std::vector<int> nu;
  for (int part : r.parts())
    for (int m = 1; m <= part; ++m) nu.push_back(part - m);
  // mu + rho: the decreasing sort of nu
  std::vector<int> mu_rho = nu;
  std::sort(mu_rho.rbegin(), mu_rho.rend());

  // repetition resolution: replace equal values by consecutive integers,
  // smaller positions first, so the result is a permutation of 0..k-1
  auto resolve = [k](const std::vector<int>& xi) {
    std::vector<int> eta(size_t(k), 0);
    int next = 0;
    for (int value = 0; next < k; ++value) {
      for (int pos = 0; pos < k; ++pos)
        if (xi[size_t(pos)] == value) eta[size_t(pos)] = next++;
    }
    return eta;
  };
  // solve eta = x(k-1,...,0): the value k-i sits at position x(i)
  auto solve = [k](const std::vector<int>& eta) {
    std::vector<int> pos_of(size_t(k), 0);
    for (int p = 0; p < k; ++p) pos_of[size_t(eta[size_t(p)])] = p + 1;
    std::vector<int> line(size_t(k), 0);
    for (int i = 1; i <= k; ++i) line[size_t(i - 1)] = pos_of[size_t(k - i)];
    return Permutation(std::move(line));
  };

  return {solve(resolve(nu)), solve(resolve(mu_rho))};
}

}  // namespace hecke
