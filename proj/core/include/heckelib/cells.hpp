#ifndef HECKELIB_CELLS_HPP
#define HECKELIB_CELLS_HPP

#include "heckelib/kl.hpp"
#include "heckelib/tableau.hpp"

namespace hecke {

struct ConventionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Cell decomposition of S_n from the mu-graph.  The one-step relation
 * is x -> y iff mu(x,y) != 0 and some s lies in D(x) but not D(y)
 * (left descents for the left preorder, right for the right one); its
 * transitive closure is >=, so products in the KL basis only move up:
 * e is minimal and w_0 maximal.  Cells are the strongly connected
 * components.
 */
class CellDecomposition {
 public:
  explicit CellDecomposition(const KLTable& t);

  int n() const { return n_; }
  const PermTable& table() const { return *tbl_; }
  PermTablePtr table_ptr() const { return tbl_; }

  // cells as sorted lists of element ranks; cell ids are deterministic
  // (ordered by their minimal element in (length, lex) order)
  const std::vector<std::vector<int>>& left_cells() const { return left_; }
  const std::vector<std::vector<int>>& right_cells() const { return right_; }
  const std::vector<std::vector<int>>& two_sided_cells() const { return two_sided_; }

  int left_cell_of(int r) const { return left_of_[size_t(r)]; }
  int right_cell_of(int r) const { return right_of_[size_t(r)]; }
  int two_sided_cell_of(int r) const { return two_of_[size_t(r)]; }

  // x <=_R y in the right preorder
  bool right_leq(int x, int y) const;
  bool right_leq(const Permutation& x, const Permutation& y) const;
  // same for cells: does every element of cell a lie <=_R cell b
  bool right_cell_leq(int cell_a, int cell_b) const;

  // down-set of a right cell: all w <=_R the cell
  std::vector<int> down_set(int right_cell) const;

  // RSK shape of (any element of) a cell
  Partition right_cell_shape(int cell) const;

 private:
  int n_;
  PermTablePtr tbl_;
  std::vector<std::vector<int>> left_, right_, two_sided_;
  std::vector<int> left_of_, right_of_, two_of_;
  // reachability over right cells: above_[a] lists cells <=_R a
  std::vector<std::vector<bool>> right_below_;
};

CellDecomposition compute_cells(const KLTable& t);

// which tableau labels right cells under the artifact's conventions,
// fixed empirically against the mu-graph at n = 3 and cached
enum class RskSide { P, Q };
RskSide rsk_right_cell_side();

// partitions of S_n by the RSK criterion alone, grouped like
// CellDecomposition (left_cells / right_cells); throws
// ConventionMismatch if neither tableau side matches the mu-graph
struct RskCells {
  std::vector<std::vector<int>> left_cells, right_cells;
};
RskCells cells_via_rsk(int n);

// the section 9.3 weight-to-permutation construction for a partition r
// of k: x_nu and x_mu with nu'+rho = x_nu(k-1,...,0), mu'+rho = x_mu(k-1,...,0)
std::pair<Permutation, Permutation> singular_pair(const Partition& r);

}  // namespace hecke

#endif
