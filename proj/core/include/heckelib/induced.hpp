#ifndef HECKELIB_INDUCED_HPP
#define HECKELIB_INDUCED_HPP

#include "heckelib/cellmod.hpp"

namespace hecke {

struct NotACell : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TriangularityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// process-wide caches; tables are frozen after construction
std::shared_ptr<const KLTable> kl_table_shared(int n);
std::shared_ptr<const CellDecomposition> cells_shared(int n);

/*
 * Cell module of a right cell R' of the Young subgroup W' = prod S_{i_j}:
 * the outer product of the factor cell modules.  Basis elements are the
 * embedded permutations of S_n carrying a tuple of factor indices,
 * ordered by (length, lex one-line).
 */
struct ProductCellModule {
  ParabolicData para;
  std::vector<CellModule> factors;
  std::vector<Permutation> basis;           // embedded in S_n
  std::vector<std::vector<int>> tuples;     // factor cell indices per basis elt

  int dim() const { return int(basis.size()); }
  // action of a generator of S' (global 1-based index)
  PolyMatrix act_global(int g) const;
  // Kronecker product of the normalized factor forms
  PolyMatrix form() const;
};

// from a member: takes the product of the factor cells through the member
ProductCellModule product_cell_module(const ParabolicData& p, const Permutation& member);
// explicit cell: throws NotACell unless the set is a product of factor cells
ProductCellModule product_cell_module(const ParabolicData& p,
                                      const std::vector<Permutation>& r_prime);

struct IndexPair {
  int x;  // index into the product cell basis
  int w;  // index into the short coset representatives
};

/*
 * Induced cell module S(R') (x)_{H'} H with the KL-standard basis
 * Delta_{x,w}, ordered by (l(xw), lex one-line of xw).  Action matrices
 * are sparse rows in the row convention.
 */
struct InducedModule {
  ParabolicData para;
  ProductCellModule cell;
  std::vector<IndexPair> basis;
  std::vector<Permutation> products;        // xw per basis index
  std::vector<SparseMatrix> action;         // per generator of S_n

  int n() const { return para.n(); }
  int dim() const { return int(basis.size()); }
  int index_of(int x, int w) const;         // basis lookup
  const SparseMatrix& act(int i) const { return action[size_t(i - 1)]; }
};

InducedModule induce(const ParabolicData& p, const Permutation& r_prime_member);
InducedModule induce(const ParabolicData& p, const std::vector<Permutation>& r_prime);

// the set J(R') = { y >=_R R', y != xw for all (x,w) }, reported only
std::vector<Permutation> j_set(const InducedModule& m);

// bar involution: semilinear, bar(KL_x (x) H_w) = KL_x (x) bar(H_w) with
// standard terms pushed through the unique coset decomposition
class InducedBar {
 public:
  explicit InducedBar(const InducedModule& m);
  SparseVec operator()(const SparseVec& elt) const;
  SparseVec basis_bar(int idx) const { return bar_basis_[size_t(idx)]; }

 private:
  const InducedModule& m_;
  std::vector<SparseVec> bar_basis_;
};

/*
 * KL elements: columns[j] holds the self-dual element box_j in Delta
 * coordinates (unitriangular, off-diagonal coefficients in vZ[v]), and
 * action[s-1] the matrix of the right KL-generator action expressed in
 * the box basis (rows, like everywhere).  Throws TriangularityViolation
 * if the bar defect of some Delta fails to live strictly below in the
 * (length, lex) order.
 */
struct InducedKL {
  std::vector<SparseVec> columns;
  std::vector<SparseMatrix> action;
};

InducedKL kl_elements(const InducedModule& m);

// Gram matrix of the induced form in the Delta basis: block delta_{w,w'}
// times the product cell form
PolyMatrix ind_form(const InducedModule& m);

struct FourBases {
  // the KL-standard basis is the reference (identity matrix);
  // base-change matrices hold the named basis in Delta coordinates,
  // one basis vector per column
  PolyMatrix kl;        // box elements; unitriangular
  RFMatrix dual_kl_s;   // dual of the Delta basis under the form
  RFMatrix dual_kl;     // dual of the box basis under the form
};

FourBases four_bases(const InducedModule& m);

}  // namespace hecke

#endif
