#ifndef HECKELIB_LINALG_HPP
#define HECKELIB_LINALG_HPP

#include <utility>
#include <vector>

#include "heckelib/rational.hpp"

namespace hecke {

// Dense matrices, row-major.  Module action matrices follow the row
// convention: row i holds the coordinates of (basis element i) * h.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
using RFMatrix = std::vector<std::vector<RationalFunction>>;

// Sparse rows (column index, value), sorted by column.
using SparseVec = std::vector<std::pair<int, LaurentPoly>>;
using SparseMatrix = std::vector<SparseVec>;

PolyMatrix poly_identity(int d);
PolyMatrix poly_zero(int rows, int cols);
PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_scale(const LaurentPoly& c, const PolyMatrix& a);
PolyMatrix poly_transpose(const PolyMatrix& a);
bool poly_eq(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_eval_one(const PolyMatrix& a);  // entries collapsed at v=1 (still LaurentPoly)

SparseVec sparse_normalize(SparseVec v);  // sort by column, drop zeros, merge
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_axpy(const SparseVec& a, const LaurentPoly& c, const SparseVec& b);  // a + c*b
// row vector times sparse matrix
SparseVec sparse_apply(const SparseVec& row, const SparseMatrix& m);
SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sparse_add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sparse_scale(const LaurentPoly& c, const SparseMatrix& m);
SparseMatrix sparse_identity(int d);
bool sparse_eq(const SparseMatrix& a, const SparseMatrix& b);
PolyMatrix sparse_to_dense(const SparseMatrix& m, int cols);
SparseMatrix dense_to_sparse(const PolyMatrix& m);

RFMatrix rf_from_poly(const PolyMatrix& m);
RFMatrix rf_mul(const RFMatrix& a, const RFMatrix& b);
RFMatrix rf_transpose(const RFMatrix& a);
RFMatrix rf_identity(int d);
bool rf_eq(const RFMatrix& a, const RFMatrix& b);
bool rf_is_identity(const RFMatrix& a);

// exact inverse over the fraction field; throws SingularMatrix
RFMatrix rf_invert_matrix(const RFMatrix& m);
RFMatrix rf_invert_matrix(const PolyMatrix& m);
RationalFunction rf_det(const RFMatrix& m);

// basis of the right null space { x : m x = 0 }, entries reduced
std::vector<std::vector<RationalFunction>> rf_nullspace(const RFMatrix& m);

// clears denominators and the integer content; sign left untouched
std::vector<LaurentPoly> rf_vector_primitive(const std::vector<RationalFunction>& x);

}  // namespace hecke

#endif
