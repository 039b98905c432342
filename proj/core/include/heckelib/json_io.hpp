#ifndef HECKELIB_JSON_IO_HPP
#define HECKELIB_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "heckelib/linalg.hpp"
#include "heckelib/partition.hpp"
#include "heckelib/permutation.hpp"

namespace hecke::json_io {

using nlohmann::json;

/*
 * Wire formats.  LaurentPoly: {"min_deg": d, "coeffs": [c, ...]} where a
 * coefficient is a JSON integer when it fits in 64 bits and a decimal
 * string otherwise; bit-exact round trips either way.  Permutations are
 * one-line arrays, partitions decreasing arrays, words arrays of 1-based
 * generator indices.
 */
json laurent(const LaurentPoly& p);
LaurentPoly laurent_from(const json& j);

json rational(const RationalFunction& r);
RationalFunction rational_from(const json& j);

json permutation(const Permutation& w);
Permutation permutation_from(const json& j, int n);

json partition(const Partition& p);
Partition partition_from(const json& j);

json poly_matrix(const PolyMatrix& m);
PolyMatrix poly_matrix_from(const json& j);

json rf_matrix(const RFMatrix& m);

json sparse_as_dense(const SparseMatrix& m, int cols);

}  // namespace hecke::json_io

#endif
