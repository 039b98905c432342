#ifndef HECKELIB_CELLMOD_HPP
#define HECKELIB_CELLMOD_HPP

#include <optional>

#include "heckelib/cells.hpp"
#include "heckelib/linalg.hpp"

namespace hecke {

struct NonUniqueForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Right cell module S(R): the span of the KL basis elements of a right
 * cell, with the action of formula (1) truncated to the cell.  Basis
 * ordered by (length, lex one-line); action matrices follow the row
 * convention, so the relations read as plain matrix identities and an
 * invariant form G satisfies M G = G M^T.
 */
struct CellModule {
  int n = 0;
  std::vector<Permutation> cell;
  std::vector<PolyMatrix> action;  // index i-1 for generator s_i

  int dim() const { return int(cell.size()); }
  const PolyMatrix& act(int i) const { return action[size_t(i - 1)]; }
};

// R is identified by any member element
CellModule cell_module(const Permutation& member, const KLTable& t,
                       const CellDecomposition& c);

// matrices of an element given by a word in the generators (row convention)
PolyMatrix word_action(const CellModule& m, const std::vector<int>& word);

// quadratic, commuting and braid relations for a set of action matrices
bool satisfies_kl_relations(const std::vector<PolyMatrix>& action);

// the H_s-form relations T^2 = 1 + (v^-1 - v)T plus braid/commuting
bool satisfies_standard_relations(const std::vector<PolyMatrix>& action);

/*
 * The up-to-scalar unique symmetric H-invariant bilinear form, solved
 * from { G symmetric, M_s G = G M_s^T for all s } over the fraction
 * field, cleared to a primitive integer Laurent matrix.  Normalization:
 * the diagonal entry at the minimal-length basis element has centered
 * support (min_deg + max_deg in {0,1}) and positive leading
 * coefficient.  Throws NonUniqueForm if the solution space is not a
 * line.
 */
PolyMatrix invariant_form(const CellModule& m);

// invariant form for any row-convention action matrices on a basis of
// the given dimension (shared by cell and induced modules)
PolyMatrix solve_invariant_form(const std::vector<PolyMatrix>& action);

// checks M G = G M^T for every generator
bool form_is_invariant(const std::vector<PolyMatrix>& action, const PolyMatrix& g);

// intertwiner phi with A1 phi = phi A2 for all generators, invertible
// over the fraction field; nullopt when no isomorphism exists
std::optional<RFMatrix> cell_iso(const CellModule& m1, const CellModule& m2);

// generic intertwiner solver for two lists of row-convention matrices
std::optional<RFMatrix> module_intertwiner(const std::vector<PolyMatrix>& a1,
                                           const std::vector<PolyMatrix>& a2);

}  // namespace hecke

#endif
