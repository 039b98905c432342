#ifndef HECKELIB_PARABOLIC_HPP
#define HECKELIB_PARABOLIC_HPP

#include "heckelib/induced.hpp"

namespace hecke {

enum class ParabolicKind { sign, permutation };

/*
 * Sign and permutation parabolic modules on the basis of shortest coset
 * representatives of W'\W.  For a generator s the action on the basis
 * element at x is
 *   x s short, xs > x:   (xs) + v (x)
 *   x s short, xs < x:   (xs) + v^-1 (x)
 *   x s not short:       0 (sign)  /  (v+v^-1)(x) (permutation).
 */
struct ParabolicModule {
  ParabolicKind kind;
  ParabolicData para;
  std::vector<PolyMatrix> action;  // per generator, row convention

  int dim() const { return int(para.short_reps().size()); }
  const PolyMatrix& act(int i) const { return action[size_t(i - 1)]; }
};

ParabolicModule parabolic_module(ParabolicKind kind, const ParabolicData& p);

/*
 * Graded twisting action on the basis of Verma classes M(x . lambda),
 * x in (W/W')_short (left cosets, obtained by inverting the right
 * representatives).  Row x of matrices[s-1]:
 *   sx < x, sx short:  1 at sx and (v^-1 - v) at x
 *   sx > x, sx short:  1 at sx
 *   sx not short:      v^-1 at x.
 * These satisfy the standard-form relations T^2 = 1 + (v^-1 - v) T.
 */
struct TwistingAction {
  ParabolicData para;
  std::vector<Permutation> basis;  // left coset representatives
  std::vector<PolyMatrix> matrices;

  int dim() const { return int(basis.size()); }
  const PolyMatrix& act(int i) const { return matrices[size_t(i - 1)]; }
};

TwistingAction twisting_matrices(const ParabolicData& p);

// explicit intertwiner between a parabolic module and the matching
// induced module (R' = {e} for sign, R' = {w0'} for permutation)
std::optional<RFMatrix> parabolic_iso_check(const ParabolicModule& pm, const InducedModule& im);

}  // namespace hecke

#endif
