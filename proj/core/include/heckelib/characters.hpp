#ifndef HECKELIB_CHARACTERS_HPP
#define HECKELIB_CHARACTERS_HPP

#include "heckelib/laurent.hpp"
#include "heckelib/partition.hpp"
#include "heckelib/permutation.hpp"

namespace hecke {

// irreducible S_n character value chi^lambda on the class of the given
// cycle type, via the Murnaghan-Nakayama rule
Int mn_character(const Partition& lambda, const Partition& cycle_type);

// size of the conjugacy class with the given cycle type
Int conjugacy_class_size(const Partition& cycle_type);

// cycle type of a permutation
Partition cycle_type(const Permutation& w);

// canonical minimal-length class representative: consecutive cycles
// (1 2 .. t1)(t1+1 .. t1+t2)...
Permutation canonical_class_rep(const Partition& cycle_type, int n);

Int factorial(int n);

}  // namespace hecke

#endif
