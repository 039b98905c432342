#ifndef HECKELIB_SYMGROUP_HPP
#define HECKELIB_SYMGROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <utility>

#include "heckelib/permutation.hpp"

namespace hecke {

/*
 * Table context for a fixed S_n: every element gets a rank (ordered by
 * length, then lex one-line), with precomputed lengths, products with
 * generators on both sides, inverses and descent bitmasks.  Shared
 * read-only between threads once built.
 */
class PermTable {
 public:
  explicit PermTable(int n);

  int n() const { return n_; }
  int size() const { return int(elements_.size()); }
  const Permutation& perm(int r) const { return elements_[size_t(r)]; }
  int rank(const Permutation& w) const;
  int length(int r) const { return lengths_[size_t(r)]; }
  int inverse(int r) const { return inverse_[size_t(r)]; }
  // rank of w * s_i, 1-based generator index
  int right(int r, int i) const { return right_[size_t(r)][size_t(i - 1)]; }
  // rank of s_i * w
  int left(int r, int i) const { return left_[size_t(r)][size_t(i - 1)]; }
  bool right_descent(int r, int i) const { return (rdesc_[size_t(r)] >> (i - 1)) & 1u; }
  bool left_descent(int r, int i) const { return (ldesc_[size_t(r)] >> (i - 1)) & 1u; }
  uint32_t right_descent_mask(int r) const { return rdesc_[size_t(r)]; }
  uint32_t left_descent_mask(int r) const { return ldesc_[size_t(r)]; }
  int identity_rank() const { return 0; }
  int longest_rank() const { return size() - 1; }
  // element ranks grouped by length
  const std::vector<std::vector<int>>& by_length() const { return by_length_; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<uint32_t> rdesc_, ldesc_;
  std::vector<std::vector<int>> by_length_;
};

using PermTablePtr = std::shared_ptr<const PermTable>;
PermTablePtr perm_table(int n);  // process-wide cache

/*
 * A composition (i_1,...,i_r) of n defining the Young subgroup
 * W' = S_{i_1} x ... x S_{i_r} with simple reflections S'.  Right
 * cosets W'\W are the canonical decomposition; left cosets appear
 * only through inversion.
 */
class ParabolicData {
 public:
  ParabolicData(int n, std::vector<int> composition);

  int n() const { return n_; }
  const std::vector<int>& composition() const { return composition_; }
  // 1-based generator indices of S', i.e. all i not at a block boundary
  const std::vector<int>& sub_generators() const { return sub_gens_; }
  bool is_sub_generator(int i) const { return sub_gen_mask_[size_t(i - 1)]; }
  // block containing value i (0-based), and the block start offsets
  int block_of(int i) const { return block_of_[size_t(i - 1)]; }
  int block_start(int b) const { return starts_[size_t(b)]; }
  int num_blocks() const { return int(composition_.size()); }

  bool in_subgroup(const Permutation& w) const;
  // longest element of W'
  Permutation w0_prime() const;
  // w'_0 w_0, the longest element of (W'\W)_short
  Permutation wbar() const;

  // shortest right coset representatives of W'\W, ordered (length, lex)
  const std::vector<Permutation>& short_reps() const { return short_; }
  // longest coset representatives, aligned with short_reps (same coset)
  const std::vector<Permutation>& long_reps() const { return long_; }
  // index of the coset W'y, or -1 if the element is not short
  int short_index(const Permutation& w) const;
  bool is_short(const Permutation& w) const { return short_index(w) >= 0; }

  // unique decomposition y = u w with u in W', w short, lengths adding
  std::pair<Permutation, Permutation> decompose(const Permutation& y) const;

  // factor a W'-element into its per-block permutations (each of S_{i_j})
  std::vector<Permutation> split(const Permutation& u) const;
  // rebuild an S_n element from per-block permutations
  Permutation embed(const std::vector<Permutation>& blocks) const;

 private:
  int n_;
  std::vector<int> composition_;
  std::vector<int> sub_gens_;
  std::vector<bool> sub_gen_mask_;
  std::vector<int> block_of_, starts_;
  std::vector<Permutation> short_, long_;
  std::map<std::vector<int>, int> short_rank_;
};

}  // namespace hecke

#endif
