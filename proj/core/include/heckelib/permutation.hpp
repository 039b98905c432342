#ifndef HECKELIB_PERMUTATION_HPP
#define HECKELIB_PERMUTATION_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hecke {

/*
 * Element of S_n in one-line notation (1-based values).
 *
 * Products compose right-to-left: (a*b)(i) = a(b(i)), so in a word
 * s_{i1} s_{i2} ... s_{ik} the rightmost letter acts first.  Right
 * multiplication by s_i swaps the entries at positions i, i+1; left
 * multiplication swaps the values i, i+1.  Generators are 1-based
 * (s_1 .. s_{n-1}).
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation simple(int n, int i);
  static Permutation longest(int n);  // w_0
  static Permutation from_word(int n, const std::vector<int>& word);

  int n() const { return int(line_.size()); }
  int operator()(int i) const { return line_[size_t(i - 1)]; }
  const std::vector<int>& one_line() const { return line_; }

  int length() const;  // inversion count
  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;

  Permutation right_mult_s(int i) const;  // w * s_i
  Permutation left_mult_s(int i) const;   // s_i * w

  bool right_descent(int i) const { return line_[size_t(i - 1)] > line_[size_t(i)]; }
  bool left_descent(int i) const;
  std::set<int> right_descents() const;
  std::set<int> left_descents() const;

  bool is_identity() const;
  // some reduced word (positions of a bubble sort)
  std::vector<int> reduced_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.line_ == b.line_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.line_ < b.line_;
  }

  std::string to_string() const;

 private:
  std::vector<int> line_;
};

// order used everywhere for deterministic bases: length first, then
// lexicographic one-line notation
bool length_lex_less(const Permutation& a, const Permutation& b);

// Bruhat order via the dot criterion: x <= y iff for all i,j the number
// of k <= i with x(k) >= j is at most the same count for y.
bool bruhat_leq(const Permutation& x, const Permutation& y);

// all permutations of S_n, ordered by (length, lex one-line)
std::vector<Permutation> all_permutations(int n);

}  // namespace hecke

#endif
