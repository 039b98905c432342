#include "heckelib/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "heckelib/laurent.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  std::vector<bool> seen(line_.size(), false);
  for (int x : line_) {
    if (x < 1 || x > int(line_.size()) || seen[size_t(x - 1)])
      throw std::invalid_argument("Permutation: not a bijection on 1..n");
    seen[size_t(x - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> l(static_cast<size_t>(n), 0);
  std::iota(l.begin(), l.end(), 1);
  Permutation p;
  p.line_ = std::move(l);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  Permutation p = identity(n);
  std::swap(p.line_[size_t(i - 1)], p.line_[size_t(i)]);
  return p;
}

Permutation Permutation::longest(int n) {
  std::vector<int> l(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) l[size_t(i)] = n - i;
  Permutation p;
  p.line_ = std::move(l);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  // rightmost letter acts first, so build by left-multiplying in reverse
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.left_mult_s(*it);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < line_.size(); ++i)
    for (size_t j = i + 1; j < line_.size(); ++j)
      if (line_[i] > line_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.line_.resize(line_.size());
  for (size_t i = 0; i < line_.size(); ++i) p.line_[size_t(line_[i] - 1)] = int(i) + 1;
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw SizeMismatch("Permutation: mixed group sizes");
  Permutation p;
  p.line_.resize(line_.size());
  for (size_t i = 0; i < line_.size(); ++i) p.line_[i] = line_[size_t(o.line_[i] - 1)];
  return p;
}

Permutation Permutation::right_mult_s(int i) const {
  Permutation p = *this;
  std::swap(p.line_[size_t(i - 1)], p.line_[size_t(i)]);
  return p;
}

Permutation Permutation::left_mult_s(int i) const {
  Permutation p = *this;
  for (auto& x : p.line_) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return p;
}

bool Permutation::left_descent(int i) const {
  // s_i w < w iff i appears after i+1 in the one-line word
  int pos_i = 0, pos_i1 = 0;
  for (size_t k = 0; k < line_.size(); ++k) {
    if (line_[k] == i) pos_i = int(k);
    if (line_[k] == i + 1) pos_i1 = int(k);
  }
  return pos_i > pos_i1;
}

std::set<int> Permutation::right_descents() const {
  std::set<int> d;
  for (int i = 1; i < n(); ++i)
    if (right_descent(i)) d.insert(i);
  return d;
}

std::set<int> Permutation::left_descents() const {
  std::set<int> d;
  for (int i = 1; i < n(); ++i)
    if (left_descent(i)) d.insert(i);
  return d;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < line_.size(); ++i)
    if (line_[i] != int(i) + 1) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // bubble sort to the identity; the recorded swaps, reversed, form a
  // reduced word for w
  std::vector<int> line = line_;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.push_back(int(i) + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < line_.size(); ++i) {
    if (i) out << ",";
    out << line_[i];
  }
  out << "]";
  return out.str();
}

bool length_lex_less(const Permutation& a, const Permutation& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.one_line() < b.one_line();
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw SizeMismatch("bruhat_leq: mixed group sizes");
  const int n = x.n();
  // count[i][j] = #{k <= i : w(k) >= j}, compared entrywise
  std::vector<int> cx(size_t(n) + 2, 0), cy(size_t(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = n; j >= 1; --j) {
      cx[size_t(j)] += (x(i) >= j) ? 1 : 0;
      cy[size_t(j)] += (y(i) >= j) ? 1 : 0;
      if (cx[size_t(j)] > cy[size_t(j)]) return false;
    }
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<size_t>(n), 0);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  std::sort(all.begin(), all.end(), length_lex_less);
  return all;
}

}  // namespace hecke
