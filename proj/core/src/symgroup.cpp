#include "heckelib/symgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "heckelib/laurent.hpp"

namespace hecke {

PermTable::PermTable(int n) : n_(n) {
  if (n < 1 || n > 9) throw std::invalid_argument("PermTable: supported range is 1 <= n <= 9");
  elements_ = all_permutations(n);
  const int sz = int(elements_.size());
  std::map<std::vector<int>, int> rank;
  for (int r = 0; r < sz; ++r) rank[elements_[size_t(r)].one_line()] = r;

  lengths_.resize(size_t(sz));
  inverse_.resize(size_t(sz));
  right_.assign(size_t(sz), std::vector<int>(size_t(n - 1)));
  left_.assign(size_t(sz), std::vector<int>(size_t(n - 1)));
  rdesc_.assign(size_t(sz), 0);
  ldesc_.assign(size_t(sz), 0);
  int maxlen = n * (n - 1) / 2;
  by_length_.assign(size_t(maxlen + 1), {});
  for (int r = 0; r < sz; ++r) {
    const Permutation& w = elements_[size_t(r)];
    lengths_[size_t(r)] = w.length();
    by_length_[size_t(lengths_[size_t(r)])].push_back(r);
    inverse_[size_t(r)] = rank.at(w.inverse().one_line());
    for (int i = 1; i < n; ++i) {
      right_[size_t(r)][size_t(i - 1)] = rank.at(w.right_mult_s(i).one_line());
      left_[size_t(r)][size_t(i - 1)] = rank.at(w.left_mult_s(i).one_line());
      if (w.right_descent(i)) rdesc_[size_t(r)] |= (1u << (i - 1));
      if (w.left_descent(i)) ldesc_[size_t(r)] |= (1u << (i - 1));
    }
  }
}

int PermTable::rank(const Permutation& w) const {
  // binary search in (length, lex) order
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w, length_lex_less);
  if (it == elements_.end() || !(*it == w)) throw std::invalid_argument("PermTable: foreign element");
  return int(it - elements_.begin());
}

PermTablePtr perm_table(int n) {
  static std::mutex mu;
  static std::map<int, PermTablePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ptr = std::make_shared<const PermTable>(n);
  cache[n] = ptr;
  return ptr;
}

ParabolicData::ParabolicData(int n, std::vector<int> composition)
    : n_(n), composition_(std::move(composition)) {
  int sum = 0;
  for (int c : composition_) {
    if (c < 1) throw std::invalid_argument("ParabolicData: composition entries must be >= 1");
    sum += c;
  }
  if (sum != n) throw std::invalid_argument("ParabolicData: composition must sum to n");

  sub_gen_mask_.assign(size_t(n > 0 ? n - 1 : 0), false);
  block_of_.resize(size_t(n));
  int pos = 0;
  for (size_t b = 0; b < composition_.size(); ++b) {
    starts_.push_back(pos);
    for (int i = 0; i < composition_[b]; ++i) block_of_[size_t(pos + i)] = int(b);
    for (int i = 1; i < composition_[b]; ++i) {
      sub_gens_.push_back(pos + i);
      sub_gen_mask_[size_t(pos + i - 1)] = true;
    }
    pos += composition_[b];
  }

  // short representatives: no left descent inside S'
  for (const Permutation& w : all_permutations(n)) {
    bool shortrep = true;
    for (int g : sub_gens_)
      if (w.left_descent(g)) {
        shortrep = false;
        break;
      }
    if (shortrep) short_.push_back(w);
  }
  for (size_t i = 0; i < short_.size(); ++i) short_rank_[short_[i].one_line()] = int(i);
  const Permutation w0p = w0_prime();
  for (const Permutation& w : short_) long_.push_back(w0p * w);
}

bool ParabolicData::in_subgroup(const Permutation& w) const {
  for (int i = 1; i <= n_; ++i)
    if (block_of_[size_t(w(i) - 1)] != block_of_[size_t(i - 1)]) return false;
  return true;
}

Permutation ParabolicData::w0_prime() const {
  std::vector<int> line(size_t(n_), 0);
  int pos = 0;
  for (int c : composition_) {
    for (int i = 0; i < c; ++i) line[size_t(pos + i)] = pos + c - i;
    pos += c;
  }
  return Permutation(std::move(line));
}

Permutation ParabolicData::wbar() const { return w0_prime() * Permutation::longest(n_); }

int ParabolicData::short_index(const Permutation& w) const {
  auto it = short_rank_.find(w.one_line());
  return it == short_rank_.end() ? -1 : it->second;
}

std::pair<Permutation, Permutation> ParabolicData::decompose(const Permutation& y) const {
  Permutation w = y;
  Permutation u = Permutation::identity(n_);
  // strip left descents lying in S'; the product of the strips is u
  bool moved = true;
  while (moved) {
    moved = false;
    for (int g : sub_gens_) {
      if (w.left_descent(g)) {
        w = w.left_mult_s(g);
        u = u.right_mult_s(g);
        moved = true;
      }
    }
  }
  return {u, w};
}

std::vector<Permutation> ParabolicData::split(const Permutation& u) const {
  if (!in_subgroup(u)) throw std::invalid_argument("ParabolicData::split: not in W'");
  std::vector<Permutation> blocks;
  for (size_t b = 0; b < composition_.size(); ++b) {
    const int start = starts_[b], len = composition_[b];
    std::vector<int> line(size_t(len), 0);
    for (int i = 0; i < len; ++i) line[size_t(i)] = u(start + i + 1) - start;
    blocks.push_back(Permutation(std::move(line)));
  }
  return blocks;
}

Permutation ParabolicData::embed(const std::vector<Permutation>& blocks) const {
  std::vector<int> line(size_t(n_), 0);
  for (size_t b = 0; b < composition_.size(); ++b) {
    const int start = starts_[b];
    for (int i = 1; i <= blocks[b].n(); ++i) line[size_t(start + i - 1)] = blocks[b](i) + start;
  }
  return Permutation(std::move(line));
}

}  // namespace hecke
