#include "heckelib/characters.hpp"

#include <algorithm>
#include <map>

namespace hecke {

namespace {

/*
 * Murnaghan-Nakayama on beta-numbers.  For a partition with l rows the
 * beta set is {lambda_i + l - 1 - i}; removing a border strip of size k
 * is replacing some beta by beta - k (which must stay distinct), with
 * sign (-1)^{#betas strictly between the old and new value}.
 */
Int mn_beta(std::vector<int> betas, const std::vector<int>& cycles, size_t next,
            std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
  if (next == cycles.size()) return 1;  // all cells removed
  auto key = std::make_pair(betas, next);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int k = cycles[next];
  Int total = 0;
  for (size_t i = 0; i < betas.size(); ++i) {
    const int b = betas[i];
    if (b < k) continue;
    const int nb = b - k;
    bool clash = false;
    int height = 0;
    for (size_t j = 0; j < betas.size(); ++j) {
      if (j == i) continue;
      if (betas[j] == nb) clash = true;
      if (betas[j] > nb && betas[j] < b) ++height;
    }
    if (clash) continue;
    std::vector<int> nbetas = betas;
    nbetas[i] = nb;
    std::sort(nbetas.begin(), nbetas.end());
    const Int term = mn_beta(std::move(nbetas), cycles, next + 1, memo);
    total += (height % 2 == 0) ? term : -term;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.sum() != cycle_type.sum())
    throw SizeMismatch("mn_character: partitions of different n");
  if (lambda.sum() == 0) return 1;
  const int l = lambda.length();
  std::vector<int> betas(size_t(l), 0);
  for (int i = 0; i < l; ++i) betas[size_t(i)] = lambda.part(i) + (l - 1 - i);
  std::sort(betas.begin(), betas.end());
  std::vector<int> cycles = cycle_type.parts();  // largest first
  std::map<std::pair<std::vector<int>, size_t>, Int> memo;
  return mn_beta(std::move(betas), cycles, 0, memo);
}

Int conjugacy_class_size(const Partition& cycle_type) {
  const int n = cycle_type.sum();
  Int z = 1;
  std::map<int, int> freq;
  for (int p : cycle_type.parts()) ++freq[p];
  for (auto [len, count] : freq) {
    for (int i = 1; i <= count; ++i) z *= Int(len) * i;
  }
  return factorial(n) / z;
}

Partition cycle_type(const Permutation& w) {
  std::vector<bool> seen(size_t(w.n()), false);
  std::vector<int> cycles;
  for (int i = 1; i <= w.n(); ++i) {
    if (seen[size_t(i - 1)]) continue;
    int len = 0, j = i;
    while (!seen[size_t(j - 1)]) {
      seen[size_t(j - 1)] = true;
      j = w(j);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return Partition(std::move(cycles));
}

Permutation canonical_class_rep(const Partition& ct, int n) {
  if (ct.sum() != n) throw SizeMismatch("canonical_class_rep: wrong n");
  std::vector<int> line(size_t(n), 0);
  int base = 0;
  for (int len : ct.parts()) {
    for (int i = 0; i < len; ++i) line[size_t(base + i)] = base + 1 + (i + 1) % len;
    base += len;
  }
  return Permutation(std::move(line));
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace hecke
