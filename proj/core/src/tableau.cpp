#include "heckelib/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int total = 0;
  std::vector<int> seen;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("StandardTableau: empty row");
    if (r && rows_[r].size() > rows_[r - 1].size())
      throw std::invalid_argument("StandardTableau: shape not a partition");
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c && rows_[r][c] <= rows_[r][c - 1])
        throw std::invalid_argument("StandardTableau: row not increasing");
      if (r && rows_[r][c] <= rows_[r - 1][c])
        throw std::invalid_argument("StandardTableau: column not increasing");
      seen.push_back(rows_[r][c]);
      ++total;
    }
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < total; ++i)
    if (seen[size_t(i)] != i + 1)
      throw std::invalid_argument("StandardTableau: entries not exactly 1..n");
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(int(r.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += int(r.size());
  return s;
}

std::string StandardTableau::to_string() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << "/";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ",";
      out << rows_[r][c];
    }
  }
  return out.str();
}

RskPair rsk(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int step = 1; step <= w.n(); ++step) {
    int x = w(step);
    size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(step);
        break;
      }
      std::swap(*it, x);  // bump
      ++row;
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Partition rsk_shape(const Permutation& w) { return rsk(w).p.shape(); }

std::vector<Permutation> knuth_neighbors(const Permutation& w) {
  std::vector<Permutation> out;
  const auto& line = w.one_line();
  for (size_t i = 0; i + 2 < line.size(); ++i) {
    const int a = line[i], b = line[i + 1], c = line[i + 2];
    // first kind: swap positions i, i+1 when the third entry separates them
    if ((a < c && c < b) || (b < c && c < a)) {
      auto l = line;
      std::swap(l[i], l[i + 1]);
      out.push_back(Permutation(std::move(l)));
    }
    // second kind: swap positions i+1, i+2 when the first entry separates them
    if ((b < a && a < c) || (c < a && a < b)) {
      auto l = line;
      std::swap(l[i + 1], l[i + 2]);
      out.push_back(Permutation(std::move(l)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_standard_tableaux(const Partition& shape) {
  const int n = shape.sum();
  const Partition conj = shape.conjugate();
  long long num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  long long den = 1;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.part(r); ++c) {
      const int hook = (shape.part(r) - c) + (conj.part(c) - r) - 1;
      den *= hook;
    }
  return int(num / den);
}

}  // namespace hecke
