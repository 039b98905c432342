#include "heckelib/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "heckelib/laurent.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(size_t(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[size_t(j)];
  return Partition(std::move(c));
}

long Partition::sum_of_squares() const {
  long s = 0;
  for (int p : parts_) s += long(p) * p;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.sum() != nu.sum()) throw SizeMismatch("dominance_leq: partitions of different n");
  int pm = 0, pn = 0;
  const int len = std::max(mu.length(), nu.length());
  for (int i = 0; i < len; ++i) {
    pm += mu.part(i);
    pn += nu.part(i);
    if (pm > pn) return false;
  }
  return true;
}

bool dominance_lt(const Partition& mu, const Partition& nu) {
  return mu != nu && dominance_leq(mu, nu);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // lexicographically decreasing from (n) down to (1^n)
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace hecke
