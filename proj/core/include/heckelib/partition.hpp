#ifndef HECKELIB_PARTITION_HPP
#define HECKELIB_PARTITION_HPP

#include <string>
#include <vector>

namespace hecke {

// weakly decreasing positive parts
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;
  int length() const { return int(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[size_t(i)] : 0; }

  Partition conjugate() const;
  long sum_of_squares() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// mu trianglelefteq nu in dominance order (prefix sums); requires equal sums
bool dominance_leq(const Partition& mu, const Partition& nu);
bool dominance_lt(const Partition& mu, const Partition& nu);

std::vector<Partition> partitions_of(int n);

}  // namespace hecke

#endif
