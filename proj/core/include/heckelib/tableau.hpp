#ifndef HECKELIB_TABLEAU_HPP
#define HECKELIB_TABLEAU_HPP

#include "heckelib/partition.hpp"
#include "heckelib/permutation.hpp"

namespace hecke {

// rows strictly increasing left to right, columns strictly increasing
// top to bottom, entries exactly 1..n
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const StandardTableau& a, const StandardTableau& b) {
    return !(a == b);
  }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ < b.rows_;
  }

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

struct RskPair {
  StandardTableau p;  // insertion tableau
  StandardTableau q;  // recording tableau
};

// Robinson-Schensted by row insertion of the one-line word
RskPair rsk(const Permutation& w);
Partition rsk_shape(const Permutation& w);

// permutations reachable by one elementary Knuth move on the one-line word:
//   ... x z y ... <-> ... z x y ...   and   ... y x z ... <-> ... y z x ...
// with x < y < z
std::vector<Permutation> knuth_neighbors(const Permutation& w);

int count_standard_tableaux(const Partition& shape);  // hook length formula

}  // namespace hecke

#endif
