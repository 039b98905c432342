#ifndef HECKELIB_KL_HPP
#define HECKELIB_KL_HPP

#include <optional>
#include <string>

#include "heckelib/hecke.hpp"
#include "heckelib/symgroup.hpp"

namespace hecke {

struct CacheCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * The full triangular table of Kazhdan-Lusztig polynomials h_{y,x} for
 * S_n in Soergel's normalization: KLbasis_x = sum_y h_{y,x} H_y with
 * h_{x,x} = 1 and h_{y,x} in vZ[v] for y < x.  mu(y,x) is the
 * coefficient of v, stored once per unordered pair.
 *
 * Built by length induction on formula (1): for x s > x,
 *   KL_x KL_s = KL_{xs} + sum_{y < x, ys < y} mu(y,x) KL_y.
 * Frozen after construction; concurrent reads are safe.
 */
class KLTable {
 public:
  explicit KLTable(int n);

  int n() const { return n_; }
  const PermTable& table() const { return *tbl_; }
  PermTablePtr table_ptr() const { return tbl_; }

  // h_{y,x} by rank; zero unless y <= x in Bruhat order
  const LaurentPoly& h(int y, int x) const;
  LaurentPoly h(const Permutation& y, const Permutation& x) const;
  // symmetric mu; zero for incomparable or equal pairs
  long mu(int x, int y) const;
  // pairs (y, mu(y,x)) with y < x and mu nonzero
  const std::vector<std::pair<int, long>>& mu_list(int x) const {
    return mu_[size_t(x)];
  }
  // nonzero column of x: pairs (y, h_{y,x}) sorted by rank, ending at (x, 1)
  const std::vector<std::pair<int, LaurentPoly>>& column(int x) const {
    return h_[size_t(x)];
  }

  // KL basis element as a HeckeElt
  HeckeElt kl_basis_elt(int x) const;

  // JSON-lines cache; deterministic record order
  void save(const std::string& path) const;
  // throws CacheCorrupt on malformed input or failed revalidation
  static KLTable load(const std::string& path);

 private:
  KLTable() = default;
  void build();
  void revalidate_sample() const;

  int n_ = 0;
  PermTablePtr tbl_;
  std::vector<std::vector<std::pair<int, LaurentPoly>>> h_;
  std::vector<std::vector<std::pair<int, long>>> mu_;
};

// table construction with optional disk cache: loads `cache_path` if it
// exists, otherwise computes and (if a path is given) writes it
KLTable kl_table(int n, const std::optional<std::string>& cache_path = std::nullopt);

// base changes between the standard and KL bases; mutually inverse
std::map<Permutation, LaurentPoly> to_kl(const HeckeElt& a, const KLTable& t);
HeckeElt from_kl(const std::map<Permutation, LaurentPoly>& coeffs, const KLTable& t);

}  // namespace hecke

#endif
