#ifndef HECKELIB_HECKE_HPP
#define HECKELIB_HECKE_HPP

#include <map>

#include "heckelib/laurent.hpp"
#include "heckelib/permutation.hpp"

namespace hecke {

/*
 * Element of the Hecke algebra H(S_n) in standard-basis coordinates:
 * a finitely supported map w -> coefficient.  Zero coefficients are
 * never stored.  Multiplication follows
 *   H_x H_y = H_xy              when lengths add,
 *   H_s^2  = H_e + (v^-1 - v) H_s.
 */
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}
  HeckeElt(int n, const Permutation& w) : n_(n) { support_[w] = LaurentPoly(1); }

  static HeckeElt unit(int n) { return HeckeElt(n, Permutation::identity(n)); }
  static HeckeElt standard(const Permutation& w) { return HeckeElt(w.n(), w); }
  // H_s + v H_e
  static HeckeElt kl_generator(int n, int i);

  int n() const { return n_; }
  const std::map<Permutation, LaurentPoly>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  LaurentPoly coeff(const Permutation& w) const;
  void add_term(const Permutation& w, const LaurentPoly& c);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.support_ == b.support_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, LaurentPoly> support_;
};

HeckeElt h_add(const HeckeElt& a, const HeckeElt& b);
HeckeElt h_scale(const LaurentPoly& c, const HeckeElt& a);
HeckeElt h_mul_gen(const HeckeElt& a, int i);     // a * H_{s_i}
HeckeElt h_mul_kl_gen(const HeckeElt& a, int i);  // a * (H_{s_i} + v)
HeckeElt h_mul(const HeckeElt& a, const HeckeElt& b);

// the bar involution: v -> v^-1, H_w -> (H_{w^-1})^-1
HeckeElt h_bar(const HeckeElt& a);
// the anti-automorphism sigma: H_w -> H_{w^-1}, coefficients untouched
HeckeElt h_sigma(const HeckeElt& a);

}  // namespace hecke

#endif
