#ifndef HECKELIB_LAURENT_HPP
#define HECKELIB_LAURENT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Int = mpz_class;

struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Element of Z[v,v^-1] with exact integer coefficients.
 *
 * Canonical form: coeffs_ is empty for zero (then min_deg_ == 0);
 * otherwise coeffs_.front() and coeffs_.back() are nonzero and
 * coeffs_[i] is the coefficient of v^(min_deg_ + i).  Equality is
 * structural.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { *this = LaurentPoly(Int(c)); }
  LaurentPoly(int c) { *this = LaurentPoly(Int(c)); }
  explicit LaurentPoly(Int c);
  LaurentPoly(long min_deg, std::vector<Int> coeffs);

  static LaurentPoly monomial(Int coeff, long deg);
  // v^deg
  static LaurentPoly v(long deg = 1) { return monomial(1, deg); }
  // v + v^-1
  static LaurentPoly v_plus_vinv();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  long min_deg() const { return min_deg_; }
  long max_deg() const { return min_deg_ + long(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // coefficient of v^deg (zero outside the support)
  Int coeff(long deg) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // total order, used for deterministic containers
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  // the bar involution v -> v^-1
  LaurentPoly bar() const;
  bool is_bar_symmetric() const { return *this == bar(); }

  // specialization v = 1 (sum of coefficients)
  Int eval_one() const;

  // multiply by v^k
  LaurentPoly shifted(long k) const;

  // true iff the polynomial lies in vZ[v] (zero allowed)
  bool in_v_zv() const { return is_zero() || min_deg_ >= 1; }
  // true iff the polynomial lies in Z[v] (no negative exponents)
  bool is_polynomial() const { return is_zero() || min_deg_ >= 0; }

  // gcd of all coefficients, non-negative; 0 for the zero polynomial
  Int content() const;

  std::string to_string() const;

 private:
  void normalize();

  long min_deg_ = 0;
  std::vector<Int> coeffs_;
};

}  // namespace hecke

#endif
