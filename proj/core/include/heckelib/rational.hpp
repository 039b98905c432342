#ifndef HECKELIB_RATIONAL_HPP
#define HECKELIB_RATIONAL_HPP

#include "heckelib/laurent.hpp"

namespace hecke {

/*
 * Quotient num/den of integer Laurent polynomials, always reduced.
 *
 * Normal form: den is a genuine polynomial with min_deg 0, primitive
 * (integer content 1) and positive leading coefficient; gcd(num, den)
 * over Q[v] is a unit.  Powers of v are pushed into num.
 */
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(LaurentPoly p) : num_(std::move(p)) {}
  RationalFunction(long c) : num_(c) {}
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_ = LaurentPoly();
  LaurentPoly den_ = LaurentPoly(1);
};

// gcd over Z[v] of the polynomial parts, primitive with positive leading
// coefficient; ignores (and strips) powers of v.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hecke

#endif
