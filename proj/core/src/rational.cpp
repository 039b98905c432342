#include "heckelib/rational.hpp"

#include <sstream>

namespace hecke {

namespace {

// divides every coefficient by g (must divide exactly)
LaurentPoly divide_content(const LaurentPoly& p, const Int& g) {
  if (p.is_zero() || g == 1) return p;
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) {
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    x = q;
  }
  return LaurentPoly(p.min_deg(), std::move(c));
}

// primitive part as an honest polynomial (min_deg 0), positive leading coeff
LaurentPoly primitive_poly(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = divide_content(p, p.content()).shifted(-p.min_deg());
  if (q.coeffs().back() < 0) q = -q;
  return q;
}

// pseudo-remainder based gcd on primitive polynomials with min_deg 0
LaurentPoly poly_gcd_primitive(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    // pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r
    long da = a.max_deg(), db = b.max_deg();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    const Int lb = b.coeffs().back();
    LaurentPoly r = a;
    for (long d = da; d >= db; --d) {
      if (r.is_zero() || r.max_deg() < d) {
        r = LaurentPoly(lb) * r;
        continue;
      }
      const Int top = r.coeff(d);
      r = LaurentPoly(lb) * r - LaurentPoly::monomial(top, d - db) * b;
    }
    a = std::move(b);
    b = primitive_poly(r);
  }
  return primitive_poly(a);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_poly(b);
  if (b.is_zero()) return primitive_poly(a);
  return poly_gcd_primitive(primitive_poly(a), primitive_poly(b));
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw SingularMatrix("RationalFunction: zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // move all v-powers into num
  num_ = num_.shifted(-den_.min_deg());
  den_ = den_.shifted(-den_.min_deg());
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    // exact division num/g and den/g over Q, results integral by Gauss' lemma
    auto exact_div = [](const LaurentPoly& p, const LaurentPoly& d) {
      long shift = p.min_deg();
      LaurentPoly r = p.shifted(-shift);
      std::vector<Int> q(size_t(r.max_deg() - d.max_deg() + 1));
      const Int& lead = d.coeffs().back();
      LaurentPoly rem = r;
      for (long deg = r.max_deg() - d.max_deg(); deg >= 0; --deg) {
        Int c = rem.coeff(deg + d.max_deg());
        if (c == 0) continue;
        Int f;
        mpz_divexact(f.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
        q[size_t(deg)] = f;
        rem -= LaurentPoly::monomial(f, deg) * d;
      }
      if (!rem.is_zero()) throw std::logic_error("laurent exact division failed");
      return LaurentPoly(0, std::move(q)).shifted(shift);
    };
    // scale so leading coefficients divide exactly: primitive gcd divides
    // both primitive parts, contents handled separately
    Int cn = num_.content(), cd = den_.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    num_ = divide_content(num_, cg);
    den_ = divide_content(den_, cg);
    LaurentPoly pn = exact_div(divide_content(num_, num_.content()), g);
    LaurentPoly pd = exact_div(divide_content(den_, den_.content()), g);
    num_ = LaurentPoly(num_.content()) * pn;
    den_ = LaurentPoly(den_.content()) * pd;
  }
  // integer contents
  Int cn = num_.content(), cd = den_.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg > 1) {
    num_ = divide_content(num_, cg);
    den_ = divide_content(den_, cg);
  }
  num_ = num_.shifted(-den_.min_deg());
  den_ = den_.shifted(-den_.min_deg());
  if (den_.coeffs().back() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw SingularMatrix("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::string RationalFunction::to_string() const {
  if (is_laurent()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
  return out.str();
}

}  // namespace hecke
