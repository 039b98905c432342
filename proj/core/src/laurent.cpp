#include "heckelib/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(long min_deg, std::vector<Int> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(Int coeff, long deg) {
  LaurentPoly p;
  if (coeff != 0) {
    p.min_deg_ = deg;
    p.coeffs_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::v_plus_vinv() {
  return LaurentPoly(-1, {Int(1), Int(0), Int(1)});
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && min_deg_ == 0 && coeffs_[0] == 1;
}

Int LaurentPoly::coeff(long deg) const {
  if (is_zero() || deg < min_deg_ || deg > max_deg()) return Int(0);
  return coeffs_[size_t(deg - min_deg_)];
}

void LaurentPoly::normalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<Int> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
    coeffs_ = std::move(trimmed);
    min_deg_ += long(lo);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long lo = std::min(min_deg_, o.min_deg_);
  long hi = std::max(max_deg(), o.max_deg());
  std::vector<Int> sum(size_t(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) sum[size_t(min_deg_ - lo) + i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) sum[size_t(o.min_deg_ - lo) + i] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.min_deg_ != b.min_deg_) return a.min_deg_ < b.min_deg_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.min_deg_ = -max_deg();
  return r;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_deg_ += k;
  return r;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long d = max_deg(); d >= min_deg_; --d) {
    const Int c = coeff(d);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Int a = abs(c);
    if (a != 1 || d == 0) out << a.get_str();
    if (d != 0) {
      if (a != 1) out << "*";
      out << "v";
      if (d != 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace hecke
