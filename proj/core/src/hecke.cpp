#include "heckelib/hecke.hpp"

#include <sstream>

namespace hecke {

HeckeElt HeckeElt::kl_generator(int n, int i) {
  HeckeElt h(n);
  h.support_[Permutation::simple(n, i)] = LaurentPoly(1);
  h.support_[Permutation::identity(n)] = LaurentPoly::v();
  return h;
}

LaurentPoly HeckeElt::coeff(const Permutation& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(const Permutation& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = support_.try_emplace(w, LaurentPoly()).first;
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

std::string HeckeElt::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : support_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")H" << w.to_string();
  }
  return out.str();
}

HeckeElt h_add(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw SizeMismatch("h_add: mixed group sizes");
  HeckeElt r = a;
  for (const auto& [w, c] : b.support()) r.add_term(w, c);
  return r;
}

HeckeElt h_scale(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt r(a.n());
  if (c.is_zero()) return r;
  for (const auto& [w, p] : a.support()) r.add_term(w, c * p);
  return r;
}

HeckeElt h_mul_gen(const HeckeElt& a, int i) {
  HeckeElt r(a.n());
  static const LaurentPoly vinv_minus_v =
      LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (const auto& [w, c] : a.support()) {
    const Permutation ws = w.right_mult_s(i);
    if (!w.right_descent(i)) {
      r.add_term(ws, c);
    } else {
      r.add_term(ws, c);
      r.add_term(w, c * vinv_minus_v);
    }
  }
  return r;
}

HeckeElt h_mul_kl_gen(const HeckeElt& a, int i) {
  HeckeElt r = h_mul_gen(a, i);
  static const LaurentPoly v = LaurentPoly::v();
  for (const auto& [w, c] : a.support()) r.add_term(w, c * v);
  return r;
}

HeckeElt h_mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw SizeMismatch("h_mul: mixed group sizes");
  HeckeElt r(a.n());
  for (const auto& [y, q] : b.support()) {
    HeckeElt term = h_scale(q, a);
    for (int i : y.reduced_word()) term = h_mul_gen(term, i);
    for (const auto& [w, c] : term.support()) r.add_term(w, c);
  }
  return r;
}

HeckeElt h_bar(const HeckeElt& a) {
  // bar(H_s) = H_s + (v - v^-1) H_e, extended along reduced words
  HeckeElt r(a.n());
  static const LaurentPoly v_minus_vinv = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (const auto& [w, c] : a.support()) {
    HeckeElt term(a.n());
    term.add_term(Permutation::identity(a.n()), c.bar());
    for (int i : w.reduced_word()) {
      HeckeElt next = h_mul_gen(term, i);
      for (const auto& [y, p] : term.support()) next.add_term(y, p * v_minus_vinv);
      term = std::move(next);
    }
    for (const auto& [y, p] : term.support()) r.add_term(y, p);
  }
  return r;
}

HeckeElt h_sigma(const HeckeElt& a) {
  HeckeElt r(a.n());
  for (const auto& [w, c] : a.support()) r.add_term(w.inverse(), c);
  return r;
}

}  // namespace hecke
