#include "heckelib/json_io.hpp"

namespace hecke::json_io {

namespace {

json int_value(const Int& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("json: expected integer or decimal string");
}

}  // namespace

json laurent(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(int_value(c));
  return json{{"min_deg", p.min_deg()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from(const json& j) {
  const long min_deg = j.at("min_deg").get<long>();
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from(c));
  LaurentPoly p(min_deg, coeffs);
  // canonical form is part of the wire contract
  if (!(p.is_zero() ? (min_deg == 0 && coeffs.empty())
                    : (p.min_deg() == min_deg && p.coeffs().size() == coeffs.size())))
    throw std::invalid_argument("json: LaurentPoly not in canonical form");
  return p;
}

json rational(const RationalFunction& r) {
  return json{{"num", laurent(r.num())}, {"den", laurent(r.den())}};
}

RationalFunction rational_from(const json& j) {
  return RationalFunction(laurent_from(j.at("num")), laurent_from(j.at("den")));
}

json permutation(const Permutation& w) {
  return json(w.one_line());
}

Permutation permutation_from(const json& j, int n) {
  std::vector<int> line = j.get<std::vector<int>>();
  if (n >= 0 && int(line.size()) != n)
    throw std::invalid_argument("json: permutation of wrong size");
  return Permutation(std::move(line));
}

json partition(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) { return Partition(j.get<std::vector<int>>()); }

json poly_matrix(const PolyMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& e : r) row.push_back(laurent(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix poly_matrix_from(const json& j) {
  PolyMatrix m;
  for (const auto& r : j) {
    std::vector<LaurentPoly> row;
    for (const auto& e : r) row.push_back(laurent_from(e));
    m.push_back(std::move(row));
  }
  return m;
}

json rf_matrix(const RFMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& e : r) row.push_back(rational(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

json sparse_as_dense(const SparseMatrix& m, int cols) {
  return poly_matrix(sparse_to_dense(m, cols));
}

}  // namespace hecke::json_io
