#include "heckelib/kl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "heckelib/json_io.hpp"

#include <nlohmann/json.hpp>

namespace hecke {

namespace {

// column of x as a dense scratch vector is wasteful; binary search instead
const LaurentPoly& find_in_column(const std::vector<std::pair<int, LaurentPoly>>& col, int y) {
  static const LaurentPoly zero;
  auto it = std::lower_bound(col.begin(), col.end(), y,
                             [](const auto& e, int v) { return e.first < v; });
  return (it != col.end() && it->first == y) ? it->second : zero;
}

}  // namespace

KLTable::KLTable(int n) : n_(n), tbl_(perm_table(n)) { build(); }

void KLTable::build() {
  const PermTable& T = *tbl_;
  const int sz = T.size();
  h_.assign(size_t(sz), {});
  mu_.assign(size_t(sz), {});
  h_[0] = {{0, LaurentPoly(1)}};  // KL_e = H_e

  static const LaurentPoly v = LaurentPoly::v(1);
  static const LaurentPoly vinv = LaurentPoly::v(-1);

  auto build_one = [&](int w) {
    // smallest right descent, deterministic and cache-stable
    int s = 1;
    while (!T.right_descent(w, s)) ++s;
    const int x = T.right(w, s);

    // KL_x * KL_s in standard coordinates
    std::map<int, LaurentPoly> acc;
    for (const auto& [y, hp] : h_[size_t(x)]) {
      const int ys = T.right(y, s);
      acc[ys] += hp;
      acc[y] += hp * (T.right_descent(y, s) ? vinv : v);
    }
    // subtract mu(z,x) KL_z over z < x with zs < z
    for (const auto& [z, m] : mu_[size_t(x)]) {
      if (!T.right_descent(z, s)) continue;
      const LaurentPoly mz{Int(m)};
      for (const auto& [y, hp] : h_[size_t(z)]) acc[y] -= mz * hp;
    }

    std::vector<std::pair<int, LaurentPoly>> col;
    std::vector<std::pair<int, long>> mus;
    for (auto& [y, p] : acc) {
      if (p.is_zero()) continue;
      if (y == w) {
        if (!p.is_one()) throw std::logic_error("KL table: diagonal is not 1");
      } else {
        if (!p.in_v_zv() || !p.is_polynomial())
          throw std::logic_error("KL table: off-diagonal coefficient outside vZ[v]");
        const Int m = p.coeff(1);
        if (m != 0) mus.emplace_back(y, long(m.get_si()));
      }
      col.emplace_back(y, std::move(p));
    }
    h_[size_t(w)] = std::move(col);
    mu_[size_t(w)] = std::move(mus);
  };

  // elements of one length layer depend only on shorter ones
  for (const auto& layer : T.by_length()) {
    if (layer.empty() || T.length(layer[0]) == 0) continue;
    const unsigned hw = std::thread::hardware_concurrency();
    const size_t workers = std::min<size_t>(layer.size(), hw ? hw : 1);
    if (workers <= 1 || layer.size() < 16) {
      for (int w : layer) build_one(w);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::thread> pool;
      for (size_t t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
          while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= layer.size()) return;
            build_one(layer[i]);
          }
        });
      for (auto& t : pool) t.join();
    }
  }
}

const LaurentPoly& KLTable::h(int y, int x) const { return find_in_column(h_[size_t(x)], y); }

LaurentPoly KLTable::h(const Permutation& y, const Permutation& x) const {
  return h(tbl_->rank(y), tbl_->rank(x));
}

long KLTable::mu(int x, int y) const {
  if (x == y) return 0;
  if (tbl_->length(x) > tbl_->length(y)) std::swap(x, y);
  const LaurentPoly& p = find_in_column(h_[size_t(y)], x);
  return long(p.coeff(1).get_si());
}

HeckeElt KLTable::kl_basis_elt(int x) const {
  HeckeElt e(n_);
  for (const auto& [y, p] : h_[size_t(x)]) e.add_term(tbl_->perm(y), p);
  return e;
}

void KLTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("KLTable::save: cannot open " + path);
  nlohmann::json header = {{"format", "klcache"}, {"version", 1}, {"n", n_}};
  out << header.dump() << "\n";
  // records ordered by (length, lex) of x, then of y; ranks are already in
  // that order
  for (int x = 0; x < tbl_->size(); ++x) {
    for (const auto& [y, p] : h_[size_t(x)]) {
      nlohmann::json rec = {{"y", json_io::permutation(tbl_->perm(y))},
                            {"x", json_io::permutation(tbl_->perm(x))},
                            {"h", json_io::laurent(p)}};
      out << rec.dump() << "\n";
    }
  }
}

KLTable KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheCorrupt("KL cache: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw CacheCorrupt("KL cache: missing header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw CacheCorrupt("KL cache: bad header");
  }
  if (header.value("format", "") != "klcache" || header.value("version", 0) != 1)
    throw CacheCorrupt("KL cache: unknown format");
  const int n = header.value("n", 0);
  if (n < 1) throw CacheCorrupt("KL cache: bad n");

  KLTable t;
  t.n_ = n;
  t.tbl_ = perm_table(n);
  const int sz = t.tbl_->size();
  t.h_.assign(size_t(sz), {});
  t.mu_.assign(size_t(sz), {});
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json rec = nlohmann::json::parse(line);
      const int y = t.tbl_->rank(json_io::permutation_from(rec.at("y"), n));
      const int x = t.tbl_->rank(json_io::permutation_from(rec.at("x"), n));
      LaurentPoly p = json_io::laurent_from(rec.at("h"));
      if (p.is_zero()) throw CacheCorrupt("KL cache: explicit zero record");
      if (!t.h_[size_t(x)].empty() && t.h_[size_t(x)].back().first >= y)
        throw CacheCorrupt("KL cache: records out of order");
      if (y != x) {
        const Int m = p.coeff(1);
        if (m != 0) t.mu_[size_t(x)].emplace_back(y, long(m.get_si()));
      }
      t.h_[size_t(x)].emplace_back(y, std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheCorrupt(std::string("KL cache: parse error: ") + e.what());
  }
  for (int x = 0; x < sz; ++x) {
    if (t.h_[size_t(x)].empty() || t.h_[size_t(x)].back().first != x ||
        !t.h_[size_t(x)].back().second.is_one())
      throw CacheCorrupt("KL cache: incomplete table");
  }
  t.revalidate_sample();
  return t;
}

void KLTable::revalidate_sample() const {
  // recompute a deterministic 5% sample of columns from the recursion,
  // using the loaded lower columns as input
  const PermTable& T = *tbl_;
  std::mt19937 rng(0x6b6c5f76u);  // fixed seed: reproducible validation
  static const LaurentPoly v = LaurentPoly::v(1);
  static const LaurentPoly vinv = LaurentPoly::v(-1);
  for (int w = 1; w < T.size(); ++w) {
    if (rng() % 20 != 0) continue;
    int s = 1;
    while (!T.right_descent(w, s)) ++s;
    const int x = T.right(w, s);
    std::map<int, LaurentPoly> acc;
    for (const auto& [y, hp] : h_[size_t(x)]) {
      acc[T.right(y, s)] += hp;
      acc[y] += hp * (T.right_descent(y, s) ? vinv : v);
    }
    for (const auto& [z, m] : mu_[size_t(x)]) {
      if (!T.right_descent(z, s)) continue;
      const LaurentPoly mz{Int(m)};
      for (const auto& [y, hp] : h_[size_t(z)]) acc[y] -= mz * hp;
    }
    for (auto& [y, p] : acc) {
      if (p != h(y, w)) throw CacheCorrupt("KL cache: revalidation mismatch");
    }
    for (const auto& [y, p] : h_[size_t(w)]) {
      auto it = acc.find(y);
      if (it == acc.end() || it->second.is_zero())
        if (!p.is_zero()) throw CacheCorrupt("KL cache: revalidation mismatch");
    }
  }
}

KLTable kl_table(int n, const std::optional<std::string>& cache_path) {
  if (n < 1) throw std::invalid_argument("kl_table: n must be >= 1");
  if (cache_path && std::filesystem::exists(*cache_path)) {
    KLTable t = KLTable::load(*cache_path);
    if (t.n() != n) throw CacheCorrupt("KL cache: wrong n");
    return t;
  }
  KLTable t(n);
  if (cache_path) t.save(*cache_path);
  return t;
}

std::map<Permutation, LaurentPoly> to_kl(const HeckeElt& a, const KLTable& t) {
  if (a.n() != t.n()) throw SizeMismatch("to_kl: wrong table");
  // triangular back-substitution from the top rank downward
  std::map<int, LaurentPoly> rest;
  for (const auto& [w, c] : a.support()) rest[t.table().rank(w)] = c;
  std::map<Permutation, LaurentPoly> out;
  while (!rest.empty()) {
    auto it = std::prev(rest.end());
    const int x = it->first;
    const LaurentPoly c = it->second;
    rest.erase(it);
    if (c.is_zero()) continue;
    out[t.table().perm(x)] = c;
    for (const auto& [y, p] : t.column(x)) {
      if (y == x) continue;
      auto jt = rest.try_emplace(y, LaurentPoly()).first;
      jt->second -= c * p;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

HeckeElt from_kl(const std::map<Permutation, LaurentPoly>& coeffs, const KLTable& t) {
  HeckeElt a(t.n());
  for (const auto& [w, c] : coeffs) {
    const int x = t.table().rank(w);
    for (const auto& [y, p] : t.column(x)) a.add_term(t.table().perm(y), c * p);
  }
  return a;
}

}  // namespace hecke
