#include "knotcert/laurent.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"

namespace kc {

Laurent2 Laurent2::constant(std::int64_t c) { return monomial(c, 0, 0); }

Laurent2 Laurent2::monomial(std::int64_t c, int i, int j) {
  Laurent2 p;
  p.add_term(c, i, j);
  return p;
}

std::int64_t Laurent2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

void Laurent2::add_term(std::int64_t c, int i, int j) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  Laurent2 r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

Laurent2 operator*(std::int64_t c, const Laurent2& a) {
  Laurent2 r;
  for (const auto& [k, v] : a.terms_) r.add_term(c * v, k.first, k.second);
  return r;
}

Laurent2 Laurent2::pow(int k) const {
  if (k < 0) throw InputError("negative power of a Laurent polynomial");
  Laurent2 r = constant(1), b = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

Laurent2 Laurent2::mirrored() const {
  Laurent2 r;
  for (const auto& [k, c] : terms_) r.add_term((k.first % 2 != 0) ? -c : c, -k.first, k.second);
  return r;
}

int Laurent2::min_a() const {
  if (is_zero()) throw InputError("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

int Laurent2::max_a() const {
  if (is_zero()) throw InputError("degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

int Laurent2::min_z() const {
  if (is_zero()) throw InputError("degree of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

int Laurent2::max_z() const {
  if (is_zero()) throw InputError("degree of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

Laurent2 Laurent2::a_slice(int i) const {
  Laurent2 r;
  for (const auto& [k, c] : terms_)
    if (k.first == i) r.add_term(c, 0, k.second);
  return r;
}

Laurent2 Laurent2::z_slice(int j) const {
  Laurent2 r;
  for (const auto& [k, c] : terms_)
    if (k.second == j) r.add_term(c, k.first, 0);
  return r;
}

std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  if (*this == constant(1)) return "1";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + " a^" + std::to_string(k.first) + " z^" + std::to_string(k.second);
  }
  return s;
}

nlohmann::json Laurent2::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& [k, c] : terms_) j.push_back({k.first, k.second, c});
  return j;
}

Laurent2 Laurent2::from_json(const nlohmann::json& j) {
  Laurent2 p;
  for (const auto& t : j) p.add_term(t.at(2).get<std::int64_t>(), t.at(0).get<int>(), t.at(1).get<int>());
  return p;
}

Laurent2 unlink_poly(int n) {
  if (n <= 0) throw InputError("unlink needs at least one component");
  Laurent2 delta = Laurent2::monomial(1, 1, -1) - Laurent2::monomial(1, -1, -1);
  return delta.pow(n - 1);
}

Laurent1 Laurent1::monomial(std::int64_t c, int k) {
  Laurent1 p;
  p.add_term(c, k);
  return p;
}

void Laurent1::add_term(std::int64_t c, int k) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Laurent1::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

Laurent1& Laurent1::operator+=(const Laurent1& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k);
  return *this;
}

Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
  Laurent1 r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ca * cb, ka + kb);
  return r;
}

Laurent1 Laurent1::pow(int k) const {
  Laurent1 r = monomial(1, 0), b = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

Laurent1 Laurent1::div_q_minus_qinv() const {
  // p = (q - q^{-1}) h  <=>  q p = (q^2 - 1) h ; peel from the top degree
  if (terms_.empty()) return {};
  std::map<int, std::int64_t> rem;
  for (const auto& [k, c] : terms_) rem[k + 1] = c;
  Laurent1 h;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    int k = top->first;
    std::int64_t c = top->second;
    // c q^k = c q^{k-2} (q^2 - 1) + c q^{k-2}
    h.add_term(c, k - 2);
    rem.erase(top);
    rem[k - 2] += c;
    if (rem[k - 2] == 0) rem.erase(k - 2);
    if (!rem.empty() && std::prev(rem.end())->first < terms_.begin()->first + 1)
      throw InvariantError("polynomial not divisible by q - q^-1");
  }
  return h;
}

std::string Laurent1::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + " q^" + std::to_string(k);
  }
  return s;
}

Laurent1 homfly_to_jones(const Laurent2& p) {
  if (p.is_zero()) return {};
  int lift = std::max(0, -p.min_z());
  Laurent1 z = Laurent1::monomial(1, 1) + Laurent1::monomial(-1, -1);
  Laurent1 acc;
  for (const auto& [k, c] : p.terms()) acc += Laurent1::monomial(c, -2 * k.first) * z.pow(k.second + lift);
  for (int i = 0; i < lift; ++i) acc = acc.div_q_minus_qinv();
  return acc;
}

}  // namespace kc
