#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kc {

// exact Laurent polynomial in (a, z); keys are (a-exponent, z-exponent)
class Laurent2 {
 public:
  using Key = std::pair<int, int>;

  Laurent2() = default;
  static Laurent2 constant(std::int64_t c);
  static Laurent2 monomial(std::int64_t c, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int i, int j) const;
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  void add_term(std::int64_t c, int i, int j);

  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
  friend Laurent2 operator*(std::int64_t c, const Laurent2& a);
  bool operator==(const Laurent2&) const = default;
  Laurent2 pow(int k) const;

  // a -> -a^{-1}
  Laurent2 mirrored() const;

  int min_a() const;  // e
  int max_a() const;  // E
  int min_z() const;  // m
  int max_z() const;  // M
  // Q_i(z): coefficient of a^i; P_j(a): coefficient of z^j
  Laurent2 a_slice(int i) const;
  Laurent2 z_slice(int j) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Laurent2 from_json(const nlohmann::json& j);

 private:
  std::map<Key, std::int64_t> terms_;
};

// ((a - a^{-1}) z^{-1})^{n-1}
Laurent2 unlink_poly(int n);

// one-variable Laurent polynomial in q
class Laurent1 {
 public:
  Laurent1() = default;
  static Laurent1 monomial(std::int64_t c, int k);
  void add_term(std::int64_t c, int k);
  std::int64_t coeff(int k) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  Laurent1& operator+=(const Laurent1& o);
  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b);
  bool operator==(const Laurent1&) const = default;
  Laurent1 pow(int k) const;
  // exact division by (q - q^{-1}); throws if not divisible
  Laurent1 div_q_minus_qinv() const;
  std::string str() const;

 private:
  std::map<int, std::int64_t> terms_;
};

// P(a = q^{-2}, z = q - q^{-1})
Laurent1 homfly_to_jones(const Laurent2& p);

}  // namespace kc
