#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace whitten {

// Integer Laurent polynomial in one variable. Exponents are stored doubled so
// that half-integer powers stay exact.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit on purpose
  static LaurentPoly monomial(int doubled_exp, long long coeff = 1);

  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long coeff(int doubled_exp) const;
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int n) const;  // n >= 0
  // x -> x^k for a doubled rational factor: exponent e becomes e * num / den.
  LaurentPoly substitute_power(int num, int den) const;
  LaurentPoly mirror() const { return substitute_power(-1, 1); }

  std::string str(const std::string& var = "z") const;

 private:
  void add(int e, long long v);
  std::map<int, long long> c_;
};

// Two variables (a, z), both exponents doubled.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;
  LaurentPoly2() = default;
  LaurentPoly2(long long constant);  // NOLINT
  static LaurentPoly2 monomial(int a2, int z2, long long coeff = 1);

  const std::map<Key, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const LaurentPoly2& b) { return a *= b; }
  LaurentPoly2 operator-() const { return LaurentPoly2() - *this; }
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
  friend bool operator<(const LaurentPoly2& a, const LaurentPoly2& b) { return a.c_ < b.c_; }

  LaurentPoly2 pow(int n) const;
  LaurentPoly2 mirror() const;  // a -> -1/a
  int min_z() const;            // doubled

  std::string str() const;

 private:
  void add(Key k, long long v);
  std::map<Key, long long> c_;
};

// Reads TeX polynomial notation as printed in the link tables: "-\frac{1}{z^{7/2}}+3 z^{5/2}",
// "\sqrt{z}", "1/z^{10}", "\frac{a^2}{z^2}".
LaurentPoly parse_tex_poly(const std::string& text, char var = 'z');
LaurentPoly2 parse_tex_poly2(const std::string& text);

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const LaurentPoly2& p);

}  // namespace whitten
