#include "whitten/poly.hpp"

#include <cctype>
#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace whitten {

// ---------------------------------------------------------------- one variable

LaurentPoly::LaurentPoly(long long constant) { add(0, constant); }

LaurentPoly LaurentPoly::monomial(int doubled_exp, long long coeff) {
  LaurentPoly p;
  p.add(doubled_exp, coeff);
  return p;
}

void LaurentPoly::add(int e, long long v) {
  if (v == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, v);
  } else if ((it->second += v) == 0) {
    c_.erase(it);
  }
}

long long LaurentPoly::coeff(int doubled_exp) const {
  auto it = c_.find(doubled_exp);
  return it == c_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add(e, v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add(e, -v);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::pow(int n) const {
  LaurentPoly r(1), b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int num, int den) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) {
    if ((e * num) % den) throw std::domain_error("substitution leaves a non-half-integer exponent");
    r.add(e * num / den, v);
  }
  return r;
}

namespace {

std::string exp_str(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string power(const std::string& var, int doubled) {
  if (doubled == 0) return "";
  if (doubled == 2) return var;
  return var + "^{" + exp_str(doubled) + "}";
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    long long a = v < 0 ? -v : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    std::string p = power(var, e);
    if (p.empty())
      os << a;
    else if (a == 1)
      os << p;
    else
      os << a << " " << p;
  }
  return os.str();
}

// ---------------------------------------------------------------- two variables

LaurentPoly2::LaurentPoly2(long long constant) { add({0, 0}, constant); }

LaurentPoly2 LaurentPoly2::monomial(int a2, int z2, long long coeff) {
  LaurentPoly2 p;
  p.add({a2, z2}, coeff);
  return p;
}

void LaurentPoly2::add(Key k, long long v) {
  if (v == 0) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, v);
  } else if ((it->second += v) == 0) {
    c_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [k, v] : o.c_) add(k, -v);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  LaurentPoly2 r;
  for (const auto& [k1, v1] : c_)
    for (const auto& [k2, v2] : o.c_) r.add({k1.first + k2.first, k1.second + k2.second}, v1 * v2);
  *this = std::move(r);
  return *this;
}

LaurentPoly2 LaurentPoly2::pow(int n) const {
  LaurentPoly2 r(1), b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

LaurentPoly2 LaurentPoly2::mirror() const {
  LaurentPoly2 r;
  for (const auto& [k, v] : c_) r.add({-k.first, k.second}, (k.first / 2) % 2 ? -v : v);
  return r;
}

int LaurentPoly2::min_z() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (first || k.second < m) m = k.second;
    first = false;
  }
  return m;
}

std::string LaurentPoly2::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  std::vector<std::pair<Key, long long>> order(c_.begin(), c_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second > y.first.second;
    return x.first.first > y.first.first;
  });
  for (const auto& [k, v] : order) {
    long long a = v < 0 ? -v : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    std::string p = power("a", k.first);
    std::string q = power("z", k.second);
    std::string m = p + (p.empty() || q.empty() ? "" : " ") + q;
    if (m.empty())
      os << a;
    else if (a == 1)
      os << m;
    else
      os << a << " " << m;
  }
  return os.str();
}

// ---------------------------------------------------------------- TeX input

namespace {

struct Mono {
  long long num = 1, den = 1;
  std::map<char, int> exps;  // doubled

  Mono& operator*=(const Mono& o) {
    num *= o.num;
    den *= o.den;
    for (const auto& [v, e] : o.exps) exps[v] += e;
    return *this;
  }
  Mono inverse() const {
    Mono r;
    r.num = den;
    r.den = num;
    for (const auto& [v, e] : exps) r.exps[v] = -e;
    return r;
  }
};

[[noreturn]] void tex_fail(const std::string& s, const std::string& why) {
  throw std::invalid_argument("cannot read polynomial term '" + s + "': " + why);
}

std::size_t match_brace(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}' && --depth == 0) return i;
  }
  tex_fail(s, "unbalanced braces");
}

int parse_exponent(const std::string& s, const std::string& whole) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return 2 * std::stoi(t);
    int p = std::stoi(t.substr(0, slash)), q = std::stoi(t.substr(slash + 1));
    if ((2 * p) % q) tex_fail(whole, "exponent " + t + " is not a half-integer");
    return 2 * p / q;
  } catch (const std::logic_error&) {
    tex_fail(whole, "bad exponent '" + t + "'");
  }
}

Mono parse_product(const std::string& s);

// Product possibly containing one top-level '/'.
Mono parse_quotient(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (s[i] == '/' && depth == 0) {
      Mono n = parse_product(s.substr(0, i));
      n *= parse_product(s.substr(i + 1)).inverse();
      return n;
    }
  }
  return parse_product(s);
}

Mono parse_product(const std::string& s) {
  Mono m;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      m.num *= std::stoll(s.substr(i, j - i));
      i = j;
    } else if (c == '{') {
      std::size_t j = match_brace(s, i);
      m *= parse_quotient(s.substr(i + 1, j - i - 1));
      i = j + 1;
    } else if (s.compare(i, 6, "\\sqrt{") == 0) {
      std::size_t j = match_brace(s, i + 5);
      Mono in = parse_quotient(s.substr(i + 6, j - i - 6));
      for (auto& [v, e] : in.exps) {
        if (e % 2) tex_fail(s, "square root of a half power");
        e /= 2;
      }
      if (in.num != 1 || in.den != 1) tex_fail(s, "square root of a number");
      m *= in;
      i = j + 1;
    } else if (s.compare(i, 6, "\\frac{") == 0) {
      std::size_t j = match_brace(s, i + 5);
      if (j + 1 >= s.size() || s[j + 1] != '{') tex_fail(s, "\\frac needs two arguments");
      std::size_t k = match_brace(s, j + 1);
      Mono n = parse_quotient(s.substr(i + 6, j - i - 6));
      n *= parse_quotient(s.substr(j + 2, k - j - 2)).inverse();
      m *= n;
      i = k + 1;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      int e = 2;
      ++i;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '{') {
          std::size_t j = match_brace(s, i);
          e = parse_exponent(s.substr(i + 1, j - i - 1), s);
          i = j + 1;
        } else {
          std::size_t j = i;
          if (j < s.size() && s[j] == '-') ++j;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          e = parse_exponent(s.substr(i, j - i), s);
          i = j;
        }
      }
      m.exps[c] += e;
    } else {
      tex_fail(s, std::string("unexpected '") + c + "'");
    }
  }
  return m;
}

std::vector<Mono> parse_terms(std::string text) {
  for (const char* junk : {"\\left", "\\right", "\\qedhere", "\\,", "\\!", "\\;"}) {
    std::size_t p;
    while ((p = text.find(junk)) != std::string::npos) text.erase(p, std::string(junk).size());
  }
  while (!text.empty() && (std::isspace(static_cast<unsigned char>(text.back())) || text.back() == '.' ||
                           text.back() == ','))
    text.pop_back();
  std::vector<Mono> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    bool blank = true;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      Mono m = parse_quotient(cur);
      m.num *= sign;
      out.push_back(m);
    }
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    bool after_caret = false;
    for (std::size_t j = i; j-- > 0;) {
      if (std::isspace(static_cast<unsigned char>(text[j]))) continue;
      after_caret = text[j] == '^';
      break;
    }
    if ((c == '+' || c == '-') && depth == 0 && !after_caret) {
      flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

}  // namespace

LaurentPoly parse_tex_poly(const std::string& text, char var) {
  LaurentPoly p;
  for (const Mono& m : parse_terms(text)) {
    if (m.num % m.den) tex_fail(text, "non-integer coefficient");
    int e = 0;
    for (const auto& [v, x] : m.exps) {
      if (v != var) tex_fail(text, std::string("unexpected variable ") + v);
      e = x;
    }
    p += LaurentPoly::monomial(e, m.num / m.den);
  }
  return p;
}

LaurentPoly2 parse_tex_poly2(const std::string& text) {
  LaurentPoly2 p;
  for (const Mono& m : parse_terms(text)) {
    if (m.num % m.den) tex_fail(text, "non-integer coefficient");
    int a = 0, z = 0;
    for (const auto& [v, x] : m.exps) {
      if (v == 'a')
        a = x;
      else if (v == 'z')
        z = x;
      else
        tex_fail(text, std::string("unexpected variable ") + v);
    }
    p += LaurentPoly2::monomial(a, z, m.num / m.den);
  }
  return p;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, v] : p.terms()) j.push_back({e, v});
  return j;
}

nlohmann::json to_json(const LaurentPoly2& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, v] : p.terms()) j.push_back({k.first, k.second, v});
  return j;
}

}  // namespace whitten
