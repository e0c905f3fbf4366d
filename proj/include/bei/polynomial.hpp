#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bei/common.hpp"

// Dense univariate polynomials over Z with arbitrary-precision
// coefficients, stored in ascending degree with trailing zeros trimmed.
// The zero polynomial is the empty coefficient list.

namespace bei {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> cs) : c_(cs) { trim(); }
  explicit IntPoly(std::vector<Int> cs) : c_(std::move(cs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({Int(1)}); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  // t^k
  static IntPoly monomial(int k, Int coeff = Int(1)) {
    std::vector<Int> cs(k + 1);
    cs[k] = std::move(coeff);
    return IntPoly(std::move(cs));
  }
  // (1 - t)^k for k >= 0
  static IntPoly one_minus_t_pow(int k) {
    IntPoly p = one();
    IntPoly f({Int(1), Int(-1)});
    for (int i = 0; i < k; ++i) p = p * f;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Int value_at_one() const {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < c_.size()) out[i] += c_[i];
      if (i < o.c_.size()) out[i] += o.c_[i];
    }
    return IntPoly(std::move(out));
  }
  IntPoly operator-(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < c_.size()) out[i] += c_[i];
      if (i < o.c_.size()) out[i] -= o.c_[i];
    }
    return IntPoly(std::move(out));
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
  }
  IntPoly operator-() const {
    std::vector<Int> out = c_;
    for (auto& v : out) v = -v;
    return IntPoly(std::move(out));
  }
  bool operator==(const IntPoly&) const = default;

  // Exact division by (1 - t). Returns false (leaving *this untouched)
  // when the remainder is nonzero, i.e. when eval(1) != 0.
  bool divide_one_minus_t() {
    if (is_zero()) return true;
    // (1-t) * q = p  <=>  q_j = p_j + q_{j-1}; remainder is the final carry.
    std::vector<Int> q(c_.size());
    Int carry = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      carry += c_[j];
      q[j] = carry;
    }
    if (carry != 0) return false;
    q.pop_back();
    c_ = std::move(q);
    trim();
    return true;
  }

  // Human form in ascending degree, e.g. "1+4t+4t^2-4t^3".
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Int a = c_[k];
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? "-" : "+");
      }
      Int mag = a < 0 ? Int(-a) : a;
      if (k == 0) {
        os << mag.str();
      } else {
        if (mag != 1) os << mag.str();
        os << var;
        if (k >= 2) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace bei
