#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "zform/rational.hpp"

namespace zform {

// Polynomials in one formal variable w over the rationals, used as the
// coefficient ring of series whose coefficients are "loop-shift" weights: a
// series sum_j xi_j w^j later acts on a Lie-algebra generator by sending w^j
// to the j-fold index shift of that generator.
class RatPolyW {
 public:
  RatPolyW() = default;
  explicit RatPolyW(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }

  static RatPolyW one() { return RatPolyW(Rat(1)); }
  static RatPolyW w(int power = 1, Rat coeff = Rat(1)) {
    RatPolyW p;
    p.set(power, std::move(coeff));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rat coeff(int j) const {
    if (j < 0 || j > degree()) return Rat(0);
    return c_[static_cast<size_t>(j)];
  }

  void set(int j, Rat v) {
    if (j < 0) throw std::domain_error("RatPolyW: negative power of w");
    if (j >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(j) + 1, Rat(0));
    c_[static_cast<size_t>(j)] = std::move(v);
    trim();
  }

  friend RatPolyW operator+(const RatPolyW& a, const RatPolyW& b) {
    RatPolyW r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }

  friend RatPolyW operator-(const RatPolyW& a, const RatPolyW& b) {
    return a + b.scaled(Rat(-1));
  }

  friend RatPolyW operator*(const RatPolyW& a, const RatPolyW& b) {
    RatPolyW r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend bool operator==(const RatPolyW& a, const RatPolyW& b) { return a.c_ == b.c_; }

  RatPolyW scaled(const Rat& s) const {
    RatPolyW r;
    if (s == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  // w -> w^m (m >= 1).
  RatPolyW stretched(int m) const {
    if (m < 1) throw std::domain_error("RatPolyW::stretched: m must be >= 1");
    RatPolyW r;
    for (int j = 0; j <= degree(); ++j)
      if (c_[static_cast<size_t>(j)] != 0) r.set(j * m, c_[static_cast<size_t>(j)]);
    return r;
  }

  // w -> -w.
  RatPolyW sign_flipped() const {
    RatPolyW r = *this;
    for (int j = 1; j <= r.degree(); j += 2) r.c_[static_cast<size_t>(j)] = -r.c_[static_cast<size_t>(j)];
    r.trim();
    return r;
  }

  std::string render() const {
    if (is_zero()) return "0";
    std::string s;
    for (int j = 0; j <= degree(); ++j) {
      if (c_[static_cast<size_t>(j)] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c_[static_cast<size_t>(j)].get_str();
      if (j >= 1) s += "*w" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[j] = coefficient of w^j
};

inline bool coeff_is_zero(const RatPolyW& p) { return p.is_zero(); }
inline RatPolyW coeff_scale(const RatPolyW& p, const Rat& s) { return p.scaled(s); }

}  // namespace zform
