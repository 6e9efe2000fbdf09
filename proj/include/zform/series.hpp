#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zform/rational.hpp"

namespace zform {

// Coefficient-ring hooks for the built-in rational coefficients. Other
// coefficient types (polynomials, symmetric functions, enveloping-algebra
// elements) provide their own overloads, found by argument-dependent lookup.
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline Rat coeff_scale(const Rat& c, const Rat& s) { return c * s; }

// Truncated power series in two commuting formal variables u, v with
// coefficients in a (possibly noncommutative) ring C.
//
// `cap` is the total-degree bound: exactly the coefficients with
// deg_u + deg_v <= cap are tracked, everything beyond is silently dropped.
// Combining series with different caps truncates to the smaller cap.
//
// The ring C is supplied through a prototype of its multiplicative unit so
// that rings whose elements carry runtime context (such as the algebra they
// live in) can be used unchanged.
template <class C>
class TruncSeries {
 public:
  using Key = std::pair<int, int>;  // (deg_u, deg_v)

  TruncSeries(int cap, C unit) : cap_(cap), unit_(std::move(unit)) {
    if (cap < 0) throw std::domain_error("TruncSeries: negative cap");
  }

  int cap() const { return cap_; }
  const C& unit() const { return unit_; }
  const std::map<Key, C>& terms() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }

  static TruncSeries one(int cap, C unit) {
    TruncSeries s(cap, unit);
    s.set(0, 0, unit);
    return s;
  }

  static TruncSeries var_u(int cap, C unit) {
    TruncSeries s(cap, unit);
    s.set(1, 0, unit);
    return s;
  }

  static TruncSeries var_v(int cap, C unit) {
    TruncSeries s(cap, unit);
    s.set(0, 1, unit);
    return s;
  }

  void set(int du, int dv, C c) {
    if (du < 0 || dv < 0) throw std::domain_error("TruncSeries: negative degree");
    if (du + dv > cap_) return;
    if (coeff_is_zero(c))
      coef_.erase(Key{du, dv});
    else
      coef_[Key{du, dv}] = std::move(c);
  }

  void add_to(int du, int dv, const C& c) {
    if (du < 0 || dv < 0) throw std::domain_error("TruncSeries: negative degree");
    if (du + dv > cap_ || coeff_is_zero(c)) return;
    auto it = coef_.find(Key{du, dv});
    if (it == coef_.end()) {
      coef_.emplace(Key{du, dv}, c);
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) coef_.erase(it);
    }
  }

  C get(int du, int dv) const {
    auto it = coef_.find(Key{du, dv});
    if (it == coef_.end()) return unit_ - unit_;  // the zero of C
    return it->second;
  }

  bool has_constant_term() const { return coef_.count(Key{0, 0}) != 0; }

  // Forget terms above a smaller cap.
  TruncSeries truncated(int new_cap) const {
    TruncSeries r(new_cap, unit_);
    for (const auto& [k, c] : coef_)
      if (k.first + k.second <= new_cap) r.coef_[k] = c;
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r(cap_, unit_);
    for (const auto& [k, c] : coef_) r.coef_[k] = coeff_scale(c, Rat(-1));
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r = a.truncated(std::min(a.cap_, b.cap_));
    for (const auto& [k, c] : b.coef_) r.add_to(k.first, k.second, c);
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int cap = std::min(a.cap_, b.cap_);
    TruncSeries r(cap, a.unit_);
    for (const auto& [ka, ca] : a.coef_) {
      if (ka.first + ka.second > cap) continue;
      for (const auto& [kb, cb] : b.coef_) {
        int du = ka.first + kb.first, dv = ka.second + kb.second;
        if (du + dv > cap) continue;
        r.add_to(du, dv, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int cap = std::min(a.cap_, b.cap_);
    return a.truncated(cap).coef_ == b.truncated(cap).coef_;
  }

  // Scale every coefficient by a rational.
  TruncSeries scaled(const Rat& s) const {
    TruncSeries r(cap_, unit_);
    if (s == 0) return r;
    for (const auto& [k, c] : coef_) r.coef_[k] = coeff_scale(c, s);
    return r;
  }

  // Multiply every coefficient by a ring element, on the left or right.
  TruncSeries coeff_mul_left(const C& a) const {
    TruncSeries r(cap_, unit_);
    for (const auto& [k, c] : coef_) r.set(k.first, k.second, a * c);
    return r;
  }
  TruncSeries coeff_mul_right(const C& a) const {
    TruncSeries r(cap_, unit_);
    for (const auto& [k, c] : coef_) r.set(k.first, k.second, c * a);
    return r;
  }

 private:
  int cap_;
  C unit_;
  std::map<Key, C> coef_;
};

// ---------------------------------------------------------------------------
// Elementary operations.  exp/log/inverse/power/root assume that the
// coefficients appearing in their argument commute with one another; that is
// an obligation on the caller (see check_pairwise_commuting for an explicit,
// exact check usable in tests).

template <class C>
TruncSeries<C> exp_series(const TruncSeries<C>& s) {
  if (s.has_constant_term())
    throw std::domain_error("exp_series: nonzero constant term");
  TruncSeries<C> result = TruncSeries<C>::one(s.cap(), s.unit());
  TruncSeries<C> power = result;
  for (int k = 1; k <= s.cap(); ++k) {
    power = (power * s).scaled(make_rat(1, k));
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

// log of a series with constant term 1, returned as a series with zero
// constant term.
template <class C>
TruncSeries<C> log_series(const TruncSeries<C>& f) {
  TruncSeries<C> s = f - TruncSeries<C>::one(f.cap(), f.unit());
  if (s.has_constant_term())
    throw std::domain_error("log_series: constant term is not 1");
  TruncSeries<C> result(s.cap(), s.unit());
  TruncSeries<C> power = TruncSeries<C>::one(s.cap(), s.unit());
  for (int k = 1; k <= s.cap(); ++k) {
    power = power * s;
    if (power.is_zero()) break;
    result = result + power.scaled(make_rat((k % 2 == 1) ? 1 : -1, k));
  }
  return result;
}

// Multiplicative inverse of a series with constant term 1.
template <class C>
TruncSeries<C> invert_series(const TruncSeries<C>& f) {
  TruncSeries<C> s = TruncSeries<C>::one(f.cap(), f.unit()) - f;
  if (s.has_constant_term())
    throw std::domain_error("invert_series: constant term is not 1");
  TruncSeries<C> result = TruncSeries<C>::one(f.cap(), f.unit());
  TruncSeries<C> power = result;
  for (int k = 1; k <= f.cap(); ++k) {
    power = power * s;
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

// (1+s)^a for rational exponent a, with s constant-term-free.
template <class C>
TruncSeries<C> pow_one_plus(const TruncSeries<C>& s, const Rat& a) {
  if (s.has_constant_term())
    throw std::domain_error("pow_one_plus: nonzero constant term");
  return exp_series(log_series(TruncSeries<C>::one(s.cap(), s.unit()) + s).scaled(a));
}

// (1+s)^a for an exponent a in the coefficient ring (e.g. a Cartan element of
// an enveloping algebra).  a must commute with the coefficients of s.
template <class C>
TruncSeries<C> pow_one_plus_elem(const TruncSeries<C>& s, const C& a) {
  if (s.has_constant_term())
    throw std::domain_error("pow_one_plus_elem: nonzero constant term");
  return exp_series(
      log_series(TruncSeries<C>::one(s.cap(), s.unit()) + s).coeff_mul_left(a));
}

// The unique m-th root with constant term 1 of a series with constant term 1.
template <class C>
TruncSeries<C> root_series(const TruncSeries<C>& f, int m) {
  if (m == 0) throw std::domain_error("root_series: zero root index");
  return exp_series(log_series(f).scaled(make_rat(1, m)));
}

// Substitute su for u and sv for v; both must be constant-term-free, and the
// coefficients involved must commute (caller obligation).
template <class C>
TruncSeries<C> substitute(const TruncSeries<C>& f, const TruncSeries<C>& su,
                          const TruncSeries<C>& sv) {
  if (su.has_constant_term() || sv.has_constant_term())
    throw std::domain_error("substitute: replacement has a constant term");
  int cap = std::min({f.cap(), su.cap(), sv.cap()});
  std::vector<TruncSeries<C>> pu{TruncSeries<C>::one(cap, f.unit())};
  std::vector<TruncSeries<C>> pv{TruncSeries<C>::one(cap, f.unit())};
  for (int k = 1; k <= cap; ++k) {
    pu.push_back(pu.back() * su);
    pv.push_back(pv.back() * sv);
  }
  TruncSeries<C> r(cap, f.unit());
  for (const auto& [k, c] : f.terms()) {
    if (k.first > cap || k.second > cap) continue;
    TruncSeries<C> t = pu[static_cast<size_t>(k.first)] * pv[static_cast<size_t>(k.second)];
    r = r + t.coeff_mul_left(c);
  }
  return r;
}

// Substitute a series for u in a v-free series.
template <class C>
TruncSeries<C> substitute_u(const TruncSeries<C>& f, const TruncSeries<C>& su) {
  return substitute(f, su, TruncSeries<C>::var_v(f.cap(), f.unit()));
}

// d/du; the cap drops by one since the top coefficients of the derivative are
// no longer certified.
template <class C>
TruncSeries<C> derivative_u(const TruncSeries<C>& f) {
  if (f.cap() == 0) throw std::domain_error("derivative_u: cap exhausted");
  TruncSeries<C> r(f.cap() - 1, f.unit());
  for (const auto& [k, c] : f.terms())
    if (k.first >= 1) r.set(k.first - 1, k.second, coeff_scale(c, Rat(k.first)));
  return r;
}

template <class C>
TruncSeries<C> derivative_v(const TruncSeries<C>& f) {
  if (f.cap() == 0) throw std::domain_error("derivative_v: cap exhausted");
  TruncSeries<C> r(f.cap() - 1, f.unit());
  for (const auto& [k, c] : f.terms())
    if (k.second >= 1) r.set(k.first, k.second - 1, coeff_scale(c, Rat(k.second)));
  return r;
}

// Even/odd decomposition of a one-variable (u-only) series p:
//   p(t) = plus(t) + t * minus(t)
// where plus and minus contain only even powers, together with the companion
// series zero(z) defined by  zero(t^2) = (1/2) * plus(t) * minus(t),
// returned in its own variable (u stands for z).
template <class C>
struct EvenOddSplit {
  TruncSeries<C> plus, minus, zero;
};

template <class C>
EvenOddSplit<C> even_odd_split(const TruncSeries<C>& p) {
  TruncSeries<C> plus(p.cap(), p.unit());
  TruncSeries<C> minus(p.cap(), p.unit());
  for (const auto& [k, c] : p.terms()) {
    if (k.second != 0)
      throw std::domain_error("even_odd_split: series is not one-variable");
    if (k.first % 2 == 0)
      plus.set(k.first, 0, c);
    else
      minus.set(k.first - 1, 0, c);
  }
  TruncSeries<C> prod = (plus * minus).scaled(make_rat(1, 2));
  TruncSeries<C> zero(p.cap(), p.unit());
  for (const auto& [k, c] : prod.terms()) zero.set(k.first / 2, 0, c);
  return {plus, minus, zero};
}

// First position, in graded-lexicographic order, where two series differ
// (up to the smaller cap), together with both coefficients.
template <class C>
struct SeriesDiff {
  int deg_u, deg_v;
  C lhs, rhs;
};

template <class C>
std::optional<SeriesDiff<C>> first_difference(const TruncSeries<C>& a,
                                              const TruncSeries<C>& b) {
  int cap = std::min(a.cap(), b.cap());
  std::vector<std::pair<int, int>> keys;
  for (const auto& [k, c] : a.terms())
    if (k.first + k.second <= cap) keys.push_back(k);
  for (const auto& [k, c] : b.terms())
    if (k.first + k.second <= cap) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    int tx = x.first + x.second, ty = y.first + y.second;
    if (tx != ty) return tx < ty;
    return x < y;
  });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& k : keys) {
    C ca = a.get(k.first, k.second), cb = b.get(k.first, k.second);
    if (!coeff_is_zero(ca - cb)) return SeriesDiff<C>{k.first, k.second, ca, cb};
  }
  return std::nullopt;
}

// Exact pairwise-commutativity check of all coefficients of s; quadratic in
// the number of terms, intended for tests and debug assertions.
template <class C>
bool check_pairwise_commuting(const TruncSeries<C>& s) {
  std::vector<const C*> cs;
  for (const auto& [k, c] : s.terms()) cs.push_back(&c);
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (!coeff_is_zero(*cs[i] * *cs[j] - *cs[j] * *cs[i])) return false;
  return true;
}

}  // namespace zform
