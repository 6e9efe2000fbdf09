#include "zform/discharge.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace zform {

ScalarSeries scalar_one(int cap) { return ScalarSeries::one(cap, Rat(1)); }

ScalarSeries scalar_mono(int cap, int du, int dv, const Rat& c) {
  ScalarSeries s(cap, Rat(1));
  s.set(du, dv, c);
  return s;
}

WSeries w_one(int cap) { return WSeries::one(cap, RatPolyW::one()); }

WSeries w_mono(int cap, int du, int dv, const RatPolyW& c) {
  WSeries s(cap, RatPolyW::one());
  s.set(du, dv, c);
  return s;
}

UEASeries uea_series_one(int cap) { return UEASeries::one(cap, uea_one()); }

SymSeries sym_series_one(int cap) { return SymSeries::one(cap, SymFunc::one()); }

UEASeries tensor(const ScalarSeries& S, const UEAElement& e) {
  UEASeries out(S.cap(), uea_one());
  for (const auto& [k, c] : S.terms()) out.add_to(k.first, k.second, e.scaled(c));
  return out;
}

UEASeries tensor(const ScalarSeries& S, const LieElement& e) {
  return tensor(S, uea_lie(e));
}

UEASeries const_series(const UEAElement& e) {
  UEASeries out(0, uea_one());
  out.set(0, 0, e);
  return out;
}

std::vector<LieElement> shift_powers(const Morphism& step, const Generator& base,
                                     int kmax, int repeat) {
  if (repeat < 1) throw std::domain_error("shift_powers: repeat must be >= 1");
  std::vector<LieElement> pows;
  pows.reserve(kmax + 1);
  pows.emplace_back(base);
  for (int k = 1; k <= kmax; ++k) {
    LieElement next = pows.back();
    for (int j = 0; j < repeat; ++j) next = apply_symmetry(step, next);
    pows.push_back(next);
  }
  return pows;
}

std::vector<LieElement> w_module_powers(const Generator& base, int kmax) {
  std::vector<LieElement> pows;
  pows.reserve(kmax + 1);
  pows.emplace_back(base);
  for (int k = 1; k <= kmax; ++k)
    pows.push_back(w_act(RatPolyW::w(1), pows.back()));
  return pows;
}

UEASeries discharge_w(const WSeries& S, const std::vector<LieElement>& pows) {
  UEASeries out(S.cap(), uea_one());
  for (const auto& [key, poly] : S.terms()) {
    if (poly.degree() >= static_cast<int>(pows.size()))
      throw std::domain_error(
          fmt::format("discharge_w: parameter power {} exceeds the supplied "
                      "lift table (size {})",
                      poly.degree(), pows.size()));
    for (int k = 0; k <= poly.degree(); ++k) {
      Rat c = poly.coeff(k);
      if (c == Rat(0)) continue;
      out.add_to(key.first, key.second, uea_lie(pows[k]).scaled(c));
    }
  }
  return out;
}

UEASeries exp_gen(const Generator& g, const ScalarSeries& S) {
  if (S.has_constant_term())
    throw std::domain_error("exp_gen: argument has a constant term");
  UEASeries out = uea_series_one(S.cap());
  ScalarSeries pow = scalar_one(S.cap());
  for (int k = 1; k <= S.cap(); ++k) {
    pow = pow * S;
    if (pow.is_zero()) break;
    UEAElement dp = divided_power(g, k);
    for (const auto& [key, c] : pow.terms())
      out.add_to(key.first, key.second, dp.scaled(c));
  }
  return out;
}

UEASeries exp_elem(const UEAElement& e, const ScalarSeries& S) {
  return exp_series(tensor(S, e));
}

UEASeries imag_exp(const AlgebraId& alg, int cap, const ImagSpec& spec) {
  const int dtot = spec.du + spec.dv;
  if (dtot <= 0) throw std::domain_error("imag_exp: argument has a constant term");
  UEASeries arg(cap, uea_one());
  Rat scale_pow(1);
  for (int r = 1; r * dtot <= cap; ++r) {
    scale_pow = scale_pow * spec.scale;
    Rat w = spec.weight ? spec.weight(r) : Rat(1);
    Rat c = spec.power * w * scale_pow * make_rat(r % 2 == 1 ? 1 : -1, r);
    if (c == Rat(0)) continue;
    Generator h = make_gen(alg, GenKind::H, spec.side * spec.step * r);
    arg.add_to(r * spec.du, r * spec.dv, uea_gen(h).scaled(c));
  }
  return exp_series(arg);
}

UEASeries divided_power_series(const UEASeries& S, int k) {
  UEASeries out = uea_series_one(S.cap());
  Rat factor(1);
  for (int j = 1; j <= k; ++j) {
    out = out * S;
    factor = factor * make_rat(1, j);
  }
  return out.scaled(factor);
}

UEASeries map_coefficients(const Morphism& s, const UEASeries& S) {
  UEASeries out(S.cap(), uea_one());
  for (const auto& [key, c] : S.terms())
    out.set(key.first, key.second, apply_morphism(s, c));
  return out;
}

UEAElement binomial_of(const LieElement& z, const Rat& offset, int k) {
  if (k < 0) throw std::domain_error("binomial_of: negative order");
  UEAElement zu = uea_lie(z);
  UEAElement out = uea_one();
  for (int j = 0; j < k; ++j) {
    UEAElement linear = zu + uea_one().scaled(offset - Rat(j));
    out = (out * linear).scaled(make_rat(1, j + 1));
  }
  return out;
}

UEASeries one_plus_pow(const ScalarSeries& S, const LieElement& z) {
  if (S.has_constant_term())
    throw std::domain_error("one_plus_pow: series has a constant term");
  ScalarSeries l = log_series(scalar_one(S.cap()) + S);
  return exp_series(tensor(l, z));
}

UEAElement sym_to_uea(const AlgebraId& alg, const SymFunc& f, int side) {
  UEAElement out;
  for (const auto& [lambda, c] : f.terms()) {
    UEAElement mono = uea_one();
    // Partition parts are listed descending; multiply ascending so the PBW
    // monomial is already in index order for the one-sided block.
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it)
      mono = mono * uea_gen(make_gen(alg, GenKind::H, side * *it));
    out = out + mono.scaled(c);
  }
  return out;
}

UEASeries sym_to_uea(const AlgebraId& alg, const SymSeries& S, int side) {
  UEASeries out(S.cap(), uea_one());
  for (const auto& [key, f] : S.terms())
    out.set(key.first, key.second, sym_to_uea(alg, f, side));
  return out;
}

std::vector<long> pell_product_exponents(int M) {
  // L(u) = (1/4) [ log(1+2u-u^2) - log(1-2u-u^2) - log(1+6u^2+u^4) ]
  ScalarSeries one = scalar_one(M);
  ScalarSeries a = scalar_mono(M, 1, 0, Rat(2)) - scalar_mono(M, 2, 0, Rat(1));
  ScalarSeries b = scalar_mono(M, 1, 0, Rat(-2)) - scalar_mono(M, 2, 0, Rat(1));
  ScalarSeries c = scalar_mono(M, 2, 0, Rat(6)) + scalar_mono(M, 4, 0, Rat(1));
  ScalarSeries L =
      (log_series(one + a) - log_series(one + b) - log_series(one + c))
          .scaled(make_rat(1, 4));
  // n L_n = sum_{m | n} (-1)^{n/m - 1} m k_m, solved ascending in n.
  std::vector<long> k(M + 1, 0);
  for (int n = 1; n <= M; ++n) {
    Rat rhs = L.get(n, 0) * Rat(n);
    for (int m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      int sign = ((n / m - 1) % 2 == 0) ? 1 : -1;
      rhs = rhs - Rat(sign) * Rat(m) * Rat(k[m]);
    }
    Rat km = rhs / Rat(n);
    if (!is_integer(km))
      throw std::logic_error(
          fmt::format("pell_product_exponents: k_{} is not an integer", n));
    k[n] = to_integer(km).get_si();
  }
  return k;
}

}  // namespace zform
