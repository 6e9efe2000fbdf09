#include <fmt/format.h>

#include "zform/verify.hpp"

// The identity catalog.  Each entry states a closed-form two-sided identity
// (or a finite family of element equations) and provides exact builders for
// both sides.  Builders are pure functions of (order, instance): they hold no
// shared mutable state, so entries can be verified concurrently.

namespace zform {

namespace {

ScalarSeries U(int cap) { return scalar_mono(cap, 1, 0); }
ScalarSeries V(int cap) { return scalar_mono(cap, 0, 1); }
ScalarSeries UV(int cap) { return scalar_mono(cap, 1, 1); }

// 1/(1+uv)
ScalarSeries inv_one_plus_uv(int cap) { return pow_one_plus(UV(cap), Rat(-1)); }

UEASeries exp_disch(const WSeries& W, const std::vector<LieElement>& pows) {
  return exp_series(discharge_w(W, pows));
}

// sum_{r>=0} (-1)^r u^{r+du0} v^{r+dv0} g(r): the generating argument of the
// one-sided real-root exponentials.
UEASeries alt_arg(const AlgebraId& alg, int cap, GenKind kind, int base_index,
                  int du0, int dv0) {
  UEASeries a(cap, uea_one());
  Rat c(1);
  for (int r = 0; r + du0 + dv0 <= cap; ++r) {
    if (r > 0) c = -c;
    a.add_to(r + du0, r + dv0,
             uea_gen(make_gen(alg, kind, base_index + r)).scaled(c));
  }
  return a;
}

// h_+(z) = sum_{r>=1} (-1)^{r-1} h_r u^r v^r / r  (the log of the hat series).
UEASeries h_log_arg(const AlgebraId& alg, int cap) {
  UEASeries a(cap, uea_one());
  Rat c(1);
  for (int r = 1; 2 * r <= cap; ++r) {
    if (r > 1) c = -c;
    a.add_to(r, r, uea_gen(make_gen(alg, GenKind::H, r)).scaled(c / Rat(r)));
  }
  return a;
}

ImagSpec hat_spec(int du, int dv, int side = 1) {
  ImagSpec s;
  s.side = side;
  s.du = du;
  s.dv = dv;
  return s;
}

ImagSpec tilde_spec(int du, int dv, int side = 1) {
  ImagSpec s = hat_spec(du, dv, side);
  s.weight = [](long r) { return Rat(epsilon(r)); };
  return s;
}

ImagSpec pell_spec(int du, int dv) {
  ImagSpec s = hat_spec(du, dv);
  s.weight = [](long r) { return pell_d(r); };
  return s;
}

ImagSpec half_hat_spec(int du, int dv, int side = 1) {
  ImagSpec s = hat_spec(du, dv, side);
  s.power = make_rat(1, 2);
  return s;
}

// Untwisted-affine middle-block factorization shared by two entries:
// exp(v x-(-uv)) hhat_+(uv) exp(u x+(-uv)).
UEASeries exefh_rhs(int cap) {
  AlgebraId a11 = alg_a11();
  return exp_series(alt_arg(a11, cap, GenKind::XM, 1, 0, 1)) *
         imag_exp(a11, cap, hat_spec(1, 1)) *
         exp_series(alt_arg(a11, cap, GenKind::XP, 0, 1, 0));
}

// Cartan two-sided straightening shared by the twisted entries:
// lhs  = fam_+(u) fam_-(v),
// rhs  = fam_-(v) (1-uv)^{-4c} (1+uv)^{2c} fam_+(u).
UEASeries zkd_lhs(int cap, const ImagSpec& plus_proto) {
  AlgebraId a22 = alg_a22();
  ImagSpec plus = plus_proto;
  ImagSpec minus = plus_proto;
  minus.side = -1;
  minus.du = 0;
  minus.dv = 1;
  return imag_exp(a22, cap, plus) * imag_exp(a22, cap, minus);
}

UEASeries zkd_rhs(int cap, const ImagSpec& plus_proto) {
  AlgebraId a22 = alg_a22();
  LieElement c(make_gen(a22, GenKind::C));
  ImagSpec plus = plus_proto;
  ImagSpec minus = plus_proto;
  minus.side = -1;
  minus.du = 0;
  minus.dv = 1;
  return imag_exp(a22, cap, minus) * one_plus_pow(-UV(cap), c.scaled(Rat(-4))) *
         one_plus_pow(UV(cap), c.scaled(Rat(2))) * imag_exp(a22, cap, plus);
}

// (1 - u T^-1)^6 (1 + u^2 T^-2) (1 - u^2 T^-2)^{-3} applied to x_r+ through
// the index-shift lift, as the argument of a generating exponential in v.
UEASeries tilde_transport_arg(int cap, int r) {
  AlgebraId a22 = alg_a22();
  WSeries t1 = pow_one_plus(w_mono(cap, 1, 0, RatPolyW::w(1, Rat(-1))), Rat(6));
  WSeries t2 = w_one(cap) + w_mono(cap, 2, 0, RatPolyW::w(2, Rat(1)));
  WSeries t3 = pow_one_plus(w_mono(cap, 2, 0, RatPolyW::w(2, Rat(-1))), Rat(-3));
  return discharge_w(
      t1 * t2 * t3 * w_mono(cap, 0, 1, RatPolyW::one()),
      shift_powers(morph_shift_inv(), make_gen(a22, GenKind::XP, r), cap));
}

// h-family series sum_k fam_k z^k as a one-variable coefficient list.
SymSeries family_series(const GeneratorFamily& fam, int cap, const Rat& scale,
                        int step) {
  SymSeries s = sym_series_one(cap);
  Rat c(1);
  for (int k = 1; k * step <= cap; ++k) {
    c = c * scale;
    s.add_to(k * step, 0, fam.g(k).scaled(c));
  }
  return s;
}

SymSeries map_sym(const SymSeries& s, const std::function<SymFunc(const SymFunc&)>& f) {
  SymSeries out(s.cap(), SymFunc::one());
  for (const auto& [key, c] : s.terms()) out.set(key.first, key.second, f(c));
  return out;
}

std::vector<std::string> labels_from(const std::vector<int>& v,
                                     const std::string& name) {
  std::vector<std::string> out;
  for (int x : v) out.push_back(fmt::format("{}={}", name, x));
  return out;
}

std::vector<IdentityEntry> make_catalog() {
  std::vector<IdentityEntry> cat;
  AlgebraId sl2 = alg_sl2();
  AlgebraId a11 = alg_a11();
  AlgebraId a22 = alg_a22();

  Generator e_sl2 = make_gen(sl2, GenKind::E);
  Generator f_sl2 = make_gen(sl2, GenKind::F);
  LieElement h_sl2(make_gen(sl2, GenKind::H0));

  auto xp1 = [a11](int r) { return make_gen(a11, GenKind::XP, r); };
  auto xm1 = [a11](int r) { return make_gen(a11, GenKind::XM, r); };
  LieElement h0_1(make_gen(a11, GenKind::H, 0));
  LieElement c_1(make_gen(a11, GenKind::C));

  auto xp2 = [a22](int r) { return make_gen(a22, GenKind::XP, r); };
  auto xm2 = [a22](int r) { return make_gen(a22, GenKind::XM, r); };
  auto Xp2 = [a22](int r) { return make_gen(a22, GenKind::XXP, r); };
  auto Xm2 = [a22](int r) { return make_gen(a22, GenKind::XXM, r); };
  LieElement h0_2(make_gen(a22, GenKind::H, 0));
  LieElement c_2(make_gen(a22, GenKind::C));

  // ---- finite-dimensional prototype -------------------------------------

  cat.push_back(
      {"CEF", sl2,
       "exp(e u) exp(f v) = exp(f v/(1+uv)) (1+uv)^h exp(e u/(1+uv))", 12, 1.0,
       {"base"},
       [=](int N, int) {
         return exp_gen(e_sl2, U(N)) * exp_gen(f_sl2, V(N));
       },
       [=](int N, int) {
         ScalarSeries inv = inv_one_plus_uv(N);
         return exp_gen(f_sl2, V(N) * inv) * one_plus_pow(UV(N), h_sl2) *
                exp_gen(e_sl2, U(N) * inv);
       }});

  cat.push_back({"EFU", sl2, "e exp(f u) = exp(f u) (e + h u - f u^2)", 10, 1.0,
                 {"base"},
                 [=](int N, int) {
                   return tensor(scalar_one(N), LieElement(e_sl2)) *
                          exp_gen(f_sl2, U(N));
                 },
                 [=](int N, int) {
                   return exp_gen(f_sl2, U(N)) *
                          (tensor(scalar_one(N), LieElement(e_sl2)) +
                           tensor(U(N), h_sl2) -
                           tensor(scalar_mono(N, 2, 0), LieElement(f_sl2)));
                 }});

  // ---- weight-pair models: exp(x u) (1+v)^h = (1+v)^h exp(x u (1+v)^-m) --

  for (int m : {-2, -1, 0, 1, 2}) {
    AlgebraId wp = alg_weight_pair(m);
    Generator x = make_gen(wp, GenKind::XP);
    LieElement h(make_gen(wp, GenKind::H0));
    std::string suffix = m < 0 ? fmt::format("M{}", -m)
                               : (m == 0 ? "Z" : fmt::format("P{}", m));
    cat.push_back(
        {fmt::format("BDM_{}", suffix), wp,
         fmt::format("[h,x]={}x: exp(x u) (1+v)^h = (1+v)^h exp(x u (1+v)^-({}))",
                     m, m),
         10, 1.0, {"base"},
         [=](int N, int) { return exp_gen(x, U(N)) * one_plus_pow(V(N), h); },
         [=](int N, int) {
           return one_plus_pow(V(N), h) *
                  exp_gen(x, U(N) * pow_one_plus(V(N), Rat(-m)));
         }});
  }

  // ---- central-pair model -------------------------------------------------

  {
    AlgebraId cp = alg_central_pair(3);
    Generator x = make_gen(cp, GenKind::XP);
    Generator z = make_gen(cp, GenKind::C);
    Generator y = make_gen(cp, GenKind::XM);
    cat.push_back(
        {"JHG", cp, "[y,x]=-3z central: exp(y u) exp(x v) = exp(x v) exp(-3 z uv) exp(y u)",
         10, 1.0, {"base"},
         [=](int N, int) { return exp_gen(y, U(N)) * exp_gen(x, V(N)); },
         [=](int N, int) {
           return exp_gen(x, V(N)) * exp_gen(z, UV(N).scaled(Rat(-3))) *
                  exp_gen(y, U(N));
         }});
  }

  // ---- Heisenberg models ---------------------------------------------------

  for (auto [m, l] : {std::pair{2, 0}, {4, -2}}) {
    AlgebraId hb = alg_heisenberg(m, l);
    LieElement c(make_gen(hb, GenKind::C));
    cat.push_back(
        {fmt::format("HEISE_{}_{}", m, l < 0 ? fmt::format("N{}", -l) : fmt::format("{}", l)),
         hb,
         fmt::format("hhat_+(u) hhat_-(v) = hhat_-(v) (1-uv)^(-{}c) (1+uv)^(-({})c) hhat_+(u)",
                     m, l),
         10, 1.0, {"base"},
         [=](int N, int) {
           return imag_exp(hb, N, hat_spec(1, 0, 1)) *
                  imag_exp(hb, N, hat_spec(0, 1, -1));
         },
         [=](int N, int) {
           return imag_exp(hb, N, hat_spec(0, 1, -1)) *
                  one_plus_pow(-UV(N), c.scaled(Rat(-m))) *
                  one_plus_pow(UV(N), c.scaled(Rat(-l))) *
                  imag_exp(hb, N, hat_spec(1, 0, 1));
         }});
  }

  // ---- eigen-shift models --------------------------------------------------

  {
    AlgebraId es = alg_eigen_shift(0);  // [h_r, x_s] = 2 x_{r+s}
    cat.push_back(
        {"HH_SIMPLE", es,
         "x_r hhat_+(u) = hhat_+(u) ((1+u T^-1)^-2 x_r)", 8, 1.0,
         labels_from({0, 1}, "r"),
         [=](int N, int inst) {
           Generator x = make_gen(es, GenKind::XP, inst);
           return tensor(scalar_one(N), LieElement(x)) *
                  imag_exp(es, N, hat_spec(1, 0));
         },
         [=](int N, int inst) {
           Generator x = make_gen(es, GenKind::XP, inst);
           WSeries W = pow_one_plus(w_mono(N, 1, 0, RatPolyW::w(1)), Rat(-2));
           return imag_exp(es, N, hat_spec(1, 0)) *
                  discharge_w(W, shift_powers(morph_shift_inv(), x, N));
         }});
  }

  {
    AlgebraId es = alg_eigen_shift(1);  // [h_r, x_s] = sum_{d|r} d m_d x_{r+s}
    cat.push_back(
        {"HH_TWISTED", es,
         "x_r hhat_+(u) = hhat_+(u) ((1+uT^-1)^-6 (1-u^2T^-2)^2 (1-u^4T^-4) x_r)",
         8, 1.0, labels_from({0, 1}, "r"),
         [=](int N, int inst) {
           Generator x = make_gen(es, GenKind::XP, inst);
           return tensor(scalar_one(N), LieElement(x)) *
                  imag_exp(es, N, hat_spec(1, 0));
         },
         [=](int N, int inst) {
           Generator x = make_gen(es, GenKind::XP, inst);
           WSeries W = pow_one_plus(w_mono(N, 1, 0, RatPolyW::w(1)), Rat(-6)) *
                       pow_one_plus(w_mono(N, 2, 0, RatPolyW::w(2, Rat(-1))), Rat(2)) *
                       (w_one(N) + w_mono(N, 4, 0, RatPolyW::w(4, Rat(-1))));
           return imag_exp(es, N, hat_spec(1, 0)) *
                  discharge_w(W, shift_powers(morph_shift_inv(), x, N));
         }});
  }

  // ---- untwisted affine ------------------------------------------------------

  cat.push_back(
      {"ZZK", a11,
       "hhat_+(u) hhat_-(v) = hhat_-(v) (1-uv)^(-2c) hhat_+(u)", 10, 2.0,
       {"base"},
       [=](int N, int) {
         return imag_exp(a11, N, hat_spec(1, 0, 1)) *
                imag_exp(a11, N, hat_spec(0, 1, -1));
       },
       [=](int N, int) {
         return imag_exp(a11, N, hat_spec(0, 1, -1)) *
                one_plus_pow(-UV(N), c_1.scaled(Rat(-2))) *
                imag_exp(a11, N, hat_spec(1, 0, 1));
       }});

  cat.push_back(
      {"PUM", a11,
       "exp(x+[0] v) hhat_+(u) = hhat_+(u) exp(((1+u T^-1)^-2 x+[0]) v)", 8,
       5.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp1(0), V(N)) * imag_exp(a11, N, hat_spec(1, 0));
       },
       [=](int N, int) {
         WSeries W = pow_one_plus(w_mono(N, 1, 0, RatPolyW::w(1)), Rat(-2));
         return imag_exp(a11, N, hat_spec(1, 0)) *
                exp_disch(W * w_mono(N, 0, 1, RatPolyW::one()),
                          shift_powers(morph_shift_inv(), xp1(0), N));
       }});

  cat.push_back(
      {"LIMT", a11,
       "x+[0] exp(v x-(-uv)) = exp(v x-(-uv)) (x+[0] + d/du h_+(uv) + d/du v x-(-uv))",
       8, 5.0, {"base"},
       [=](int N, int) {
         return tensor(scalar_one(N), LieElement(xp1(0))) *
                exp_series(alt_arg(a11, N, GenKind::XM, 1, 0, 1));
       },
       [=](int N, int) {
         return exp_series(alt_arg(a11, N, GenKind::XM, 1, 0, 1)) *
                (tensor(scalar_one(N), LieElement(xp1(0))) +
                 derivative_u(h_log_arg(a11, N + 1)) +
                 derivative_u(alt_arg(a11, N + 1, GenKind::XM, 1, 0, 1)));
       }});

  cat.push_back(
      {"EXEFH", a11,
       "exp(x+[0] u) exp(x-[1] v) = exp(v x-(-uv)) hhat_+(uv) exp(u x+(-uv))",
       8, 5.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp1(0), U(N)) * exp_gen(xm1(1), V(N));
       },
       [=](int N, int) { return exefh_rhs(N); }});

  {
    std::vector<int> rs = {-2, -1, 0, 1, 2};
    cat.push_back(
        {"EXEV", a11,
         "exp(x+[r] u) exp(x-[-r] v) = exp(x-[-r] v/(1+uv)) (1+uv)^(h[0]+r c) exp(x+[r] u/(1+uv))",
         8, 5.0, labels_from(rs, "r"),
         [=](int N, int inst) {
           int r = rs[inst];
           return exp_gen(xp1(r), U(N)) * exp_gen(xm1(-r), V(N));
         },
         [=](int N, int inst) {
           int r = rs[inst];
           ScalarSeries inv = inv_one_plus_uv(N);
           return exp_gen(xm1(-r), V(N) * inv) *
                  one_plus_pow(UV(N), h0_1 + c_1.scaled(Rat(r))) *
                  exp_gen(xp1(r), U(N) * inv);
         }});
  }

  cat.push_back(
      {"EXEFH_T", a11,
       "exp(x+[1] u) exp(x-[2] v) = (T^-1 lambda_3)(exp(v x-(-uv)) hhat_+(uv) exp(u x+(-uv)))",
       8, 5.0, {"r=1,s=2"},
       [=](int N, int) {
         return exp_gen(xp1(1), U(N)) * exp_gen(xm1(2), V(N));
       },
       [=](int N, int) {
         return map_coefficients(morph_shift_inv(),
                                 map_coefficients(morph_scale(3), exefh_rhs(N)));
       }});

  // ---- twisted affine ---------------------------------------------------------

  cat.push_back({"ZKD_HAT", a22,
                 "hhat_+(u) hhat_-(v) = hhat_-(v) (1-uv)^(-4c) (1+uv)^(2c) hhat_+(u)",
                 8, 5.0, {"base"},
                 [=](int N, int) { return zkd_lhs(N, hat_spec(1, 0)); },
                 [=](int N, int) { return zkd_rhs(N, hat_spec(1, 0)); }});

  cat.push_back({"ZKD_TIL", a22,
                 "htil_+(u) htil_-(v) = htil_-(v) (1-uv)^(-4c) (1+uv)^(2c) htil_+(u)",
                 8, 5.0, {"base"},
                 [=](int N, int) { return zkd_lhs(N, tilde_spec(1, 0)); },
                 [=](int N, int) { return zkd_rhs(N, tilde_spec(1, 0)); }});

  {
    std::vector<std::pair<int, int>> ps = {{0, 1}, {0, -1}, {2, 1},
                                           {-2, 1}, {2, -1}, {-2, -1}};
    std::vector<std::string> labels;
    for (auto [a, b] : ps) labels.push_back(fmt::format("r={},s={}", a, b));
    cat.push_back(
        {"ZKP", a22,
         "exp(x+[2r] u) exp(x+[2s+1] v) = exp(x+[2s+1] v) exp(-X+[2r+2s+1] uv) exp(x+[2r] u)",
         8, 5.0, labels,
         [=](int N, int inst) {
           auto [a, b] = ps[inst];
           return exp_gen(xp2(a), U(N)) * exp_gen(xp2(b), V(N));
         },
         [=](int N, int inst) {
           auto [a, b] = ps[inst];
           return exp_gen(xp2(b), V(N)) * exp_gen(Xp2(a + b), -UV(N)) *
                  exp_gen(xp2(a), U(N));
         }});
  }

  {
    std::vector<std::tuple<int, int, int>> ps;
    std::vector<std::string> labels;
    for (int r : {-1, 0, 1})
      for (int k : {1, 2, 3})
        for (int l : {1, 2, 3}) {
          ps.emplace_back(r, k, l);
          labels.push_back(fmt::format("r={},k={},l={}", r, k, l));
        }
    cat.push_back(
        {"XTUZ", a22,
         "(x+[r])^(k) C(h[0],l) = C(h[0]-2k,l) (x+[r])^(k)", 8, 2.0, labels,
         [=](int, int inst) {
           auto [r, k, l] = ps[inst];
           return const_series(divided_power(xp2(r), k) *
                               binomial_element(a22, 1, 0, 0, l));
         },
         [=](int, int inst) {
           auto [r, k, l] = ps[inst];
           return const_series(binomial_element(a22, 1, 0, -2 * k, l) *
                               divided_power(xp2(r), k));
         }});
  }

  cat.push_back(
      {"ZKOPP", a22,
       "exp(x+[0] v) htil_+(u) = htil_+(u) exp(((1-uT^-1)^6 (1+u^2T^-2) (1-u^2T^-2)^-3 x+[0]) v)",
       8, 10.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), V(N)) * imag_exp(a22, N, tilde_spec(1, 0));
       },
       [=](int N, int) {
         return imag_exp(a22, N, tilde_spec(1, 0)) *
                exp_series(tilde_transport_arg(N, 0));
       }});

  // Seven-factor normal forms.  The shift parameter w acts through the
  // twisted loop module; factors on x-type generators carry even powers of w,
  // factors on X-type and Cartan generators carry all powers.

  cat.push_back(
      {"XMG", a22,
       "exp(x+[0] u) exp(X-[1] v) = exp(a-) exp(b-) exp(g-) hhat(4u^2v)^(1/2) exp(g+) exp(b+) exp(a+), "
       "a- = 4uv/(1-16w^2u^4v^2) x-[1], b- = (1+48wu^4v^2)v/(1+16wu^4v^2)^2 X-[1], "
       "g- = -16w^2u^3v^2/(1-16w^2u^4v^2) x-[0], g+ = -4u^3v/(1-16w^2u^4v^2) x+[1], "
       "b+ = (1-16wu^4v^2)u^4v/(1+16wu^4v^2)^2 X+[1], a+ = u/(1-16w^2u^4v^2) x+[0]",
       6, 20.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), U(N)) * exp_gen(Xm2(1), V(N));
       },
       [=](int N, int) {
         WSeries one = w_one(N);
         WSeries inv_m = pow_one_plus(
             -w_mono(N, 4, 2, RatPolyW::w(2, Rat(16))), Rat(-1));
         WSeries inv_p2 =
             pow_one_plus(w_mono(N, 4, 2, RatPolyW::w(1, Rat(16))), Rat(-2));
         WSeries alpha_m = w_mono(N, 1, 1, RatPolyW(Rat(4))) * inv_m;
         WSeries beta_m = (one + w_mono(N, 4, 2, RatPolyW::w(1, Rat(48)))) *
                          w_mono(N, 0, 1, RatPolyW::one()) * inv_p2;
         WSeries gamma_m = w_mono(N, 3, 2, RatPolyW::w(2, Rat(-16))) * inv_m;
         WSeries gamma_p = w_mono(N, 3, 1, RatPolyW(Rat(-4))) * inv_m;
         WSeries beta_p = (one - w_mono(N, 4, 2, RatPolyW::w(1, Rat(16)))) *
                          w_mono(N, 4, 1, RatPolyW::one()) * inv_p2;
         WSeries alpha_p = w_mono(N, 1, 0, RatPolyW::one()) * inv_m;
         ImagSpec eta = half_hat_spec(2, 1);
         eta.scale = Rat(4);
         return exp_disch(alpha_m, w_module_powers(xm2(1), N)) *
                exp_disch(beta_m, w_module_powers(Xm2(1), N)) *
                exp_disch(gamma_m, w_module_powers(xm2(0), N)) *
                imag_exp(a22, N, eta) *
                exp_disch(gamma_p, w_module_powers(xp2(1), N)) *
                exp_disch(beta_p, w_module_powers(Xp2(1), N)) *
                exp_disch(alpha_p, w_module_powers(xp2(0), N));
       }});

  cat.push_back(
      {"X0X1", a22,
       "exp(x+[0] u) exp(x-[1] v) = exp(a-) exp(b-) exp(g-) hd_+(uv) exp(g+) exp(b+) exp(a+), "
       "a+- = (1+w^2u^2v^2)/(1-6w^2u^2v^2+w^4u^4v^4) {u x+[0], v x-[1]}, "
       "b+- = (1-4wu^2v^2-w^2u^4v^4)/(1+6wu^2v^2+w^2u^4v^4)^2 {u^3v X+[1], wuv^3 X-[1]}, "
       "g+- = (-3+w^2u^2v^2)/(1-6w^2u^2v^2+w^4u^4v^4) {u^2v x+[1], w^2uv^2 x-[0]}",
       6, 20.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), U(N)) * exp_gen(xm2(1), V(N));
       },
       [=](int N, int) {
         WSeries one = w_one(N);
         WSeries d2 = one + w_mono(N, 2, 2, RatPolyW::w(2, Rat(-6))) +
                      w_mono(N, 4, 4, RatPolyW::w(4, Rat(1)));
         WSeries inv_d2 = invert_series(d2);
         WSeries p2 = one + w_mono(N, 2, 2, RatPolyW::w(1, Rat(6))) +
                      w_mono(N, 4, 4, RatPolyW::w(2, Rat(1)));
         WSeries inv_p2sq = invert_series(p2 * p2);
         WSeries n_alpha = one + w_mono(N, 2, 2, RatPolyW::w(2, Rat(1)));
         WSeries n_beta = one + w_mono(N, 2, 2, RatPolyW::w(1, Rat(-4))) +
                          w_mono(N, 4, 4, RatPolyW::w(2, Rat(-1)));
         WSeries n_gamma = w_mono(N, 0, 0, RatPolyW(Rat(-3))) +
                           w_mono(N, 2, 2, RatPolyW::w(2, Rat(1)));
         WSeries alpha_p = n_alpha * w_mono(N, 1, 0, RatPolyW::one()) * inv_d2;
         WSeries alpha_m = n_alpha * w_mono(N, 0, 1, RatPolyW::one()) * inv_d2;
         WSeries beta_p = n_beta * w_mono(N, 3, 1, RatPolyW::one()) * inv_p2sq;
         WSeries beta_m = n_beta * w_mono(N, 1, 3, RatPolyW::w(1, Rat(1))) * inv_p2sq;
         WSeries gamma_p = n_gamma * w_mono(N, 2, 1, RatPolyW::one()) * inv_d2;
         WSeries gamma_m = n_gamma * w_mono(N, 1, 2, RatPolyW::w(2, Rat(1))) * inv_d2;
         return exp_disch(alpha_m, w_module_powers(xm2(1), N)) *
                exp_disch(beta_m, w_module_powers(Xm2(1), N)) *
                exp_disch(gamma_m, w_module_powers(xm2(0), N)) *
                imag_exp(a22, N, pell_spec(1, 1)) *
                exp_disch(gamma_p, w_module_powers(xp2(1), N)) *
                exp_disch(beta_p, w_module_powers(Xp2(1), N)) *
                exp_disch(alpha_p, w_module_powers(xp2(0), N));
       }});

  // ---- power-sum transplants ---------------------------------------------

  cat.push_back(
      {"TDMOM2", a11,
       "lambda_2(hhat(-u^2)) = hhat(-u) hhat(u) on the positive imaginary block",
       16, 2.0, {"base"},
       [=](int N, int) {
         GeneratorFamily hat = family_hat();
         SymSeries lhs = sym_series_one(N);
         Rat sgn(1);
         for (int k = 1; 2 * k <= N; ++k) {
           sgn = -sgn;
           lhs.add_to(2 * k, 0, lambda_m(hat.g(k), 2).scaled(sgn));
         }
         return sym_to_uea(a11, lhs);
       },
       [=](int N, int) {
         GeneratorFamily hat = family_hat();
         SymSeries rhs = family_series(hat, N, Rat(-1), 1) *
                         family_series(hat, N, Rat(1), 1);
         return sym_to_uea(a11, rhs);
       }});

  // ---- Cartan binomials and block centralities -----------------------------

  {
    std::vector<std::string> labels;
    std::vector<std::function<std::pair<UEAElement, UEAElement>()>> builders;
    std::vector<LieElement> probes = {LieElement(xp2(0)), LieElement(xm2(1)),
                                      LieElement(Xp2(1)),
                                      LieElement(make_gen(a22, GenKind::H, 2)),
                                      LieElement(make_gen(a22, GenKind::H, -1))};
    std::vector<std::string> probe_names = {"x+[0]", "x-[1]", "X+[1]", "h[2]",
                                            "h[-1]"};
    for (int k : {1, 2, 3})
      for (std::size_t p = 0; p < probes.size(); ++p) {
        labels.push_back(fmt::format("C(c,{}) vs {}", k, probe_names[p]));
        LieElement g = probes[p];
        builders.push_back([=]() {
          UEAElement b = binomial_element(a22, 0, 1, 0, k);
          return std::pair{b * uea_lie(g), uea_lie(g) * b};
        });
      }
    GeneratorFamily tilde = family_tilde();
    for (int k : {1, 2, 3})
      for (int l : {1, 2, 3}) {
        labels.push_back(fmt::format("C(h[0],{}) vs htil_{}", k, l));
        builders.push_back([=]() {
          UEAElement b = binomial_element(a22, 1, 0, 0, k);
          UEAElement t = sym_to_uea(a22, family_tilde().g(l));
          return std::pair{b * t, t * b};
        });
      }
    cat.push_back({"APPA_I", a22,
                   "C(c,k) is central; C(h[0],k) commutes with the positive "
                   "imaginary lattice family",
                   8, 2.0, labels,
                   [=](int, int inst) {
                     return const_series(builders[inst]().first);
                   },
                   [=](int, int inst) {
                     return const_series(builders[inst]().second);
                   }});
  }

  cat.push_back(
      {"APPA_II_M2", a22,
       "lamtil_2(htil(-u^2)) = htil(u) htil(-u) on the positive imaginary block",
       12, 2.0, {"base"},
       [=](int N, int) {
         GeneratorFamily tilde = family_tilde();
         SymSeries lhs = sym_series_one(N);
         Rat sgn(1);
         for (int k = 1; 2 * k <= N; ++k) {
           sgn = -sgn;
           lhs.add_to(2 * k, 0, tilde_lambda_m(tilde.g(k), 2).scaled(sgn));
         }
         return sym_to_uea(a22, lhs);
       },
       [=](int N, int) {
         GeneratorFamily tilde = family_tilde();
         SymSeries rhs = family_series(tilde, N, Rat(1), 1) *
                         family_series(tilde, N, Rat(-1), 1);
         return sym_to_uea(a22, rhs);
       }});

  {
    std::vector<int> ks = {1, 2, 3, 4, 5, 6};
    cat.push_back({"APPA_II_ODD", a22,
                   "for odd m the plain and sign-twisted index dilations agree: "
                   "lambda_3(htil_k) = lamtil_3(htil_k)",
                   8, 1.0, labels_from(ks, "k"),
                   [=](int, int inst) {
                     return const_series(
                         sym_to_uea(a22, lambda_m(family_tilde().g(ks[inst]), 3)));
                   },
                   [=](int, int inst) {
                     return const_series(sym_to_uea(
                         a22, tilde_lambda_m(family_tilde().g(ks[inst]), 3)));
                   }});
  }

  cat.push_back(
      {"APPA_II_EVEN", a22,
       "lambda_2(hhat(u)) = lamtil_2(htil(-u)^-1) on the positive imaginary block",
       10, 2.0, {"base"},
       [=](int N, int) {
         GeneratorFamily hat = family_hat();
         SymSeries lhs = sym_series_one(N);
         for (int k = 1; k <= N; ++k)
           lhs.add_to(k, 0, lambda_m(hat.g(k), 2));
         return sym_to_uea(a22, lhs);
       },
       [=](int N, int) {
         GeneratorFamily tilde = family_tilde();
         SymSeries inv = invert_series(family_series(tilde, N, Rat(-1), 1));
         return sym_to_uea(
             a22, map_sym(inv, [](const SymFunc& f) { return tilde_lambda_m(f, 2); }));
       }});

  cat.push_back(
      {"APPA_II_HAT", a22,
       "hhat(u) = htil(u) lamtil_4(htil(-u^4)^(-1/2)) on the positive imaginary block",
       10, 2.0, {"base"},
       [=](int N, int) {
         return sym_to_uea(a22, family_series(family_hat(), N, Rat(1), 1));
       },
       [=](int N, int) {
         GeneratorFamily tilde = family_tilde();
         SymSeries s4 = family_series(tilde, N, Rat(-1), 4);
         SymSeries half_inv =
             exp_series(log_series(s4).scaled(make_rat(-1, 2)));
         SymSeries l4 = map_sym(
             half_inv, [](const SymFunc& f) { return tilde_lambda_m(f, 4); });
         return sym_to_uea(a22, family_series(tilde, N, Rat(1), 1) * l4);
       }});

  cat.push_back(
      {"APPA_II_D", a22,
       "hd(u) = prod_m lamtil_m(htil(u^m))^(k_m) with the integer exponents "
       "determined by 1+2u-u^2 = (1-2u-u^2)(1+6u^2+u^4) prod (1+u^m)^(4 k_m)",
       12, 3.0, {"base"},
       [=](int N, int) {
         std::vector<SymFunc> d = hd(N);
         SymSeries lhs = sym_series_one(N);
         for (int k = 1; k <= N; ++k) lhs.add_to(k, 0, d[k]);
         return sym_to_uea(a22, lhs);
       },
       [=](int N, int) {
         GeneratorFamily tilde = family_tilde();
         std::vector<long> km = pell_product_exponents(N);
         SymSeries rhs = sym_series_one(N);
         for (int m = 1; m <= N; ++m) {
           if (km[m] == 0) continue;
           SymSeries fac = map_sym(
               family_series(tilde, N, Rat(1), m),
               [m](const SymFunc& f) { return tilde_lambda_m(f, m); });
           rhs = rhs * exp_series(log_series(fac).scaled(Rat(km[m])));
         }
         return sym_to_uea(a22, rhs);
       }});

  cat.push_back({"APPA_III", a22,
                 "htil_+(u) htil_-(v) = htil_-(v) (1-uv)^(-4c) (1+uv)^(2c) htil_+(u)",
                 8, 5.0, {"base"},
                 [=](int N, int) { return zkd_lhs(N, tilde_spec(1, 0)); },
                 [=](int N, int) { return zkd_rhs(N, tilde_spec(1, 0)); }});

  {
    // Instance encoding: kind 0 = plus series, 1 = minus series,
    // 2 = commuting pair (element), 3 = long divided power central in U+.
    struct IvInst {
      int kind;
      int r, s;
    };
    std::vector<IvInst> is;
    std::vector<std::string> labels;
    for (auto [r, s] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, -1}, {-1, 2}, {-2, 1}}) {
      is.push_back({0, r, s});
      labels.push_back(fmt::format("plus r={},s={}", r, s));
    }
    for (auto [r, s] : {std::pair{0, 1}, {1, 2}, {-1, 0}}) {
      is.push_back({1, r, s});
      labels.push_back(fmt::format("minus r={},s={}", r, s));
    }
    for (auto [r, s] : {std::pair{0, 2}, {1, 3}, {-1, 1}}) {
      is.push_back({2, r, s});
      labels.push_back(fmt::format("commute r={},s={}", r, s));
    }
    for (int p : {0, 2, -2}) {
      is.push_back({3, p, 0});
      labels.push_back(fmt::format("central probe x+[{}]", p));
    }
    cat.push_back(
        {"APPA_IV", a22,
         "r+s odd: exp(x[r] u) exp(x[s] v) = exp(x[s] v) exp(sign X[r+s] uv) exp(x[r] u); "
         "r+s even: [x[r],x[s]] = 0; (X+[1])^(2) commutes inside the raising block",
         8, 5.0, labels,
         [=](int N, int inst) {
           auto [kind, r, s] = is[inst];
           switch (kind) {
             case 0:
               return exp_gen(xp2(r), U(N)) * exp_gen(xp2(s), V(N));
             case 1:
               return exp_gen(xm2(r), U(N)) * exp_gen(xm2(s), V(N));
             case 2:
               return const_series(uea_gen(xp2(r)) * uea_gen(xp2(s)));
             default:
               return const_series(divided_power(Xp2(1), 2) * uea_gen(xp2(r)));
           }
         },
         [=](int N, int inst) {
           auto [kind, r, s] = is[inst];
           switch (kind) {
             case 0: {
               Rat sign(s % 2 == 0 ? 1 : -1);
               return exp_gen(xp2(s), V(N)) *
                      exp_gen(Xp2(r + s), UV(N).scaled(sign)) *
                      exp_gen(xp2(r), U(N));
             }
             case 1: {
               Rat sign(r % 2 == 0 ? 1 : -1);
               return exp_gen(xm2(s), V(N)) *
                      exp_gen(Xm2(r + s), UV(N).scaled(sign)) *
                      exp_gen(xm2(r), U(N));
             }
             case 2:
               return const_series(uea_gen(xp2(s)) * uea_gen(xp2(r)));
             default:
               return const_series(uea_gen(xp2(r)) * divided_power(Xp2(1), 2));
           }
         }});
  }

  {
    // displays: 0 = X+ against C(h0,l); 1 = x- mirror; 2 = X- mirror.
    struct VInst {
      int display, idx, k, l;
    };
    std::vector<VInst> is;
    std::vector<std::string> labels;
    for (int display : {0, 1, 2})
      for (int idx : {0, 1})
        for (int k : {1, 2})
          for (int l : {1, 2}) {
            int gi = display == 1 ? idx : 2 * idx - 1;  // x-: 0,1; X: -1,1
            is.push_back({display, gi, k, l});
            const char* names[] = {"X+", "x-", "X-"};
            labels.push_back(
                fmt::format("{}[{}] k={} l={}", names[display], gi, k, l));
          }
    cat.push_back(
        {"APPA_V", a22,
         "(X+[a])^(k) C(h[0],l) = C(h[0]-4k,l) (X+[a])^(k); "
         "C(h[0],l) (x-[r])^(k) = (x-[r])^(k) C(h[0]-2k,l); "
         "C(h[0],l) (X-[a])^(k) = (X-[a])^(k) C(h[0]-4k,l)",
         8, 3.0, labels,
         [=](int, int inst) {
           auto [d, i, k, l] = is[inst];
           switch (d) {
             case 0:
               return const_series(divided_power(Xp2(i), k) *
                                   binomial_element(a22, 1, 0, 0, l));
             case 1:
               return const_series(binomial_element(a22, 1, 0, 0, l) *
                                   divided_power(xm2(i), k));
             default:
               return const_series(binomial_element(a22, 1, 0, 0, l) *
                                   divided_power(Xm2(i), k));
           }
         },
         [=](int, int inst) {
           auto [d, i, k, l] = is[inst];
           switch (d) {
             case 0:
               return const_series(binomial_element(a22, 1, 0, -4 * k, l) *
                                   divided_power(Xp2(i), k));
             case 1:
               return const_series(divided_power(xm2(i), k) *
                                   binomial_element(a22, 1, 0, -2 * k, l));
             default:
               return const_series(divided_power(Xm2(i), k) *
                                   binomial_element(a22, 1, 0, -4 * k, l));
           }
         }});
  }

  {
    // kind 0: long generators, operator (1-u^2 T^-1)^2;
    // kind 1: short generators, operator (1-uT^-1)^6 (1+u^2T^-2) (1-u^2T^-2)^-3.
    struct ViInst {
      int kind, idx;
    };
    std::vector<ViInst> is = {{0, -1}, {0, 1}, {1, -1}, {1, 1}};
    std::vector<std::string> labels = {"X+[-1]", "X+[1]", "x+[-1]", "x+[1]"};
    cat.push_back(
        {"APPA_VI", a22,
         "exp(X+[a] v) htil_+(u) = htil_+(u) exp(((1-u^2T^-1)^2 X+[a]) v); "
         "exp(x+[r] v) htil_+(u) = htil_+(u) exp(((1-uT^-1)^6 (1+u^2T^-2) (1-u^2T^-2)^-3 x+[r]) v)",
         6, 10.0, labels,
         [=](int N, int inst) {
           auto [kind, idx] = is[inst];
           Generator g = kind == 0 ? Xp2(idx) : xp2(idx);
           return exp_gen(g, V(N)) * imag_exp(a22, N, tilde_spec(1, 0));
         },
         [=](int N, int inst) {
           auto [kind, idx] = is[inst];
           UEASeries ht = imag_exp(a22, N, tilde_spec(1, 0));
           if (kind == 0) {
             WSeries opw = w_one(N) - w_mono(N, 2, 0, RatPolyW::w(1));
             return ht * exp_series(discharge_w(
                             opw * opw * w_mono(N, 0, 1, RatPolyW::one()),
                             shift_powers(morph_shift_inv(), Xp2(idx), N)));
           }
           return ht * exp_series(tilde_transport_arg(N, idx));
         }});
  }

  {
    // kind 0: short pair (r, -r); kind 1: long pair (a, -a).
    struct ViiInst {
      int kind, idx;
    };
    std::vector<ViiInst> is;
    std::vector<std::string> labels;
    for (int r : {-2, -1, 0, 1, 2}) {
      is.push_back({0, r});
      labels.push_back(fmt::format("short r={}", r));
    }
    for (int a : {-1, 1, 3}) {
      is.push_back({1, a});
      labels.push_back(fmt::format("long a={}", a));
    }
    cat.push_back(
        {"APPA_VII_A", a22,
         "exp(x+[r] u) exp(x-[-r] v) = exp(x-[-r] v/(1+uv)) (1+uv)^(h[0]+rc) exp(x+[r] u/(1+uv)); "
         "exp(X+[a] u) exp(X-[-a] v) = exp(X-[-a] v/(1+16uv)) (1+16uv)^(h[0]/2+ac/4) exp(X+[a] u/(1+16uv))",
         8, 10.0, labels,
         [=](int N, int inst) {
           auto [kind, idx] = is[inst];
           if (kind == 0)
             return exp_gen(xp2(idx), U(N)) * exp_gen(xm2(-idx), V(N));
           return exp_gen(Xp2(idx), U(N)) * exp_gen(Xm2(-idx), V(N));
         },
         [=](int N, int inst) {
           auto [kind, idx] = is[inst];
           if (kind == 0) {
             ScalarSeries inv = inv_one_plus_uv(N);
             return exp_gen(xm2(-idx), V(N) * inv) *
                    one_plus_pow(UV(N), h0_2 + c_2.scaled(Rat(idx))) *
                    exp_gen(xp2(idx), U(N) * inv);
           }
           ScalarSeries s16 = UV(N).scaled(Rat(16));
           ScalarSeries inv = pow_one_plus(s16, Rat(-1));
           return exp_gen(Xm2(-idx), V(N) * inv) *
                  one_plus_pow(s16, h0_2.scaled(make_rat(1, 2)) +
                                        c_2.scaled(make_rat(idx, 4))) *
                  exp_gen(Xp2(idx), U(N) * inv);
         }});
  }

  {
    // kind 0: short pair, r+s even nonzero; kind 1: long pair indices
    // (2r+1, 2s-1) with r+s nonzero.
    struct ViibInst {
      int kind, r, s;
    };
    std::vector<ViibInst> is;
    std::vector<std::string> labels;
    for (auto [r, s] :
         {std::pair{1, 1}, {2, 0}, {0, 2}, {2, 2}, {-1, -1}, {-1, 3}}) {
      is.push_back({0, r, s});
      labels.push_back(fmt::format("short r={},s={}", r, s));
    }
    for (auto [r, s] : {std::pair{0, 1}, {1, 1}, {0, 2}, {1, 0}}) {
      is.push_back({1, r, s});
      labels.push_back(fmt::format("long r={},s={}", r, s));
    }
    cat.push_back(
        {"APPA_VII_B", a22,
         "r+s even nonzero: exp(x+[r] u) exp(x-[s] v) = exp((1/(1+uv T^(r+s)) x-[s]) v) "
         "lambda_(r+s)(hhat(uv)) exp((1/(1+uv T^-(r+s)) x+[r]) u); long pairs: "
         "exp(X+[2r+1] u) exp(X-[2s-1] v) = exp(sum_k (-16uv)^k X-[2s-1+2k(r+s)] v) "
         "lambda_(2r+2s)(hhat(16uv)^(1/2)) exp(sum_k (-16uv)^k X+[2r+1+2k(r+s)] u)",
         6, 15.0, labels,
         [=](int N, int inst) {
           auto [kind, r, s] = is[inst];
           if (kind == 0)
             return exp_gen(xp2(r), U(N)) * exp_gen(xm2(s), V(N));
           return exp_gen(Xp2(2 * r + 1), U(N)) * exp_gen(Xm2(2 * s - 1), V(N));
         },
         [=](int N, int inst) {
           auto [kind, r, s] = is[inst];
           int m = r + s;
           if (kind == 0) {
             WSeries geo = pow_one_plus(w_mono(N, 1, 1, RatPolyW::w(1)), Rat(-1));
             Morphism Tm = m > 0 ? morph_shift() : morph_shift_inv();
             Morphism Tmi = m > 0 ? morph_shift_inv() : morph_shift();
             int rep = m > 0 ? m : -m;
             UEASeries f1 = exp_series(
                 discharge_w(geo * w_mono(N, 0, 1, RatPolyW::one()),
                             shift_powers(Tm, xm2(s), N, rep)));
             ImagSpec mid = hat_spec(1, 1);
             mid.step = m;
             UEASeries f3 = exp_series(
                 discharge_w(geo * w_mono(N, 1, 0, RatPolyW::one()),
                             shift_powers(Tmi, xp2(r), N, rep)));
             return f1 * imag_exp(a22, N, mid) * f3;
           }
           UEASeries arg1(N, uea_one());
           UEASeries arg3(N, uea_one());
           Rat c(1);
           for (int k = 0; 2 * k + 1 <= N; ++k) {
             if (k > 0) c = c * Rat(-16);
             arg1.add_to(k, k + 1, uea_gen(Xm2(2 * s - 1 + 2 * k * m)).scaled(c));
             arg3.add_to(k + 1, k, uea_gen(Xp2(2 * r + 1 + 2 * k * m)).scaled(c));
           }
           ImagSpec mid = half_hat_spec(1, 1);
           mid.step = 2 * m;
           mid.scale = Rat(16);
           return exp_series(arg1) * imag_exp(a22, N, mid) * exp_series(arg3);
         }});
  }

  cat.push_back(
      {"APPA_VII_C", a22,
       "exp(x+[0] u) exp(X-[1] v) = exp(4uv/(1+4wu^2v) x-[1]) exp(v/(1+16wu^4v^2) X-[1]) "
       "hhat(4u^2v)^(1/2) exp(u/(1+4wu^2v) x+[0]) exp(-u^4v/(1+16wu^4v^2) X+[1]), "
       "w = T on the lowering side and T^-1 on the raising side",
       6, 15.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), U(N)) * exp_gen(Xm2(1), V(N));
       },
       [=](int N, int) {
         WSeries g4 =
             pow_one_plus(w_mono(N, 2, 1, RatPolyW::w(1, Rat(4))), Rat(-1));
         WSeries g16 =
             pow_one_plus(w_mono(N, 4, 2, RatPolyW::w(1, Rat(16))), Rat(-1));
         UEASeries f1 = exp_series(
             discharge_w(g4 * w_mono(N, 1, 1, RatPolyW(Rat(4))),
                         shift_powers(morph_shift(), xm2(1), N)));
         UEASeries f2 = exp_series(
             discharge_w(g16 * w_mono(N, 0, 1, RatPolyW::one()),
                         shift_powers(morph_shift(), Xm2(1), N)));
         ImagSpec mid = half_hat_spec(2, 1);
         mid.scale = Rat(4);
         UEASeries f4 = exp_series(
             discharge_w(g4 * w_mono(N, 1, 0, RatPolyW::one()),
                         shift_powers(morph_shift_inv(), xp2(0), N)));
         UEASeries f5 = exp_series(
             discharge_w(g16 * w_mono(N, 4, 1, RatPolyW(Rat(-1))),
                         shift_powers(morph_shift_inv(), Xp2(1), N)));
         return f1 * f2 * imag_exp(a22, N, mid) * f4 * f5;
       }});

  cat.push_back(
      {"APPA_VII_D", a22,
       "exp(x+[0] u) exp(x-[1] v) = exp((1-wuv)/(1+2wuv-w^2u^2v^2) x-[1] v) "
       "exp(uv^3/(2(1+6wu^2v^2+w^2u^4v^4)) X-[3]) hd_+(uv) "
       "exp((1-wuv)/(1+2wuv-w^2u^2v^2) x+[0] u) "
       "exp(-u^3v/(2(1+6wu^2v^2+w^2u^4v^4)) X+[1]), "
       "w = T on the lowering side and T^-1 on the raising side",
       6, 15.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), U(N)) * exp_gen(xm2(1), V(N));
       },
       [=](int N, int) {
         WSeries one = w_one(N);
         WSeries pell_den = one + w_mono(N, 1, 1, RatPolyW::w(1, Rat(2))) -
                            w_mono(N, 2, 2, RatPolyW::w(2, Rat(1)));
         WSeries x_num =
             (one - w_mono(N, 1, 1, RatPolyW::w(1))) * invert_series(pell_den);
         WSeries X_den = one + w_mono(N, 2, 2, RatPolyW::w(1, Rat(6))) +
                         w_mono(N, 4, 4, RatPolyW::w(2, Rat(1)));
         WSeries X_fac = invert_series(X_den);
         UEASeries f1 = exp_series(
             discharge_w(x_num * w_mono(N, 0, 1, RatPolyW::one()),
                         shift_powers(morph_shift(), xm2(1), N)));
         UEASeries f2 = exp_series(
             discharge_w(X_fac * w_mono(N, 1, 3, RatPolyW(make_rat(1, 2))),
                         shift_powers(morph_shift(), Xm2(3), N)));
         UEASeries f4 = exp_series(
             discharge_w(x_num * w_mono(N, 1, 0, RatPolyW::one()),
                         shift_powers(morph_shift_inv(), xp2(0), N)));
         UEASeries f5 = exp_series(
             discharge_w(X_fac * w_mono(N, 3, 1, RatPolyW(make_rat(-1, 2))),
                         shift_powers(morph_shift_inv(), Xp2(1), N)));
         return f1 * f2 * imag_exp(a22, N, pell_spec(1, 1)) * f4 * f5;
       }});

  // ---- halved-generator lattice --------------------------------------------

  cat.push_back(
      {"MITZ_I", a22,
       "hhat_+(u)^(1/2) hhat_-(v)^(1/2) = hhat_-(v)^(1/2) (1-uv)^(-c) (1+uv)^(c/2) hhat_+(u)^(1/2)",
       8, 5.0, {"base"},
       [=](int N, int) {
         return imag_exp(a22, N, half_hat_spec(1, 0, 1)) *
                imag_exp(a22, N, half_hat_spec(0, 1, -1));
       },
       [=](int N, int) {
         return imag_exp(a22, N, half_hat_spec(0, 1, -1)) *
                one_plus_pow(-UV(N), c_2.scaled(Rat(-1))) *
                one_plus_pow(UV(N), c_2.scaled(make_rat(1, 2))) *
                imag_exp(a22, N, half_hat_spec(1, 0, 1));
       }});

  {
    // kind 0: element binomial shift; kind 1: series transport; kind 2:
    // index negation exchanging the halved hat sides.
    struct MiInst {
      int kind, r, k, l;
    };
    std::vector<MiInst> is;
    std::vector<std::string> labels;
    for (int r : {0, 1})
      for (int k : {1, 2})
        for (int l : {1, 2}) {
          is.push_back({0, r, k, l});
          labels.push_back(fmt::format("binomial r={},k={},l={}", r, k, l));
        }
    for (int r : {0, 1}) {
      is.push_back({1, r, 0, 0});
      labels.push_back(fmt::format("series r={}", r));
    }
    is.push_back({2, 0, 0, 0});
    labels.push_back("index negation");
    LieElement cartan_half = h0_2.scaled(make_rat(1, 2)) - c_2.scaled(make_rat(1, 4));
    cat.push_back(
        {"MITZ_IV", a22,
         "(x+[r])^(k) C(h[0]/2-c/4,l) = C(h[0]/2-c/4-k,l) (x+[r])^(k); "
         "exp(x+[r] v) hhat_+(u)^(1/2) = hhat_+(u)^(1/2) exp(((1-uT^-1)(1+uT^-1)^-2 x+[r]) v); "
         "lambda_-1 maps hhat_+(u)^(1/2) to hhat_-(u)^(1/2)",
         8, 10.0, labels,
         [=](int N, int inst) {
           auto [kind, r, k, l] = is[inst];
           switch (kind) {
             case 0:
               return const_series(divided_power(xp2(r), k) *
                                   binomial_of(cartan_half, Rat(0), l));
             case 1:
               return exp_gen(xp2(r), V(N)) *
                      imag_exp(a22, N, half_hat_spec(1, 0));
             default:
               return map_coefficients(morph_scale(-1),
                                       imag_exp(a22, N, half_hat_spec(1, 0, 1)));
           }
         },
         [=](int N, int inst) {
           auto [kind, r, k, l] = is[inst];
           switch (kind) {
             case 0:
               return const_series(binomial_of(cartan_half, Rat(-k), l) *
                                   divided_power(xp2(r), k));
             case 1: {
               UEASeries hh = imag_exp(a22, N, half_hat_spec(1, 0));
               WSeries num = w_one(N) - w_mono(N, 1, 0, RatPolyW::w(1));
               WSeries den =
                   pow_one_plus(w_mono(N, 1, 0, RatPolyW::w(1)), Rat(-2));
               return hh * exp_series(discharge_w(
                               num * den * w_mono(N, 0, 1, RatPolyW::one()),
                               shift_powers(morph_shift_inv(), xp2(r), N)));
             }
             default:
               return imag_exp(a22, N, half_hat_spec(1, 0, -1));
           }
         }});
  }

  cat.push_back(
      {"MITZ_V", a22,
       "exp(x+[0] u) exp(y-[1] v), y = X/4: seven-factor normal form with "
       "a- = uv/(1-w^2u^4v^2) x-[1], b- = (1+3wu^4v^2)v/(1+wu^4v^2)^2 y-[1], "
       "g- = -w^2u^3v^2/(1-w^2u^4v^2) x-[0], middle hhat(u^2v)^(1/2), "
       "g+ = -u^3v/(1-w^2u^4v^2) x+[1], b+ = (1-wu^4v^2)u^4v/(1+wu^4v^2)^2 y+[1], "
       "a+ = u/(1-w^2u^4v^2) x+[0]",
       8, 20.0, {"base"},
       [=](int N, int) {
         return exp_gen(xp2(0), U(N)) *
                exp_series(tensor(V(N), LieElement(Xm2(1)).scaled(make_rat(1, 4))));
       },
       [=](int N, int) {
         WSeries one = w_one(N);
         WSeries inv_m =
             pow_one_plus(-w_mono(N, 4, 2, RatPolyW::w(2, Rat(1))), Rat(-1));
         WSeries inv_p2 =
             pow_one_plus(w_mono(N, 4, 2, RatPolyW::w(1, Rat(1))), Rat(-2));
         WSeries alpha_m = w_mono(N, 1, 1, RatPolyW::one()) * inv_m;
         WSeries beta_m = (one + w_mono(N, 4, 2, RatPolyW::w(1, Rat(3)))) *
                          w_mono(N, 0, 1, RatPolyW(make_rat(1, 4))) * inv_p2;
         WSeries gamma_m = w_mono(N, 3, 2, RatPolyW::w(2, Rat(-1))) * inv_m;
         WSeries gamma_p = w_mono(N, 3, 1, RatPolyW(Rat(-1))) * inv_m;
         WSeries beta_p = (one - w_mono(N, 4, 2, RatPolyW::w(1, Rat(1)))) *
                          w_mono(N, 4, 1, RatPolyW(make_rat(1, 4))) * inv_p2;
         WSeries alpha_p = w_mono(N, 1, 0, RatPolyW::one()) * inv_m;
         return exp_disch(alpha_m, w_module_powers(xm2(1), N)) *
                exp_disch(beta_m, w_module_powers(Xm2(1), N)) *
                exp_disch(gamma_m, w_module_powers(xm2(0), N)) *
                imag_exp(a22, N, half_hat_spec(2, 1)) *
                exp_disch(gamma_p, w_module_powers(xp2(1), N)) *
                exp_disch(beta_p, w_module_powers(Xp2(1), N)) *
                exp_disch(alpha_p, w_module_powers(xp2(0), N));
       }});

  return cat;
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> cat = make_catalog();
  return cat;
}

const IdentityEntry& find_entry(const std::string& tag) {
  for (const auto& e : catalog())
    if (e.tag == tag) return e;
  throw std::invalid_argument(fmt::format("unknown identity tag: {}", tag));
}

}  // namespace zform
