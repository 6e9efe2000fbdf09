#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fmt/format.h>

#include <vector>

#include "zform/liealg.hpp"

using namespace zform;

namespace {

const AlgebraId kSl2 = alg_sl2();
const AlgebraId kA11 = alg_a11();
const AlgebraId kA22 = alg_a22();

Generator xp(const AlgebraId& a, int r) { return make_gen(a, GenKind::XP, r); }
Generator xm(const AlgebraId& a, int r) { return make_gen(a, GenKind::XM, r); }
Generator Xp(int r) { return make_gen(kA22, GenKind::XXP, r); }
Generator Xm(int r) { return make_gen(kA22, GenKind::XXM, r); }
Generator hh(const AlgebraId& a, int r) { return make_gen(a, GenKind::H, r); }
Generator cc(const AlgebraId& a) { return make_gen(a, GenKind::C, 0); }

LieElement lie(const Generator& g, Rat c = Rat(1)) {
  return LieElement(g, std::move(c));
}

// Compose left-to-right: apply ms[0] first.
LieElement apply_chain(const std::vector<Morphism>& ms, const Generator& g) {
  LieElement e(g);
  for (const Morphism& m : ms) e = apply_symmetry(m, e);
  return e;
}

}  // namespace

TEST_CASE("generator admissibility and rendering") {
  CHECK(render_generator(make_gen(kSl2, GenKind::E, 0)) == "e");
  CHECK(render_generator(make_gen(kSl2, GenKind::F, 0)) == "f");
  CHECK(render_generator(make_gen(kSl2, GenKind::H0, 0)) == "h");
  CHECK(render_generator(xp(kA22, -3)) == "x+[-3]");
  CHECK(render_generator(xm(kA11, 2)) == "x-[2]");
  CHECK(render_generator(Xp(5)) == "X+[5]");
  CHECK(render_generator(Xm(-1)) == "X-[-1]");
  CHECK(render_generator(hh(kA22, 0)) == "h[0]");
  CHECK(render_generator(cc(kA11)) == "c");

  CHECK_THROWS_AS(make_gen(kSl2, GenKind::E, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kSl2, GenKind::XP, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kA11, GenKind::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kA11, GenKind::XXP, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kA22, GenKind::XXP, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kA22, GenKind::XXM, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_gen(kA22, GenKind::E, 0), std::invalid_argument);

  AlgebraId wp = alg_weight_pair(2);
  CHECK(render_generator(make_gen(wp, GenKind::H0, 0)) == "h");
  CHECK(render_generator(make_gen(wp, GenKind::XP, 0)) == "x");
  CHECK_THROWS_AS(make_gen(wp, GenKind::XM, 0), std::invalid_argument);

  AlgebraId cp = alg_central_pair(3);
  CHECK(render_generator(make_gen(cp, GenKind::XP, 0)) == "x");
  CHECK(render_generator(make_gen(cp, GenKind::C, 0)) == "z");
  CHECK(render_generator(make_gen(cp, GenKind::XM, 0)) == "y");
  CHECK_THROWS_AS(make_gen(cp, GenKind::H, 0), std::invalid_argument);

  AlgebraId hb = alg_heisenberg(2, 0);
  CHECK(render_generator(make_gen(hb, GenKind::H, -4)) == "h[-4]");
  CHECK_THROWS_AS(make_gen(hb, GenKind::XP, 0), std::invalid_argument);

  AlgebraId es = alg_eigen_shift(1);
  CHECK(render_generator(make_gen(es, GenKind::H, 2)) == "h[2]");
  CHECK(render_generator(make_gen(es, GenKind::XP, -1)) == "x[-1]");
  CHECK_THROWS_AS(make_gen(es, GenKind::H, 0), std::invalid_argument);
}

TEST_CASE("lie element arithmetic and rendering") {
  LieElement z;
  CHECK(z.is_zero());
  CHECK(render_lie(z) == "0");

  LieElement a = lie(xp(kA22, 0)) + lie(Xp(1), Rat(-2));
  CHECK(render_lie(a) == "x+[0] - 2*X+[1]");
  CHECK(a.coeff(Xp(1)) == Rat(-2));
  CHECK(a.coeff(Xm(1)) == 0);
  CHECK((a - a).is_zero());
  CHECK(a.scaled(Rat(0)).is_zero());
  CHECK(a.scaled(Rat(-1)) + a == LieElement{});
}

TEST_CASE("bracket tables: known values") {
  // sl2
  CHECK(bracket(hh(kA11, 0), xp(kA11, 0)) == lie(xp(kA11, 0), Rat(2)));
  Generator e = make_gen(kSl2, GenKind::E, 0), f = make_gen(kSl2, GenKind::F, 0),
            h = make_gen(kSl2, GenKind::H0, 0);
  CHECK(bracket(h, e) == lie(e, Rat(2)));
  CHECK(bracket(h, f) == lie(f, Rat(-2)));
  CHECK(bracket(e, f) == lie(h));
  CHECK(bracket(f, e) == lie(h, Rat(-1)));
  CHECK(bracket(e, e).is_zero());

  // a1_1
  CHECK(bracket(hh(kA11, 1), hh(kA11, -1)) == lie(cc(kA11), Rat(2)));
  CHECK(bracket(hh(kA11, 2), hh(kA11, -2)) == lie(cc(kA11), Rat(4)));
  CHECK(bracket(hh(kA11, 1), hh(kA11, 2)).is_zero());
  CHECK(bracket(hh(kA11, 3), xm(kA11, -1)) == lie(xm(kA11, 2), Rat(-2)));
  CHECK(bracket(xp(kA11, 1), xm(kA11, -1)) ==
        lie(hh(kA11, 0)) + lie(cc(kA11)));
  CHECK(bracket(xp(kA11, 2), xm(kA11, 1)) == lie(hh(kA11, 3)));
  CHECK(bracket(xp(kA11, 1), xp(kA11, 2)).is_zero());
  CHECK(bracket(cc(kA11), xp(kA11, 5)).is_zero());

  // a2_2 short-short
  CHECK(bracket(xp(kA22, 0), xp(kA22, 1)) == lie(Xp(1), Rat(-1)));
  CHECK(bracket(xp(kA22, 1), xp(kA22, 0)) == lie(Xp(1)));
  CHECK(bracket(xp(kA22, 2), xp(kA22, 1)) == lie(Xp(3), Rat(-1)));
  CHECK(bracket(xp(kA22, 1), xp(kA22, 3)).is_zero());
  CHECK(bracket(xm(kA22, 0), xm(kA22, 1)) == lie(Xm(1)));
  CHECK(bracket(xp(kA22, 2), xm(kA22, -2)) ==
        lie(hh(kA22, 0)) + lie(cc(kA22), Rat(2)));
  CHECK(bracket(xp(kA22, 1), xm(kA22, 2)) == lie(hh(kA22, 3)));

  // a2_2 Cartan actions: weight 6 on odd rows, 2 on even rows
  CHECK(bracket(hh(kA22, 1), xp(kA22, 0)) == lie(xp(kA22, 1), Rat(6)));
  CHECK(bracket(hh(kA22, 2), xp(kA22, 0)) == lie(xp(kA22, 2), Rat(2)));
  CHECK(bracket(hh(kA22, -4), xm(kA22, 1)) == lie(xm(kA22, -3), Rat(-2)));
  CHECK(bracket(hh(kA22, 1), hh(kA22, -1)) == lie(cc(kA22), Rat(6)));
  CHECK(bracket(hh(kA22, 2), hh(kA22, -2)) == lie(cc(kA22), Rat(4)));
  CHECK(bracket(hh(kA22, 3), hh(kA22, -3)) == lie(cc(kA22), Rat(18)));

  // a2_2 long generators
  CHECK(bracket(hh(kA22, 2), Xp(1)) == lie(Xp(3), Rat(4)));
  CHECK(bracket(hh(kA22, 1), Xp(1)).is_zero());
  CHECK(bracket(hh(kA22, 0), Xm(3)) == lie(Xm(3), Rat(-4)));
  CHECK(bracket(xp(kA22, 0), Xp(1)).is_zero());
  CHECK(bracket(Xp(1), Xp(3)).is_zero());
  CHECK(bracket(xp(kA22, 0), Xm(1)) == lie(xm(kA22, 1), Rat(4)));
  CHECK(bracket(xp(kA22, 1), Xm(1)) == lie(xm(kA22, 2), Rat(-4)));
  CHECK(bracket(xm(kA22, 1), Xp(1)) == lie(xp(kA22, 2), Rat(4)));
  CHECK(bracket(Xp(1), Xm(-1)) == lie(hh(kA22, 0), Rat(8)) + lie(cc(kA22), Rat(4)));
  CHECK(bracket(Xp(3), Xm(-1)) == lie(hh(kA22, 2), Rat(8)));

  // mixed algebras rejected
  CHECK_THROWS_AS(bracket(xp(kA11, 0), xp(kA22, 0)), std::invalid_argument);
}

TEST_CASE("bracket tables: model algebras") {
  AlgebraId wp = alg_weight_pair(-2);
  CHECK(bracket(make_gen(wp, GenKind::H0, 0), make_gen(wp, GenKind::XP, 0)) ==
        lie(make_gen(wp, GenKind::XP, 0), Rat(-2)));

  AlgebraId cp = alg_central_pair(3);
  Generator x = make_gen(cp, GenKind::XP, 0), y = make_gen(cp, GenKind::XM, 0),
            zc = make_gen(cp, GenKind::C, 0);
  CHECK(bracket(x, y) == lie(zc, Rat(3)));
  CHECK(bracket(x, zc).is_zero());
  CHECK(bracket(y, zc).is_zero());

  // Heisenberg parameter pairs matching the two main algebras' imaginary parts
  AlgebraId h20 = alg_heisenberg(2, 0);
  CHECK(bracket(make_gen(h20, GenKind::H, 3), make_gen(h20, GenKind::H, -3)) ==
        lie(make_gen(h20, GenKind::C, 0), Rat(6)));
  AlgebraId h4m2 = alg_heisenberg(4, -2);
  CHECK(bracket(make_gen(h4m2, GenKind::H, 1), make_gen(h4m2, GenKind::H, -1)) ==
        lie(make_gen(h4m2, GenKind::C, 0), Rat(6)));
  CHECK(bracket(make_gen(h4m2, GenKind::H, 2), make_gen(h4m2, GenKind::H, -2)) ==
        lie(make_gen(h4m2, GenKind::C, 0), Rat(4)));
  CHECK(is_central(make_gen(h4m2, GenKind::H, 0)));

  // EigenShift variant 0: constant weight 2; variant 1: 6 / 2 / -2 pattern
  AlgebraId e0 = alg_eigen_shift(0), e1 = alg_eigen_shift(1);
  for (int r = 1; r <= 8; ++r) {
    CHECK(bracket(make_gen(e0, GenKind::H, r), make_gen(e0, GenKind::XP, 0)) ==
          lie(make_gen(e0, GenKind::XP, r), Rat(2)));
    long w = (r % 2 != 0) ? 6 : (r % 4 == 0 ? -2 : 2);
    CHECK(bracket(make_gen(e1, GenKind::H, r), make_gen(e1, GenKind::XP, -1)) ==
          lie(make_gen(e1, GenKind::XP, r - 1), Rat(w)));
  }
  CHECK(bracket(make_gen(e1, GenKind::H, 1), make_gen(e1, GenKind::H, 2))
            .is_zero());
}

TEST_CASE("antisymmetry over a window") {
  std::vector<AlgebraId> algebras = {
      kSl2,
      kA11,
      kA22,
      alg_weight_pair(2),
      alg_central_pair(3),
      alg_heisenberg(2, 0),
      alg_heisenberg(4, -2),
      alg_eigen_shift(0),
      alg_eigen_shift(1),
  };
  for (const AlgebraId& alg : algebras) {
    auto gens = generators_in_window(alg, -4, 4);
    for (const Generator& a : gens)
      for (const Generator& b : gens) {
        LieElement lhs = bracket(a, b);
        LieElement rhs = bracket(b, a).scaled(Rat(-1));
        CHECK_MESSAGE(lhs == rhs, fmt::format("[{}, {}] in {}",
                                              render_generator(a),
                                              render_generator(b), alg.name()));
      }
  }
}

TEST_CASE("jacobi identity over a window") {
  CHECK(check_jacobi(kSl2, 0, 0).ok);
  CHECK(check_jacobi(kA11, -3, 3).ok);
  CHECK(check_jacobi(kA22, -3, 3).ok);
  CHECK(check_jacobi(alg_weight_pair(-2), 0, 0).ok);
  CHECK(check_jacobi(alg_central_pair(3), 0, 0).ok);
  CHECK(check_jacobi(alg_heisenberg(2, 0), -4, 4).ok);
  CHECK(check_jacobi(alg_heisenberg(4, -2), -4, 4).ok);
  CHECK(check_jacobi(alg_eigen_shift(0), -3, 4).ok);
  CHECK(check_jacobi(alg_eigen_shift(1), -3, 4).ok);
}

TEST_CASE("bracket mutations break the jacobi identity or a known value") {
  // Baseline sanity, then each deliberate table change must be observable.
  REQUIRE(active_bracket_mutation() == 0);
  std::uint64_t ep = bracket_table_epoch();

  set_bracket_mutation(1);
  CHECK(bracket_table_epoch() == ep + 1);
  CHECK(bracket(make_gen(kSl2, GenKind::E, 0), make_gen(kSl2, GenKind::F, 0)) ==
        lie(make_gen(kSl2, GenKind::H0, 0), Rat(2)));

  set_bracket_mutation(2);
  CHECK_FALSE(check_jacobi(kA11, -2, 2).ok);

  set_bracket_mutation(3);
  CHECK(bracket(xp(kA11, 2), xm(kA11, -2)) ==
        lie(hh(kA11, 0)) + lie(cc(kA11), Rat(3)));

  set_bracket_mutation(4);
  CHECK_FALSE(check_jacobi(kA22, -2, 2).ok);

  set_bracket_mutation(5);
  CHECK_FALSE(check_jacobi(kA22, -2, 2).ok);

  set_bracket_mutation(0);
  CHECK(check_jacobi(kA11, -2, 2).ok);
  CHECK(check_jacobi(kA22, -2, 2).ok);
  CHECK_THROWS_AS(set_bracket_mutation(6), std::invalid_argument);
  CHECK_THROWS_AS(set_bracket_mutation(-1), std::invalid_argument);
}

TEST_CASE("symmetries: images of generators") {
  Morphism sg = morph_sigma(), om = morph_omega(), T = morph_shift(),
           Ti = morph_shift_inv();

  // sigma
  CHECK(apply_symmetry(sg, xp(kA22, 3)) == lie(xp(kA22, 3)));
  CHECK(apply_symmetry(sg, xm(kA22, -2)) == lie(xm(kA22, -2)));
  CHECK(apply_symmetry(sg, Xp(1)) == lie(Xp(1), Rat(-1)));
  CHECK(apply_symmetry(sg, hh(kA22, 4)) == lie(hh(kA22, 4), Rat(-1)));
  CHECK(apply_symmetry(sg, cc(kA22)) == lie(cc(kA22), Rat(-1)));

  // omega
  CHECK(apply_symmetry(om, xp(kA11, 2)) == lie(xm(kA11, -2)));
  CHECK(apply_symmetry(om, Xp(3)) == lie(Xm(-3)));
  CHECK(apply_symmetry(om, hh(kA22, -1)) == lie(hh(kA22, 1)));
  CHECK(apply_symmetry(om, cc(kA11)) == lie(cc(kA11)));

  // T and T^-1
  CHECK(apply_symmetry(T, xp(kA22, 0)) == lie(xp(kA22, -1)));
  CHECK(apply_symmetry(T, xm(kA22, 0)) == lie(xm(kA22, 1)));
  CHECK(apply_symmetry(T, Xp(1)) == lie(Xp(-1), Rat(-1)));
  CHECK(apply_symmetry(T, Xm(1)) == lie(Xm(3), Rat(-1)));
  CHECK(apply_symmetry(T, hh(kA22, 0)) ==
        lie(hh(kA22, 0)) + lie(cc(kA22), Rat(-1)));
  CHECK(apply_symmetry(T, hh(kA22, 5)) == lie(hh(kA22, 5)));
  CHECK(apply_symmetry(Ti, hh(kA11, 0)) ==
        lie(hh(kA11, 0)) + lie(cc(kA11)));
  CHECK(apply_symmetry(Ti, xp(kA11, 2)) == lie(xp(kA11, 3)));

  // T T^-1 = id on a window
  for (const Generator& g : generators_in_window(kA22, -3, 3)) {
    CHECK(apply_chain({T, Ti}, g) == lie(g));
    CHECK(apply_chain({Ti, T}, g) == lie(g));
  }

  // lambda_m
  CHECK(apply_symmetry(morph_scale(3), xm(kA22, 2)) == lie(xm(kA22, 6)));
  CHECK(apply_symmetry(morph_scale(3), cc(kA22)) == lie(cc(kA22), Rat(3)));
  CHECK(apply_symmetry(morph_scale(-1), Xp(1)) == lie(Xp(-1)));
  CHECK(apply_symmetry(morph_scale(2), xp(kA11, 1)) == lie(xp(kA11, 2)));
  CHECK_THROWS_AS(apply_symmetry(morph_scale(2), xp(kA22, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_symmetry(morph_scale(0), xp(kA11, 1)),
                  std::invalid_argument);

  // embeddings a1_1 -> a2_2
  Morphism fd = morph_embed_double(), ff = morph_embed_fold();
  CHECK(apply_symmetry(fd, xp(kA11, 3)) == lie(xp(kA22, 6)));
  CHECK(apply_symmetry(fd, hh(kA11, -1)) == lie(hh(kA22, -2)));
  CHECK(apply_symmetry(fd, cc(kA11)) == lie(cc(kA22), Rat(2)));
  CHECK(apply_symmetry(ff, xp(kA11, 1)) == lie(Xp(1), make_rat(1, 4)));
  CHECK(apply_symmetry(ff, xm(kA11, 0)) == lie(Xm(1), make_rat(1, 4)));
  CHECK(apply_symmetry(ff, hh(kA11, 0)) ==
        lie(hh(kA22, 0), make_rat(1, 2)) + lie(cc(kA22), make_rat(-1, 4)));
  CHECK(apply_symmetry(ff, hh(kA11, 2)) == lie(hh(kA22, 4), make_rat(1, 2)));
  CHECK(apply_symmetry(ff, cc(kA11)) == lie(cc(kA22), make_rat(1, 2)));

  // shift on the eigenvalue model moves x and fixes h
  AlgebraId es = alg_eigen_shift(1);
  CHECK(apply_symmetry(T, make_gen(es, GenKind::XP, 0)) ==
        lie(make_gen(es, GenKind::XP, -1)));
  CHECK(apply_symmetry(Ti, make_gen(es, GenKind::XP, 0)) ==
        lie(make_gen(es, GenKind::XP, 1)));
  CHECK(apply_symmetry(T, make_gen(es, GenKind::H, 3)) ==
        lie(make_gen(es, GenKind::H, 3)));

  // undefined pairs
  CHECK_THROWS_AS(apply_symmetry(sg, make_gen(kSl2, GenKind::E, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_symmetry(fd, xp(kA22, 0)), std::invalid_argument);
  CHECK_THROWS_AS(apply_symmetry(ff, xp(kA22, 0)), std::invalid_argument);
  CHECK_THROWS_AS(apply_symmetry(sg, make_gen(es, GenKind::XP, 0)),
                  std::invalid_argument);
}

TEST_CASE("symmetries respect brackets") {
  std::vector<AlgebraId> algebras = {kA11, kA22};
  for (const AlgebraId& alg : algebras) {
    auto gens = generators_in_window(alg, -3, 3);
    std::vector<Morphism> autos = {morph_shift(), morph_shift_inv(),
                                   morph_scale(-1), morph_scale(3)};
    if (alg.kind == AlgKind::A1_1) {
      autos.push_back(morph_scale(2));
      autos.push_back(morph_embed_double());
      autos.push_back(morph_embed_fold());
    }
    std::vector<Morphism> antis = {morph_sigma(), morph_omega()};
    for (const Morphism& m : autos)
      for (const Generator& a : gens)
        for (const Generator& b : gens) {
          LieElement lhs = apply_symmetry(m, bracket(a, b));
          LieElement rhs =
              bracket(apply_symmetry(m, a), apply_symmetry(m, b));
          CHECK_MESSAGE(lhs == rhs,
                        fmt::format("{} on [{}, {}] in {}", m.name(),
                                    render_generator(a), render_generator(b),
                                    alg.name()));
        }
    for (const Morphism& m : antis)
      for (const Generator& a : gens)
        for (const Generator& b : gens) {
          LieElement lhs = apply_symmetry(m, bracket(a, b));
          LieElement rhs =
              bracket(apply_symmetry(m, b), apply_symmetry(m, a));
          CHECK_MESSAGE(lhs == rhs,
                        fmt::format("{} on [{}, {}] in {}", m.name(),
                                    render_generator(a), render_generator(b),
                                    alg.name()));
        }
  }
}

TEST_CASE("symmetry composition relations") {
  Morphism sg = morph_sigma(), om = morph_omega(), T = morph_shift(),
           Ti = morph_shift_inv();
  for (const AlgebraId& alg : {kA11, kA22}) {
    auto gens = generators_in_window(alg, -3, 3);
    for (const Generator& g : gens) {
      CHECK(apply_chain({sg, om}, g) == apply_chain({om, sg}, g));
      CHECK(apply_chain({sg, T}, g) == apply_chain({T, sg}, g));
      CHECK(apply_chain({sg, Ti}, g) == apply_chain({Ti, sg}, g));
      // lambda_m after T^(+/-1) equals T^(+/-m) after lambda_m
      for (int m : {-1, 3}) {
        Morphism lm = morph_scale(m);
        std::vector<Morphism> tm_then_lm(static_cast<size_t>(std::abs(m)),
                                         m > 0 ? T : Ti);
        tm_then_lm.insert(tm_then_lm.begin(), lm);
        CHECK(apply_chain({T, lm}, g) == apply_chain(tm_then_lm, g));
        std::vector<Morphism> tmi_then_lm(static_cast<size_t>(std::abs(m)),
                                          m > 0 ? Ti : T);
        tmi_then_lm.insert(tmi_then_lm.begin(), lm);
        CHECK(apply_chain({Ti, lm}, g) == apply_chain(tmi_then_lm, g));
      }
      // lambda_m lambda_n = lambda_(mn)
      for (int m : {-1, 3})
        for (int n : {-1, 3})
          CHECK(apply_chain({morph_scale(m), morph_scale(n)}, g) ==
                apply_chain({morph_scale(m * n)}, g));
    }
  }
}

TEST_CASE("evaluation onto sl2") {
  Generator e = make_gen(kSl2, GenKind::E, 0), f = make_gen(kSl2, GenKind::F, 0),
            h = make_gen(kSl2, GenKind::H0, 0);
  CHECK(ev(xp(kA11, 5)) == lie(e));
  CHECK(ev(xm(kA11, -3)) == lie(f));
  CHECK(ev(hh(kA11, -2)) == lie(h));
  CHECK(ev(cc(kA11)).is_zero());
  CHECK(ev(lie(xp(kA11, 1), Rat(2)) + lie(xp(kA11, 2), Rat(3))) ==
        lie(e, Rat(5)));
  CHECK_THROWS_AS(ev(xp(kA22, 0)), std::invalid_argument);
  // Evaluation is a Lie homomorphism on a window.
  for (const Generator& a : generators_in_window(kA11, -2, 2))
    for (const Generator& b : generators_in_window(kA11, -2, 2))
      CHECK(ev(bracket(a, b)) == bracket(ev(a), ev(b)));
}

TEST_CASE("loop-shift module action") {
  RatPolyW w1 = RatPolyW::w(1);
  CHECK(w_act(w1, xp(kA22, 0)) == lie(xp(kA22, 1)));
  CHECK(w_act(RatPolyW::w(2), xm(kA22, 1)) == lie(xm(kA22, 3)));
  CHECK(w_act(RatPolyW::one() + w1, hh(kA22, 0)) ==
        lie(hh(kA22, 0)) + lie(hh(kA22, 1)));
  CHECK(w_act(w1, Xm(1)) == lie(Xm(3), Rat(-1)));
  CHECK(w_act(RatPolyW::w(2), Xp(1)) == lie(Xp(5)));
  CHECK(w_act(RatPolyW::w(3), Xp(1)) == lie(Xp(7), Rat(-1)));
  CHECK(w_act(RatPolyW(), xp(kA22, 0)).is_zero());

  CHECK_THROWS_AS(w_act(w1, cc(kA22)), std::invalid_argument);
  CHECK_THROWS_AS(w_act(w1, xp(kA22, -1)), std::invalid_argument);
  CHECK_THROWS_AS(w_act(w1, hh(kA22, -2)), std::invalid_argument);
  CHECK_THROWS_AS(w_act(w1, xp(kA11, 0)), std::invalid_argument);
}

TEST_CASE("module action is compatible with the bracket tables") {
  // Four bracket families expressed through polynomial arguments; checked for
  // all monomial pairs xi1 = w^i, xi2 = w^j with i, j <= 4 and for a couple
  // of genuine sums.
  std::vector<RatPolyW> probes;
  for (int j = 0; j <= 4; ++j) probes.push_back(RatPolyW::w(j));
  probes.push_back(RatPolyW::one() + RatPolyW::w(1, Rat(2)));
  probes.push_back(RatPolyW::w(1) - RatPolyW::w(3, make_rat(1, 2)));

  for (const RatPolyW& xi1 : probes)
    for (const RatPolyW& xi2 : probes) {
      // [xi1(w^2).x_0^+/-, xi2(w^2).x_1^+/-] = -/+ (xi1 xi2)(-w).X_1^+/-
      {
        RatPolyW rhs = (xi1 * xi2).sign_flipped();
        CHECK(bracket(w_act(xi1.stretched(2), xp(kA22, 0)),
                      w_act(xi2.stretched(2), xp(kA22, 1))) ==
              w_act(rhs, Xp(1)).scaled(Rat(-1)));
        CHECK(bracket(w_act(xi1.stretched(2), xm(kA22, 0)),
                      w_act(xi2.stretched(2), xm(kA22, 1))) ==
              w_act(rhs, Xm(1)));
      }
      // [xi1(w).x_0^+, xi2(w).x_0^-] = (xi1 xi2)(w).h_0
      CHECK(bracket(w_act(xi1, xp(kA22, 0)), w_act(xi2, xm(kA22, 0))) ==
            w_act(xi1 * xi2, hh(kA22, 0)));
      // [xi1(w).x_0^+, xi2(w).X_1^-] = 4 (xi1(-w) xi2(-w^2)).x_1^-
      CHECK(bracket(w_act(xi1, xp(kA22, 0)), w_act(xi2, Xm(1))) ==
            w_act(xi1.sign_flipped() * xi2.sign_flipped().stretched(2),
                  xm(kA22, 1))
                .scaled(Rat(4)));
      // [xi1(w).h_0, xi2(w).x_0^+/-] = +/- (4 xi1(w) - 2 xi1(-w)) xi2(w).x_0^+/-
      {
        RatPolyW weight =
            xi1.scaled(Rat(4)) - xi1.sign_flipped().scaled(Rat(2));
        CHECK(bracket(w_act(xi1, hh(kA22, 0)), w_act(xi2, xp(kA22, 0))) ==
              w_act(weight * xi2, xp(kA22, 0)));
        CHECK(bracket(w_act(xi1, hh(kA22, 0)), w_act(xi2, xm(kA22, 0))) ==
              w_act(weight * xi2, xm(kA22, 0)).scaled(Rat(-1)));
      }
    }
}
