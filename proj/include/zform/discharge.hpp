#pragma once
// Builders that turn scalar series, shift-parameter series, and
// symmetric-function data into truncated series with enveloping-algebra
// coefficients.  These are the assembly bricks for the identity catalog:
// exponentials of generator-valued arguments, geometric shift operators
// applied to a base generator, imaginary-block exponentials, and Cartan
// binomials with rational coefficients.

#include <functional>
#include <utility>
#include <vector>

#include "zform/arith.hpp"
#include "zform/liealg.hpp"
#include "zform/polyw.hpp"
#include "zform/series.hpp"
#include "zform/symfun.hpp"
#include "zform/uea.hpp"

namespace zform {

using ScalarSeries = TruncSeries<Rat>;
using WSeries = TruncSeries<RatPolyW>;
using UEASeries = TruncSeries<UEAElement>;
using SymSeries = TruncSeries<SymFunc>;

// --- constructors ----------------------------------------------------------

ScalarSeries scalar_one(int cap);
// c * u^du v^dv
ScalarSeries scalar_mono(int cap, int du, int dv, const Rat& c = Rat(1));

WSeries w_one(int cap);
WSeries w_mono(int cap, int du, int dv, const RatPolyW& c);

UEASeries uea_series_one(int cap);
SymSeries sym_series_one(int cap);

// S (x) e : scalar series with every coefficient multiplied by e.
UEASeries tensor(const ScalarSeries& S, const UEAElement& e);
UEASeries tensor(const ScalarSeries& S, const LieElement& e);

// An element equation wrapped as a constant series of cap 0, so element-level
// checks flow through the same reporting path as series identities.
UEASeries const_series(const UEAElement& e);

// --- shift-parameter lifting -------------------------------------------------

// pows[k] = step^k applied to `base` (step is typically an index shift).
// `repeat` applies the step that many times per power of the parameter.
std::vector<LieElement> shift_powers(const Morphism& step, const Generator& base,
                                     int kmax, int repeat = 1);

// Powers of the loop parameter acting on `base` through the twisted loop
// module: short kinds step by 1 per power, long kinds step by 2 with an
// alternating sign, Cartan kinds step by 1.
std::vector<LieElement> w_module_powers(const Generator& base, int kmax);

// coefficient (i,j) of the result = sum_k [w^k] S(i,j) lifted through pows[k].
UEASeries discharge_w(const WSeries& S, const std::vector<LieElement>& pows);

// --- exponentials ------------------------------------------------------------

// exp(g S) = sum_k g^(k) S^k for a constant-term-free scalar series S.
UEASeries exp_gen(const Generator& g, const ScalarSeries& S);

// exp(e S) for a general coefficient element (uses 1/k! explicitly).
UEASeries exp_elem(const UEAElement& e, const ScalarSeries& S);

// Imaginary-block exponential
//   exp( power * sum_{r>=1} (-1)^{r-1} (weight(r)/r) scale^r
//                h_{side*step*r} u^{r du} v^{r dv} ).
// weight defaults to the constant 1.
struct ImagSpec {
  int side = 1;
  int step = 1;
  std::function<Rat(long)> weight;
  Rat scale = Rat(1);
  int du = 1;
  int dv = 0;
  Rat power = Rat(1);
};
UEASeries imag_exp(const AlgebraId& alg, int cap, const ImagSpec& spec);

// S^k / k!
UEASeries divided_power_series(const UEASeries& S, int k);

// Apply a Lie symmetry to every coefficient.
UEASeries map_coefficients(const Morphism& s, const UEASeries& S);

// --- Cartan helpers -----------------------------------------------------------

// C(z + offset, k) = prod_{j=0}^{k-1} (z + offset - j) / k!  for a Cartan
// element z (coefficients of z must commute pairwise).
UEAElement binomial_of(const LieElement& z, const Rat& offset, int k);

// (1 + S)^z = exp(z log(1+S)) for a central/Cartan exponent z and a
// constant-term-free scalar series S.
UEASeries one_plus_pow(const ScalarSeries& S, const LieElement& z);

// p_lambda -> prod_i h_{side*lambda_i} : symmetric functions into the
// one-sided imaginary block.
UEAElement sym_to_uea(const AlgebraId& alg, const SymFunc& f, int side = 1);
UEASeries sym_to_uea(const AlgebraId& alg, const SymSeries& S, int side = 1);

// Exponents k_m (m = 1..M) determined by
//   1 + 2u - u^2 = (1 - 2u - u^2)(1 + 6u^2 + u^4) prod_{m>0} (1 + u^m)^{4 k_m};
// computed from the logarithmic derivative recursion and asserted integral.
std::vector<long> pell_product_exponents(int M);

}  // namespace zform
