#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zform/liealg.hpp"
#include "zform/rational.hpp"
#include "zform/symfun.hpp"

namespace zform {

// ---------------------------------------------------------------------------
// PBW monomials and enveloping-algebra elements
// ---------------------------------------------------------------------------

// Total order on generators realizing the block structure of the integral
// triangular decompositions.  For A2_2 the blocks are
//   x^-_odd < X^- < x^-_even < h_{<0} < h_0 < c < h_{>0} < x^+_odd < X^+ < x^+_even
// and within a block the index increases.  A1_1 drops the long blocks, sl2 is
// f < h < e, and the model algebras order x < h (WeightPair), x < z < y
// (CentralPair), h_{<0} < h_0 < c < h_{>0} (Heisenberg), h < x (EigenShift).
int pbw_block(const Generator& g);
bool pbw_less(const Generator& a, const Generator& b);

// Ordered product of strictly pbw-increasing (generator, exponent >= 1)
// pairs; the empty sequence is the unit.
using PBWMonomial = std::vector<std::pair<Generator, int>>;

std::string render_monomial(const PBWMonomial& m);

// Sparse rational span of PBW monomials of one algebra, closed under the
// straightening product.
class UEAElement {
 public:
  UEAElement() = default;
  explicit UEAElement(PBWMonomial m, Rat c = Rat(1)) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == 1;
  }
  const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
  Rat coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  void add_term(const PBWMonomial& m, const Rat& c);

  UEAElement scaled(const Rat& s) const;
  friend UEAElement operator+(const UEAElement& a, const UEAElement& b);
  friend UEAElement operator-(const UEAElement& a, const UEAElement& b);
  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<PBWMonomial, Rat> terms_;
};

inline bool coeff_is_zero(const UEAElement& e) { return e.is_zero(); }
inline UEAElement coeff_scale(const UEAElement& e, const Rat& s) {
  return e.scaled(s);
}

UEAElement uea_one();
UEAElement uea_gen(const Generator& g);
// Degree <= 1 embedding of a Lie element.
UEAElement uea_lie(const LieElement& e);

std::string render_uea(const UEAElement& e);

// Product in PBW normal form; exact.  Straightening moves one generator at a
// time through the last run of a normal monomial via
//   t^e g = sum_k C(e,k) ((ad t)^k g) t^(e-k),
// recursing on the shorter/less-inverted words; results are memoized per
// thread, keyed by the current bracket-table epoch.
UEAElement multiply(const UEAElement& a, const UEAElement& b);
inline UEAElement operator*(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b);
}

// g^k / k! as a single monomial.
UEAElement divided_power(const Generator& g, int k);

// x^k for a general element (repeated product).
UEAElement power_of(const UEAElement& x, int k);

// C(alpha h_0 + beta c + gamma, k) expanded into PBW monomials.  The Cartan
// generator is h for sl2/WeightPair and h_0 for the affine and Heisenberg
// algebras; beta must be zero when the algebra has no central c.
UEAElement binomial_element(const AlgebraId& alg, int alpha, int beta,
                            int gamma, int k);

// ---------------------------------------------------------------------------
// Integral coordinates
// ---------------------------------------------------------------------------

// Two integral bases are supported.
//   Drinfeld: divided powers of the loop generators on the real blocks,
//     C(h_0,k)C(c,l) on the Cartan block, and the lattice family on each
//     imaginary block ({hat h_k} for A1_1, {tilde h_k} for A2_2).
//   Mitzman (A2_2 only): divided powers of x_r^+- and of y_r^+- = X_r^+-/4,
//     C(h_0,k)C((c-2h_0)/4,l) on the Cartan block, and the hat family on the
//     halved imaginary generators h_r/2.
enum class ZBasis { Drinfeld, Mitzman };

// Which lattice family the imaginary blocks are measured against.  ByAlgebra
// picks the family above; PlainHat forces the untwisted hat family on A2_2,
// which is deliberately wrong there (integrality then fails from degree 4 on)
// and exists so the sweep tests can demonstrate the twist is necessary.
enum class ImagFamily { ByAlgebra, PlainHat };

// One basis element: ordered product of the real divided powers left of the
// Cartan block in the PBW order (lowering families; for the model algebras,
// whatever the order puts first), a family monomial on the negative imaginary
// block, the Cartan binomial pair, a family monomial on the positive
// imaginary block, and the real divided powers right of the Cartan block.
// Exponents on real generators mean divided powers of the basis generator of
// the chosen basis (X^(k) in Drinfeld, y^(k) in Mitzman).
struct ZMonomial {
  std::vector<std::pair<Generator, int>> neg_real;
  Partition neg_imag;
  int bin_h = 0;
  int bin_c = 0;
  Partition pos_imag;
  std::vector<std::pair<Generator, int>> pos_real;

  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
  bool is_unit() const {
    return neg_real.empty() && neg_imag.empty() && bin_h == 0 && bin_c == 0 &&
           pos_imag.empty() && pos_real.empty();
  }
};

std::string render_zmonomial(const AlgebraId& alg, const ZMonomial& m,
                             ZBasis basis);

using IntegralCoordinates = std::map<ZMonomial, Rat>;

// Exact coordinates of e in the Drinfeld-style basis (any supported algebra).
IntegralCoordinates integral_coordinates(
    const UEAElement& e, ImagFamily fam = ImagFamily::ByAlgebra);

// Exact coordinates of an A2_2 element in the Mitzman basis.
IntegralCoordinates mitzman_coordinates(const UEAElement& e);

// Rebuild the element from coordinates; exact round trip.
UEAElement from_integral_coordinates(const AlgebraId& alg,
                                     const IntegralCoordinates& coords,
                                     ZBasis basis,
                                     ImagFamily fam = ImagFamily::ByAlgebra);

struct ZFormCheck {
  bool integral = true;
  // First non-integer coordinate in basis order, when not integral.
  std::optional<std::pair<ZMonomial, Rat>> witness;
};

ZFormCheck is_in_Z_form(const UEAElement& e, ZBasis basis = ZBasis::Drinfeld,
                        ImagFamily fam = ImagFamily::ByAlgebra);

// ---------------------------------------------------------------------------
// Morphisms and grading
// ---------------------------------------------------------------------------

// Monomial-wise image under a Lie morphism; antiautomorphisms reverse the
// factor order before re-straightening.
UEAElement apply_morphism(const Morphism& m, const UEAElement& e);

// Principal degree: +1 / -1 on the short raising/lowering families (e/f,
// x^+/x^-), +2 / -2 on the long families, 0 on Cartan and central elements.
int principal_degree(const Generator& g);
int principal_degree(const PBWMonomial& m);

// Homogeneous decomposition by principal degree.
std::map<int, UEAElement> grade(const UEAElement& e);

}  // namespace zform
