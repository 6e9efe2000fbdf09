#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zform/polyw.hpp"
#include "zform/rational.hpp"

namespace zform {

// The algebras handled by the library.  SL2, A1_1 (loop sl2 with center) and
// A2_2 (the twisted rank-1 affine algebra) are the main objects; the other
// four are small model algebras whose straightening identities isolate one
// mechanism each:
//   WeightPair(m):  [h, x] = m x                      (divided x binomial)
//   CentralPair(m): [x, y] = m z, z central           (divided^3)
//   Heisenberg(m,l): [h_r, h_s] = delta_{r+s,0} r (m + (-1)^r l) c
//   EigenShift(v):  [h_r, x_s] = a_r x_{r+s} with a_r = 2 (v=0) or the
//                   six-periodic pattern 6,2,6,-2,... (v=1), h's commuting
enum class AlgKind { SL2, A1_1, A2_2, WeightPair, CentralPair, Heisenberg, EigenShift };

struct AlgebraId {
  AlgKind kind = AlgKind::SL2;
  int m = 0;  // parameter (WeightPair/CentralPair/Heisenberg/EigenShift)
  int l = 0;  // second parameter (Heisenberg)

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
  std::string name() const;
};

inline AlgebraId alg_sl2() { return {AlgKind::SL2, 0, 0}; }
inline AlgebraId alg_a11() { return {AlgKind::A1_1, 0, 0}; }
inline AlgebraId alg_a22() { return {AlgKind::A2_2, 0, 0}; }
inline AlgebraId alg_weight_pair(int m) { return {AlgKind::WeightPair, m, 0}; }
inline AlgebraId alg_central_pair(int m) { return {AlgKind::CentralPair, m, 0}; }
inline AlgebraId alg_heisenberg(int m, int l) { return {AlgKind::Heisenberg, m, l}; }
inline AlgebraId alg_eigen_shift(int variant) { return {AlgKind::EigenShift, variant, 0}; }

// Generator kinds.  E/F/H0 are the finite sl2 triple; C the center; H(r),
// XP(r), XM(r) the loop generators; XXP(r), XXM(r) the long twisted
// generators, defined only for odd r.
enum class GenKind { E, F, H0, C, H, XP, XM, XXP, XXM };

struct Generator {
  AlgebraId alg;
  GenKind kind = GenKind::C;
  int index = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Validating factory; throws std::invalid_argument when the kind/index is
// not admissible for the algebra (e.g. even index on XXP/XXM).
Generator make_gen(const AlgebraId& alg, GenKind kind, int index = 0);

bool is_central(const Generator& g);
std::string render_generator(const Generator& g);

// A finite rational linear combination of generators of one algebra.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const Generator& g, Rat c = Rat(1)) {
    if (c != 0) terms_[g] = std::move(c);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Generator, Rat>& terms() const { return terms_; }
  Rat coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  void add_term(const Generator& g, const Rat& c);

  friend LieElement operator+(const LieElement& a, const LieElement& b);
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.terms_ == b.terms_;
  }
  LieElement scaled(const Rat& s) const;

 private:
  std::map<Generator, Rat> terms_;
};

inline bool coeff_is_zero(const LieElement& e) { return e.is_zero(); }
inline LieElement coeff_scale(const LieElement& e, const Rat& s) {
  return e.scaled(s);
}

std::string render_lie(const LieElement& e);

// Structure constants, antisymmetrically extended; throws on mixed algebras.
LieElement bracket(const Generator& a, const Generator& b);
LieElement bracket(const LieElement& a, const LieElement& b);

// Deliberate single-constant changes to the bracket tables, used by the
// self-check harness to confirm that the identity suite pins down every
// structure constant.  Id 0 restores the true tables; ids 1..5 each alter
// exactly one bracket family:
//   1: sl2       [e, f]            = 2h          (instead of h)
//   2: a1_1      [h_r, x_s^+]      = 3 x_{r+s}^+ (instead of 2)
//   3: a1_1      [x_r^+, x_{-r}^-] = h_0 + (r+1)c (instead of rc)
//   4: a2_2      [x_r^+, x_s^+]    = (-1)^(s+1) X_{r+s}^+ (sign flipped)
//   5: a2_2      [h_r, X_s^+], r even = 5 X_{r+s}^+ (instead of 4)
void set_bracket_mutation(int id);
int active_bracket_mutation();
// Monotone counter bumped on every set_bracket_mutation call; caches of
// bracket-derived data use it to detect staleness.
std::uint64_t bracket_table_epoch();

// Morphisms of the algebras.  Sigma and Omega are antiautomorphisms (they
// reverse products at the enveloping level); Shift (T), ShiftInv (T^-1) and
// Scale (lambda_m) are automorphisms/homomorphisms; EmbedDouble and
// EmbedFold are the two Lie embeddings A1_1 -> A2_2 (index doubling, and
// folding onto the long generators).
enum class MorphKind { Sigma, Omega, Shift, ShiftInv, Scale, EmbedDouble, EmbedFold };

struct Morphism {
  MorphKind kind = MorphKind::Sigma;
  int m = 1;  // Scale parameter

  bool reverses_products() const {
    return kind == MorphKind::Sigma || kind == MorphKind::Omega;
  }
  std::string name() const;
};

inline Morphism morph_sigma() { return {MorphKind::Sigma, 0}; }
inline Morphism morph_omega() { return {MorphKind::Omega, 0}; }
inline Morphism morph_shift() { return {MorphKind::Shift, 0}; }
inline Morphism morph_shift_inv() { return {MorphKind::ShiftInv, 0}; }
inline Morphism morph_scale(int m) { return {MorphKind::Scale, m}; }
inline Morphism morph_embed_double() { return {MorphKind::EmbedDouble, 0}; }
inline Morphism morph_embed_fold() { return {MorphKind::EmbedFold, 0}; }

// Image of a generator; throws std::invalid_argument when the morphism is
// not defined on the algebra (e.g. Scale with even m on A2_2, Sigma on SL2).
LieElement apply_symmetry(const Morphism& s, const Generator& g);
LieElement apply_symmetry(const Morphism& s, const LieElement& e);

// The polynomial-module action on the subalgebra L of A2_2 spanned by
// x_r^+/-, X_{2r+1}^+/-, h_r with r >= 0:  one power of w shifts the index
// by one on the x / h families, and by two with a sign flip on the long
// generators.  Throws when g lies outside L.
LieElement w_act(const RatPolyW& xi, const Generator& g);
LieElement w_act(const RatPolyW& xi, const LieElement& e);

// exp(ad z) applied to v; requires ad z to be nilpotent on v (throws after a
// step bound otherwise).  Used for the Weyl-group reflection probes.
LieElement exp_ad(const LieElement& z, const LieElement& v);

// Exhaustive Jacobi sweep over all generator triples with indices in
// [lo, hi]; reports the first violating triple.
struct JacobiReport {
  bool ok = true;
  std::string detail;
};
JacobiReport check_jacobi(const AlgebraId& alg, int lo, int hi);

// All generators of the algebra with index in [lo, hi] (central and finite
// generators included once).
std::vector<Generator> generators_in_window(const AlgebraId& alg, int lo, int hi);

// Evaluation A1_1 -> SL2: x_r^+/- to e/f, h_r to h, c to 0.
LieElement ev(const Generator& g);
LieElement ev(const LieElement& e);

}  // namespace zform
